#include "bocd/benchmark.hpp"

#include "bocd/encoding.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace bocd {

double BenchmarkSpec::p_in() const {
    const double block = static_cast<double>(nodes / communities);
    return (1.0 - mixing) * avg_degree / (block - 1.0);
}

double BenchmarkSpec::p_out() const {
    const double block = static_cast<double>(nodes / communities);
    return mixing * avg_degree / (static_cast<double>(nodes) - block);
}

void BenchmarkSpec::validate() const {
    if (communities == 0) throw std::invalid_argument("communities must be positive");
    if (nodes == 0 || nodes % communities != 0)
        throw std::invalid_argument("nodes (" + std::to_string(nodes) + ") must be a positive multiple of communities (" +
                                    std::to_string(communities) + ")");
    if (nodes / communities < 2) throw std::invalid_argument("communities need at least 2 nodes each");
    if (!(avg_degree >= 0.0) || !(avg_degree < static_cast<double>(nodes)))
        throw std::invalid_argument("avg_degree must lie in [0, nodes)");
    if (!(mixing >= 0.0 && mixing <= 1.0)) throw std::invalid_argument("mixing must lie in [0, 1]");
    if (communities == 1 && mixing > 0.0)
        throw std::invalid_argument("mixing > 0 needs at least 2 communities");
    auto check = [](double p, const char* name, const std::string& how) {
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument(std::string(name) + " = " + std::to_string(p) + " outside [0, 1] (" + how + ")");
    };
    check(p_in(), "p_in", "(1 - mixing) * avg_degree / (community size - 1)");
    if (communities > 1) check(p_out(), "p_out", "mixing * avg_degree / (nodes - community size)");
}

PlantedGraph generate(const BenchmarkSpec& spec) {
    spec.validate();
    const std::size_t block = spec.nodes / spec.communities;
    const double p_in = spec.p_in();
    const double p_out = spec.communities > 1 ? spec.p_out() : 0.0;

    Rng rng(spec.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 0; i < spec.nodes; ++i) {
        for (NodeId j = i + 1; j < spec.nodes; ++j) {
            const double p = (i / block == j / block) ? p_in : p_out;
            if (unit(rng) < p) edges.emplace_back(i, j);
        }
    }

    std::vector<std::uint64_t> blocks(spec.nodes);
    for (std::size_t v = 0; v < spec.nodes; ++v) blocks[v] = v / block;
    return {Graph::from_edges(spec.nodes, edges), Partition(blocks)};
}

}  // namespace bocd
