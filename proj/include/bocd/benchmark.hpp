#pragma once

#include <cstdint>

#include "bocd/graph.hpp"

namespace bocd {

/// Planted l-partition: `communities` equal blocks of consecutive nodes,
/// each node expecting (1 - mixing) * avg_degree edges inside its block and
/// mixing * avg_degree edges outside.
struct BenchmarkSpec {
    std::size_t nodes = 128;
    std::size_t communities = 4;
    double avg_degree = 16.0;
    double mixing = 0.0;
    std::uint64_t seed = 1;

    double p_in() const;
    double p_out() const;

    /// Throws std::invalid_argument naming the violated constraint.
    void validate() const;
};

struct PlantedGraph {
    Graph graph;
    Partition truth;
};

/// Every intra-block pair is an edge with probability p_in, every
/// inter-block pair with p_out. Pairs are drawn in (i, j), i < j order, so
/// the output is a pure function of the spec.
PlantedGraph generate(const BenchmarkSpec& spec);

}  // namespace bocd
