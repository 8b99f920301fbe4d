#include "bocd/objectives.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bocd {

namespace {

struct CommunityTotals {
    std::size_t internal_arcs = 0;  // ordered pairs, 2 * l_s
    std::size_t degree_sum = 0;     // d_s
    double mu_power_sum = 0.0;      // sum of k_in(i)^r, scaled later
};

std::vector<CommunityTotals> accumulate(const Graph& g, const Partition& p, double r) {
    if (p.node_count() != g.node_count()) throw std::invalid_argument("partition does not cover the graph");
    std::vector<CommunityTotals> totals(p.community_count());
    const auto member = p.membership();
    for (NodeId i = 0; i < g.node_count(); ++i) {
        const CommunityId s = member[i];
        std::size_t k_in = 0;
        for (NodeId j : g.neighbors(i)) k_in += member[j] == s;
        auto& t = totals[s];
        t.internal_arcs += k_in;
        t.degree_sum += g.degree(i);
        if (k_in) t.mu_power_sum += std::pow(static_cast<double>(k_in), r);
    }
    return totals;
}

double modularity_from(const std::vector<CommunityTotals>& totals, std::size_t m) {
    if (m == 0) throw std::domain_error("modularity is undefined for a graph without edges");
    const double two_m = 2.0 * static_cast<double>(m);
    double q = 0.0;
    for (const auto& t : totals) {
        const double frac = static_cast<double>(t.degree_sum) / two_m;
        q += static_cast<double>(t.internal_arcs) / two_m - frac * frac;
    }
    return q;
}

double community_score_from(const std::vector<CommunityTotals>& totals, std::span<const std::size_t> sizes,
                            double r) {
    double cs = 0.0;
    for (std::size_t s = 0; s < totals.size(); ++s) {
        if (totals[s].internal_arcs == 0) continue;
        const double size = static_cast<double>(sizes[s]);
        // mu_i^r = k_in^r / |S|^r, then M(S) divides once more by |S|.
        const double power_mean = totals[s].mu_power_sum / std::pow(size, r) / size;
        cs += power_mean * static_cast<double>(totals[s].internal_arcs);
    }
    return cs;
}

}  // namespace

double modularity(const Graph& g, const Partition& p) {
    return modularity_from(accumulate(g, p, 1.0), g.edge_count());
}

double community_score(const Graph& g, const Partition& p, const ScoreParams& params) {
    if (!(params.r > 0.0)) throw std::invalid_argument("power-mean exponent must be positive");
    return community_score_from(accumulate(g, p, params.r), p.sizes(), params.r);
}

ObjectivePair evaluate(const Graph& g, const Partition& p, const ScoreParams& params) {
    if (!(params.r > 0.0)) throw std::invalid_argument("power-mean exponent must be positive");
    const auto totals = accumulate(g, p, params.r);
    const double q = modularity_from(totals, g.edge_count());
    return ObjectivePair::from(q, community_score_from(totals, p.sizes(), params.r));
}

ObjectivePair evaluate(const Graph& g, const Chromosome& c, const ScoreParams& params) {
    if (c.size() != g.node_count()) throw std::invalid_argument("chromosome length differs from node count");
    return evaluate(g, decode(c), params);
}

void evaluate_population_serial(const Graph& g, std::span<const Chromosome> population,
                                const ScoreParams& params, std::span<ObjectivePair> out) {
    if (out.size() != population.size()) throw std::invalid_argument("output span size mismatch");
    for (std::size_t i = 0; i < population.size(); ++i) out[i] = evaluate(g, population[i], params);
}

void evaluate_population(const Graph& g, std::span<const Chromosome> population, const ScoreParams& params,
                         std::span<ObjectivePair> out, int threads) {
    if (out.size() != population.size()) throw std::invalid_argument("output span size mismatch");
    if (g.edge_count() == 0) throw std::domain_error("modularity is undefined for a graph without edges");
    for (const auto& c : population)
        if (c.size() != g.node_count()) throw std::invalid_argument("chromosome length differs from node count");
    if (!(params.r > 0.0)) throw std::invalid_argument("power-mean exponent must be positive");

    const auto n = static_cast<std::ptrdiff_t>(population.size());
#ifdef _OPENMP
    const int workers = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(workers)
#else
    (void)threads;
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = evaluate(g, population[i], params);
}

}  // namespace bocd
