#pragma once

#include <span>

#include "bocd/encoding.hpp"
#include "bocd/graph.hpp"

namespace bocd {

/// Weight of the community-score term in the second fitness function.
inline constexpr double kCommunityScoreWeight = 10.0;

struct ScoreParams {
    /// Power-mean exponent applied to each node's internal fraction.
    double r = 2.5;
};

/// Both minimized fitness values plus the quantities they are built from.
///   f1 = 1 - Q
///   f2 = (1 - Q) + 10 / (1 + CS)
struct ObjectivePair {
    double f1 = 0.0;
    double f2 = 0.0;
    double q = 0.0;
    double cs = 0.0;

    static ObjectivePair from(double q, double cs) {
        return {1.0 - q, (1.0 - q) + kCommunityScoreWeight / (1.0 + cs), q, cs};
    }

    friend bool operator==(const ObjectivePair&, const ObjectivePair&) = default;
};

/// Newman modularity, sum over communities of l_s/m - (d_s / 2m)^2.
/// Throws std::domain_error on an edgeless graph.
double modularity(const Graph& g, const Partition& p);

/// Community score: per community S, mu_i = k_in(i) / |S|,
/// M(S) = sum(mu_i^r) / |S|, v_S = sum over ordered pairs in S of A_ij,
/// and score(S) = M(S) * v_S; CS sums the scores.
double community_score(const Graph& g, const Partition& p, const ScoreParams& params = {});

/// Q and CS from a single pass over the adjacency.
ObjectivePair evaluate(const Graph& g, const Partition& p, const ScoreParams& params = {});
ObjectivePair evaluate(const Graph& g, const Chromosome& c, const ScoreParams& params = {});

/// Fitness of a whole population. The OpenMP version splits the loop over
/// individuals; `threads` <= 0 means the runtime default. Output is
/// identical to the serial reference for any thread count.
void evaluate_population(const Graph& g, std::span<const Chromosome> population, const ScoreParams& params,
                         std::span<ObjectivePair> out, int threads = 0);
void evaluate_population_serial(const Graph& g, std::span<const Chromosome> population,
                                const ScoreParams& params, std::span<ObjectivePair> out);

}  // namespace bocd
