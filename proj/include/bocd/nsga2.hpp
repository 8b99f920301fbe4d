#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "bocd/encoding.hpp"
#include "bocd/graph.hpp"
#include "bocd/objectives.hpp"

namespace bocd {

struct Individual {
    Chromosome chromosome;
    ObjectivePair objectives;
    std::size_t rank = 0;  // 1 = non-dominated front
    double crowding = 0.0;
};

struct GaConfig {
    std::size_t population_size = 200;
    std::size_t generations = 3000;
    double crossover_prob = 0.7;
    double mutation_prob = 0.03;
    double r = 2.5;
    std::uint64_t seed = 1;
    /// Fitness-evaluation workers; 0 = OpenMP default. Never affects results.
    int threads = 0;

    /// Throws std::invalid_argument naming the first violated constraint.
    void validate() const;
};

struct GenerationRecord {
    std::size_t generation = 0;
    double best_q = 0.0;
    double best_cs = 0.0;
    std::size_t front_size = 0;
    /// Lexicographically smallest (f1, f2) in the population.
    double lexmin_f1 = 0.0;
    double lexmin_f2 = 0.0;
};

struct RunResult {
    /// Rank-1 individuals of the final population, one per distinct objective
    /// vector, in population order.
    std::vector<Individual> final_front;
    Individual best_by_q;
    std::vector<GenerationRecord> history;
};

/// Pareto dominance for minimization of (f1, f2).
bool dominates(const ObjectivePair& a, const ObjectivePair& b) noexcept;

/// Assigns `rank` on every individual and returns the fronts as index lists,
/// each in ascending index order.
std::vector<std::vector<std::size_t>> fast_nondominated_sort(std::span<Individual> pop);

/// Assigns `crowding` on the members of one front. Boundary positions after
/// a stable per-objective sort get +inf; an objective with zero spread adds
/// nothing to interior members.
void crowding_distance(std::span<Individual> pop, std::span<const std::size_t> front);

/// Winner among fixed contestants: lowest rank, then largest crowding, then
/// lowest population index.
std::size_t tournament_winner(std::span<const Individual> pop, std::span<const std::size_t> contestants);

inline constexpr std::size_t kTournamentSize = 4;

/// Draws kTournamentSize contestants uniformly with replacement and returns
/// the winner's index.
std::size_t tournament_select(std::span<const Individual> pop, Rng& rng);

using GenerationObserver = std::function<void(const GenerationRecord&)>;

/// Elitist NSGA-II over the gene-per-node encoding. Deterministic in
/// `config.seed`; the record for generation 0 describes the initial population.
RunResult evolve(const Graph& g, const GaConfig& config, const GenerationObserver& observer = {});

}  // namespace bocd
