#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bocd/graph.hpp"

namespace bocd {

using Rng = std::mt19937_64;

/// Gene-per-node representation: gene i holding j means nodes i and j share a
/// cluster. Stored 0-based; every gene is a valid node index.
struct Chromosome {
    std::vector<NodeId> genes;

    std::size_t size() const noexcept { return genes.size(); }

    /// From the 1-based notation used in dumps and worked examples.
    static Chromosome from_one_based(std::initializer_list<int> genes);
    static Chromosome from_one_based(const std::vector<int>& genes);

    /// Comma-separated, 1-based.
    std::string to_string() const;

    friend bool operator==(const Chromosome&, const Chromosome&) = default;
};

Chromosome random_chromosome(std::size_t n, Rng& rng);

/// Linear-time decoding. Genes are visited in index order: an unassigned
/// pair opens a new cluster, a half-assigned pair joins the assigned side,
/// and a gene whose two nodes are both already assigned is ignored.
Partition decode(const Chromosome& c);

/// child1 = p1[0, site) ++ p2[site, N), child2 the mirror. `site` is the
/// number of leading genes taken from the first parent, 1..N-1.
std::pair<Chromosome, Chromosome> one_point_crossover(const Chromosome& p1, const Chromosome& p2,
                                                      std::size_t site);

/// Same with the site drawn uniformly from 1..N-1. For N = 1 the parents
/// are returned unchanged.
std::pair<Chromosome, Chromosome> one_point_crossover(const Chromosome& p1, const Chromosome& p2, Rng& rng);

/// Each gene independently, with probability `pm`, redrawn uniformly from
/// all N values (the old value included).
Chromosome mutate(Chromosome c, double pm, Rng& rng);

}  // namespace bocd
