#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "bocd/encoding.hpp"
#include "support.hpp"

namespace {

using bocd::Chromosome;
using bocd::Rng;

std::set<std::set<int>> clusters_one_based(const bocd::Partition& p) {
    std::set<std::set<int>> out;
    for (const auto& members : p.communities()) {
        std::set<int> s;
        for (auto v : members) s.insert(static_cast<int>(v) + 1);
        out.insert(s);
    }
    return out;
}

TEST(RandomChromosome, SingleNode) {
    Rng rng(3);
    EXPECT_EQ(bocd::random_chromosome(1, rng), Chromosome::from_one_based({1}));
}

TEST(RandomChromosome, RangeAndDeterminism) {
    Rng a(34), b(34);
    const auto c = bocd::random_chromosome(34, a);
    EXPECT_EQ(c, bocd::random_chromosome(34, b));
    ASSERT_EQ(c.size(), 34u);
    for (auto g : c.genes) EXPECT_LT(g, 34u);
}

TEST(RandomChromosome, UniformPerPosition) {
    // 10,000 draws, n = 10: each (position, value) count is Binomial(10000, 0.1),
    // mean 1000, sigma 30. Every cell within 4 sigma and a chi-squared bound per
    // position (9 dof; 99.99th percentile ~ 33.7).
    constexpr int n = 10, draws = 10000;
    Rng rng(2024);
    std::vector<std::vector<int>> counts(n, std::vector<int>(n, 0));
    for (int d = 0; d < draws; ++d) {
        const auto c = bocd::random_chromosome(n, rng);
        for (int i = 0; i < n; ++i) ++counts[i][c.genes[i]];
    }
    const double expected = draws / double(n);
    const double sigma = std::sqrt(draws * 0.1 * 0.9);
    for (int i = 0; i < n; ++i) {
        double chi2 = 0;
        for (int v = 0; v < n; ++v) {
            EXPECT_LT(std::abs(counts[i][v] - expected), 4 * sigma) << "pos " << i << " value " << v;
            chi2 += (counts[i][v] - expected) * (counts[i][v] - expected) / expected;
        }
        EXPECT_LT(chi2, 33.7) << "position " << i;
    }
}

TEST(Decode, WorkedKarateChromosome) {
    const auto c = Chromosome::from_one_based(testing_support::kWorkedChromosome);
    const auto p = bocd::decode(c);
    ASSERT_EQ(p.community_count(), 4u);
    std::set<std::set<int>> expected;
    for (const auto& cluster : testing_support::kWorkedClusters) expected.insert({cluster.begin(), cluster.end()});
    EXPECT_EQ(clusters_one_based(p), expected);
    // Cluster ids follow creation order.
    EXPECT_EQ(p.community_of(0), 0u);   // node 1
    EXPECT_EQ(p.community_of(4), 1u);   // node 5
    EXPECT_EQ(p.community_of(8), 2u);   // node 9
    EXPECT_EQ(p.community_of(23), 3u);  // node 24
}

TEST(Decode, SelfGenesAreSingletons) {
    const auto p = bocd::decode(Chromosome::from_one_based({1, 2, 3, 4}));
    EXPECT_EQ(p.community_count(), 4u);
}

TEST(Decode, PairwiseMerge) {
    const auto p = bocd::decode(Chromosome::from_one_based({2, 1, 4, 3}));
    EXPECT_EQ(clusters_one_based(p), (std::set<std::set<int>>{{1, 2}, {3, 4}}));
}

TEST(Decode, BothAssignedGeneIsIgnored) {
    // Genes 1->2 and 3->4 form two clusters; gene 4 -> 1 links two assigned
    // nodes and must not merge them.
    const auto p = bocd::decode(Chromosome::from_one_based({2, 2, 4, 1}));
    EXPECT_EQ(clusters_one_based(p), (std::set<std::set<int>>{{1, 2}, {3, 4}}));
}

// Reference: union-find over the genes that the sequential rule does not
// ignore. The decoded clusters must be its connected components.
oracle::Labels components_of_kept_genes(const Chromosome& c) {
    const std::size_t n = c.size();
    std::vector<bool> assigned(n, false);
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = c.genes[i];
        if (assigned[i] && assigned[j]) continue;
        assigned[i] = assigned[j] = true;
        parent[find(i)] = find(j);
    }
    oracle::Labels labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<int>(find(i));
    return labels;
}

TEST(DecodeProperty, ClustersAreComponentsOfKeptGenes) {
    Rng rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + trial % 40;
        const auto c = bocd::random_chromosome(n, rng);
        const auto p = bocd::decode(c);
        EXPECT_EQ(p, testing_support::to_partition(components_of_kept_genes(c)));
        // Contiguous ids, no empty community.
        for (auto s : p.sizes()) EXPECT_GT(s, 0u);
        EXPECT_EQ(bocd::decode(c), p);
    }
}

TEST(Crossover, WorkedExample) {
    const auto p1 = Chromosome::from_one_based({1, 2, 4, 5, 3, 5, 6, 1, 9, 4});
    const auto p2 = Chromosome::from_one_based({3, 6, 3, 2, 6, 4, 3, 1, 2, 9});
    const auto [c1, c2] = bocd::one_point_crossover(p1, p2, 5);
    EXPECT_EQ(c1, Chromosome::from_one_based({1, 2, 4, 5, 3, 4, 3, 1, 2, 9}));
    EXPECT_EQ(c2, Chromosome::from_one_based({3, 6, 3, 2, 6, 5, 6, 1, 9, 4}));
}

TEST(Crossover, IdenticalParentsAtLastSite) {
    const auto p = Chromosome::from_one_based({3, 1, 2, 2});
    const auto [c1, c2] = bocd::one_point_crossover(p, p, 3);
    EXPECT_EQ(c1, p);
    EXPECT_EQ(c2, p);
}

TEST(Crossover, LengthMismatchThrows) {
    const auto a = Chromosome::from_one_based({1, 2});
    const auto b = Chromosome::from_one_based({1, 2, 3});
    EXPECT_THROW(bocd::one_point_crossover(a, b, 1), std::invalid_argument);
    Rng rng(1);
    EXPECT_THROW(bocd::one_point_crossover(a, b, rng), std::invalid_argument);
}

TEST(CrossoverProperty, PositionalConservationAndClosure) {
    Rng rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + trial % 30;
        const auto a = bocd::random_chromosome(n, rng);
        const auto b = bocd::random_chromosome(n, rng);
        const auto [c1, c2] = bocd::one_point_crossover(a, b, rng);
        ASSERT_EQ(c1.size(), n);
        ASSERT_EQ(c2.size(), n);
        for (std::size_t i = 0; i < n; ++i) {
            EXPECT_EQ(std::multiset<bocd::NodeId>({c1.genes[i], c2.genes[i]}),
                      std::multiset<bocd::NodeId>({a.genes[i], b.genes[i]}));
            EXPECT_LT(c1.genes[i], n);
        }
        // Site in 1..N-1: first gene from the first parent, last from the second.
        EXPECT_EQ(c1.genes.front(), a.genes.front());
        EXPECT_EQ(c1.genes.back(), b.genes.back());
    }
}

TEST(Mutate, ZeroProbabilityIsIdentity) {
    Rng rng(1);
    const auto c = bocd::random_chromosome(50, rng);
    EXPECT_EQ(bocd::mutate(c, 0.0, rng), c);
}

TEST(Mutate, SingleNodeCertainMutation) {
    Rng rng(1);
    EXPECT_EQ(bocd::mutate(Chromosome::from_one_based({1}), 1.0, rng), Chromosome::from_one_based({1}));
}

TEST(Mutate, RejectsBadProbability) {
    Rng rng(1);
    EXPECT_THROW(bocd::mutate(Chromosome::from_one_based({1}), 1.5, rng), std::invalid_argument);
}

TEST(Mutate, ChangedGeneCountMatchesBinomial) {
    // A gene changes with probability p = pm * (1 - 1/N) (a redraw can hit the
    // old value). Over K chromosomes the mean changed count has expectation
    // N p and standard error sqrt(N p (1 - p) / K).
    constexpr std::size_t n = 128, chromosomes = 10000;
    constexpr double pm = 0.03;
    const double p = pm * (1.0 - 1.0 / n);
    const double expected = n * p;
    const double se = std::sqrt(n * p * (1 - p) / chromosomes);

    Rng rng(555);
    double total = 0;
    for (std::size_t k = 0; k < chromosomes; ++k) {
        const auto c = bocd::random_chromosome(n, rng);
        const auto m = bocd::mutate(c, pm, rng);
        for (std::size_t i = 0; i < n; ++i) total += c.genes[i] != m.genes[i];
    }
    EXPECT_NEAR(total / chromosomes, expected, 4 * se);
}

TEST(ChromosomeText, OneBasedDump) {
    const auto c = Chromosome::from_one_based({2, 1, 3});
    EXPECT_EQ(c.to_string(), "2,1,3");
    EXPECT_THROW(Chromosome::from_one_based({0, 1}), std::out_of_range);
    EXPECT_THROW(Chromosome::from_one_based({3, 1}), std::out_of_range);
}

}  // namespace
