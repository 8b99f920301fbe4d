#include <gtest/gtest.h>

#include <sstream>

#include "bocd/benchmark.hpp"
#include "support.hpp"

namespace {

using bocd::BenchmarkSpec;

BenchmarkSpec spec(double mu, std::uint64_t seed) {
    BenchmarkSpec s;
    s.mixing = mu;
    s.seed = seed;
    return s;
}

struct Stats {
    double mean_degree;
    double mean_out_fraction;
    std::size_t cross_edges;
};

Stats measure(const bocd::PlantedGraph& pg) {
    const auto& g = pg.graph;
    double degree = 0, out_fraction = 0;
    std::size_t counted = 0, cross = 0;
    for (bocd::NodeId v = 0; v < g.node_count(); ++v) {
        degree += g.degree(v);
        std::size_t out = 0;
        for (auto u : g.neighbors(v)) out += pg.truth.community_of(u) != pg.truth.community_of(v);
        if (g.degree(v)) {
            out_fraction += double(out) / g.degree(v);
            ++counted;
        }
        cross += out;
    }
    return {degree / g.node_count(), out_fraction / counted, cross / 2};
}

TEST(Benchmark, DefaultShape) {
    const auto pg = bocd::generate(spec(0.2, 1));
    EXPECT_EQ(pg.graph.node_count(), 128u);
    ASSERT_EQ(pg.truth.community_count(), 4u);
    for (auto s : pg.truth.sizes()) EXPECT_EQ(s, 32u);
}

TEST(Benchmark, ProbabilitiesFromSpec) {
    const auto s = spec(0.2, 1);
    EXPECT_DOUBLE_EQ(s.p_in(), 0.8 * 16 / 31);
    EXPECT_DOUBLE_EQ(s.p_out(), 0.2 * 16 / 96);
}

TEST(Benchmark, ZeroMixingHasNoCrossEdges) {
    for (std::uint64_t seed : {1, 2, 3}) EXPECT_EQ(measure(bocd::generate(spec(0.0, seed))).cross_edges, 0u);
}

TEST(Benchmark, DegreeAndMixingStatistics) {
    // Expected degree is 16 and expected out-fraction is mu by construction;
    // 50 seeds average away the binomial noise.
    double degree = 0, mixing = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const auto st = measure(bocd::generate(spec(0.2, seed)));
        degree += st.mean_degree;
        mixing += st.mean_out_fraction;
    }
    EXPECT_GE(degree / 50, 15.0);
    EXPECT_LE(degree / 50, 17.0);
    EXPECT_GE(mixing / 50, 0.17);
    EXPECT_LE(mixing / 50, 0.23);
}

TEST(Benchmark, CrossEdgesGrowWithMixing) {
    const double mus[] = {0.1, 0.2, 0.3, 0.4, 0.5};
    double previous = -1;
    for (double mu : mus) {
        double total = 0;
        for (std::uint64_t seed = 1; seed <= 30; ++seed) total += measure(bocd::generate(spec(mu, seed))).cross_edges;
        EXPECT_GT(total / 30, previous) << "mu " << mu;
        previous = total / 30;
    }
}

TEST(Benchmark, SimpleGraphAndDeterministicSerialization) {
    const auto a = bocd::generate(spec(0.3, 9));
    const auto b = bocd::generate(spec(0.3, 9));
    std::ostringstream sa, sb;
    bocd::write_edge_list(sa, a.graph);
    bocd::write_edge_list(sb, b.graph);
    EXPECT_EQ(sa.str(), sb.str());
    for (auto [u, v] : a.graph.edges()) EXPECT_LT(u, v);
    EXPECT_NE(sa.str(), [] {
        std::ostringstream s;
        bocd::write_edge_list(s, bocd::generate(spec(0.3, 10)).graph);
        return s.str();
    }());
}

TEST(Benchmark, InvalidSpecs) {
    auto bad = [](auto mutate) {
        BenchmarkSpec s;
        mutate(s);
        return s;
    };
    EXPECT_THROW(bocd::generate(bad([](BenchmarkSpec& s) { s.nodes = 130; })), std::invalid_argument);
    EXPECT_THROW(bocd::generate(bad([](BenchmarkSpec& s) { s.mixing = 1.5; })), std::invalid_argument);
    EXPECT_THROW(bocd::generate(bad([](BenchmarkSpec& s) { s.avg_degree = 200; })), std::invalid_argument);
    // p_in = 40 / 31 > 1.
    try {
        bocd::generate(bad([](BenchmarkSpec& s) { s.avg_degree = 40; }));
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("p_in"), std::string::npos);
    }
}

}  // namespace
