#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bocd/encoding.hpp"
#include "bocd/graph.hpp"
#include "oracles.hpp"

namespace testing_support {

inline std::string data_path(const std::string& name) { return std::string(BOCD_DATA_DIR) + "/" + name; }

inline bocd::Graph load_graph(const std::string& name) {
    std::ifstream in(data_path(name));
    if (!in) throw std::runtime_error("missing data file " + data_path(name));
    return bocd::load_edge_list(in);
}

inline bocd::Partition load_truth(const std::string& name, const bocd::Graph& g) {
    std::ifstream in(data_path(name));
    if (!in) throw std::runtime_error("missing data file " + data_path(name));
    return bocd::load_membership(in, g);
}

/// Reindexes a graph whose labels are 1..N so that label L sits at index L-1.
inline bocd::Graph numeric_order(const bocd::Graph& g) {
    std::vector<std::pair<bocd::NodeId, bocd::NodeId>> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(std::stoul(g.label(u)) - 1, std::stoul(g.label(v)) - 1);
    return bocd::Graph::from_edges(g.node_count(), edges);
}

/// Karate club with label L at node index L-1, so 1-based chromosomes line up.
inline bocd::Graph karate() { return numeric_order(load_graph("karate.edges")); }

/// The worked 34-gene karate chromosome, 1-based.
inline const std::vector<int> kWorkedChromosome = {2,  3,  4,  14, 17, 17, 6,  14, 19, 19, 17, 14,
                                                   2,  9,  19, 9,  15, 8,  21, 8,  27, 1,  15, 26,
                                                   26, 32, 30, 26, 25, 3,  19, 4,  23, 9};

/// The four clusters it decodes to, 1-based node ids.
inline const std::vector<std::vector<int>> kWorkedClusters = {
    {1, 2, 3, 4, 14, 8, 12, 13, 18, 20, 22},
    {5, 17, 6, 7, 11},
    {9, 19, 10, 15, 16, 21, 27, 23, 30, 31, 33, 34},
    {24, 26, 25, 32, 28, 29},
};

/// Partition of karate node indices built from 1-based label clusters.
inline bocd::Partition partition_from_clusters(const bocd::Graph& g, const std::vector<std::vector<int>>& clusters) {
    std::vector<std::uint64_t> labels(g.node_count(), ~std::uint64_t{0});
    for (std::size_t c = 0; c < clusters.size(); ++c)
        for (int node : clusters[c]) labels[*g.find(std::to_string(node))] = c;
    return bocd::Partition(labels);
}

inline bocd::Graph to_graph(const oracle::SmallGraph& sg) {
    std::vector<std::pair<bocd::NodeId, bocd::NodeId>> edges;
    for (auto [u, v] : sg.edges) edges.emplace_back(u, v);
    return bocd::Graph::from_edges(sg.n, edges);
}

inline oracle::Labels to_labels(const bocd::Partition& p) {
    return {p.membership().begin(), p.membership().end()};
}

inline bocd::Partition to_partition(const oracle::Labels& labels) {
    return bocd::Partition(std::vector<std::uint64_t>(labels.begin(), labels.end()));
}

}  // namespace testing_support
