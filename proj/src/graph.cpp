#include "bocd/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace bocd {

Graph Graph::from_edges(std::size_t node_count,
                        std::span<const std::pair<NodeId, NodeId>> edges,
                        std::vector<std::string> labels) {
    if (labels.empty()) {
        labels.reserve(node_count);
        for (std::size_t v = 0; v < node_count; ++v) labels.push_back(std::to_string(v + 1));
    }
    if (labels.size() != node_count) throw std::invalid_argument("label count does not match node count");

    std::vector<std::pair<NodeId, NodeId>> arcs;
    arcs.reserve(2 * edges.size());
    for (auto [u, v] : edges) {
        if (u >= node_count || v >= node_count) throw std::out_of_range("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop on node " + labels[u]);
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

    Graph g;
    g.offsets_.assign(node_count + 1, 0);
    g.adjacency_.reserve(arcs.size());
    for (auto [u, v] : arcs) {
        ++g.offsets_[u + 1];
        g.adjacency_.push_back(v);
    }
    for (std::size_t v = 0; v < node_count; ++v) g.offsets_[v + 1] += g.offsets_[v];

    g.index_.reserve(node_count);
    for (std::size_t v = 0; v < node_count; ++v) {
        if (!g.index_.emplace(labels[v], static_cast<NodeId>(v)).second)
            throw std::invalid_argument("duplicate node label " + labels[v]);
    }
    g.labels_ = std::move(labels);
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count());
    for (NodeId u = 0; u < node_count(); ++u)
        for (NodeId v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::optional<NodeId> Graph::find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Partition::Partition(std::span<const std::uint64_t> labels) {
    std::unordered_map<std::uint64_t, CommunityId> renumber;
    membership_.reserve(labels.size());
    for (auto label : labels) {
        auto [it, inserted] = renumber.emplace(label, static_cast<CommunityId>(sizes_.size()));
        if (inserted) sizes_.push_back(0);
        membership_.push_back(it->second);
        ++sizes_[it->second];
    }
}

Partition Partition::single(std::size_t node_count) {
    std::vector<std::uint64_t> zeros(node_count, 0);
    return Partition(zeros);
}

std::vector<std::vector<NodeId>> Partition::communities() const {
    std::vector<std::vector<NodeId>> out(community_count());
    for (std::size_t c = 0; c < out.size(); ++c) out[c].reserve(sizes_[c]);
    for (NodeId v = 0; v < membership_.size(); ++v) out[membership_[v]].push_back(v);
    return out;
}

namespace {

// Splits on whitespace; returns false for blank and comment lines.
bool tokenize(const std::string& line, std::vector<std::string>& tokens) {
    tokens.clear();
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) tokens.push_back(std::move(tok));
    return !tokens.empty() && tokens.front().front() != '#';
}

}  // namespace

Graph load_edge_list(std::istream& in) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, NodeId> index;
    std::vector<std::pair<NodeId, NodeId>> edges;

    auto intern = [&](const std::string& label) {
        auto [it, inserted] = index.emplace(label, static_cast<NodeId>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    };

    std::string line;
    std::vector<std::string> tokens;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (!tokenize(line, tokens)) continue;
        if (tokens.size() != 2)
            throw ParseError(lineno, "expected 2 node labels, found " + std::to_string(tokens.size()));
        if (tokens[0] == tokens[1]) throw ParseError(lineno, "self-loop on node " + tokens[0]);
        NodeId u = intern(tokens[0]);
        NodeId v = intern(tokens[1]);
        edges.emplace_back(u, v);
    }
    const std::size_t n = labels.size();
    return Graph::from_edges(n, edges, std::move(labels));
}

Partition load_membership(std::istream& in, const Graph& g) {
    constexpr std::uint64_t unset = ~std::uint64_t{0};
    std::vector<std::uint64_t> assignment(g.node_count(), unset);
    std::unordered_map<std::string, std::uint64_t> community_index;

    std::string line;
    std::vector<std::string> tokens;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (!tokenize(line, tokens)) continue;
        if (tokens.size() != 2)
            throw ParseError(lineno, "expected 'node community', found " + std::to_string(tokens.size()) + " tokens");
        auto v = g.find(tokens[0]);
        if (!v) throw ParseError(lineno, "unknown node " + tokens[0]);
        if (assignment[*v] != unset) throw ParseError(lineno, "duplicate node " + tokens[0]);
        auto [it, _] = community_index.emplace(tokens[1], community_index.size());
        assignment[*v] = it->second;
    }
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (assignment[v] == unset) throw ParseError("missing node " + g.label(v));
    return Partition(assignment);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

void write_membership(std::ostream& out, const Graph& g, const Partition& p) {
    if (p.node_count() != g.node_count()) throw std::invalid_argument("partition does not cover the graph");
    for (NodeId v = 0; v < g.node_count(); ++v) out << g.label(v) << ' ' << p.community_of(v) + 1 << '\n';
}

std::size_t internal_edge_count(const Graph& g, const Partition& p, CommunityId s) {
    if (p.node_count() != g.node_count()) throw std::invalid_argument("partition does not cover the graph");
    if (s >= p.community_count()) throw std::out_of_range("unknown community id " + std::to_string(s));
    std::size_t arcs = 0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        if (p.community_of(u) != s) continue;
        for (NodeId v : g.neighbors(u))
            if (p.community_of(v) == s) ++arcs;
    }
    return arcs / 2;
}

}  // namespace bocd
