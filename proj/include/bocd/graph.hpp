#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bocd {

using NodeId = std::uint32_t;
using CommunityId = std::uint32_t;

/// Malformed input file. Carries the 1-based line number when one applies.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    explicit ParseError(const std::string& what) : std::runtime_error(what), line_(0) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Undirected simple graph in CSR form. Immutable after construction.
///
/// Nodes are dense indices 0..N-1; each carries the external label it was
/// read with so output can use the original names.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list over `node_count` nodes. Duplicate and
    /// reversed pairs collapse; self-loops and out-of-range ids throw.
    static Graph from_edges(std::size_t node_count,
                            std::span<const std::pair<NodeId, NodeId>> edges,
                            std::vector<std::string> labels = {});

    std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

    std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

    /// Sorted neighbor list.
    std::span<const NodeId> neighbors(NodeId v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }

    bool has_edge(NodeId u, NodeId v) const;

    /// Each undirected edge once, as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<NodeId, NodeId>> edges() const;

    const std::string& label(NodeId v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<NodeId> find(const std::string& label) const;

private:
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> adjacency_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
};

/// Assignment of every node to exactly one community. Community ids are
/// contiguous 0..k-1, numbered by first appearance in node order.
class Partition {
public:
    Partition() = default;

    /// Renumbers arbitrary labels to 0..k-1 in first-appearance order.
    explicit Partition(std::span<const std::uint64_t> labels);
    explicit Partition(std::initializer_list<std::uint64_t> labels)
        : Partition(std::span<const std::uint64_t>(labels.begin(), labels.size())) {}

    /// Everything in one community.
    static Partition single(std::size_t node_count);

    std::size_t node_count() const noexcept { return membership_.size(); }
    std::size_t community_count() const noexcept { return sizes_.size(); }
    CommunityId community_of(NodeId v) const { return membership_[v]; }
    std::span<const CommunityId> membership() const noexcept { return membership_; }
    std::span<const std::size_t> sizes() const noexcept { return sizes_; }

    /// Member lists per community, each sorted ascending.
    std::vector<std::vector<NodeId>> communities() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<CommunityId> membership_;
    std::vector<std::size_t> sizes_;
};

/// Parses a whitespace-separated edge list. Labels map to indices in order of
/// first appearance; '#' lines and blank lines are skipped.
Graph load_edge_list(std::istream& in);

/// Parses "node community" lines; every node of `g` must appear exactly once.
Partition load_membership(std::istream& in, const Graph& g);

void write_edge_list(std::ostream& out, const Graph& g);

/// One "label community" line per node, community ids 1-based.
void write_membership(std::ostream& out, const Graph& g, const Partition& p);

/// Edges with both endpoints in community `s`.
std::size_t internal_edge_count(const Graph& g, const Partition& p, CommunityId s);

}  // namespace bocd
