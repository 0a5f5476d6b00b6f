#pragma once

#include <compare>
#include <span>
#include <vector>

#include "pls/core.hpp"

namespace pls {

enum class Side { Left, Right };

/// Edge between left vertex `left` and right vertex `right`; both 1-based.
struct Edge {
    int left = 0;
    int right = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Bipartite graph with vertices 1..left_size and 1..right_size.
/// Isolated vertices are allowed. Adjacency lists are sorted ascending.
class BipartiteGraph {
public:
    BipartiteGraph(int left_size, int right_size, std::vector<Edge> edges);

    int left_size() const noexcept { return left_size_; }
    int right_size() const noexcept { return right_size_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    int size(Side side) const noexcept { return side == Side::Left ? left_size_ : right_size_; }
    const std::vector<int>& neighbors(Side side, int v) const;
    int degree(Side side, int v) const { return static_cast<int>(neighbors(side, v).size()); }
    bool has_edge(Edge e) const;

private:
    int left_size_;
    int right_size_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> left_adj_;
    std::vector<std::vector<int>> right_adj_;
};

/// Set of edges with pairwise distinct left endpoints and right endpoints.
class Matching {
public:
    Matching() = default;
    explicit Matching(std::vector<Edge> edges);

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return edges_.empty(); }
    bool contains(Edge e) const;
    bool covers(Side side, int v) const;

    auto begin() const noexcept { return edges_.begin(); }
    auto end() const noexcept { return edges_.end(); }

    bool operator==(const Matching&) const = default;

private:
    std::vector<Edge> edges_;
};

/// Hall's condition fails: |witness| > |N(witness)| on the targeted side.
class NoSaturation : public Error {
public:
    NoSaturation(Side side, std::vector<int> witness, std::vector<int> neighborhood);

    Side side() const noexcept { return side_; }
    const std::vector<int>& witness() const noexcept { return witness_; }
    const std::vector<int>& neighborhood() const noexcept { return neighborhood_; }

private:
    Side side_;
    std::vector<int> witness_;
    std::vector<int> neighborhood_;
};

/// Rows on the left, columns on the right, one edge per cell.
BipartiteGraph occupancy_graph(const CellSet& cells);

/// Matching with exactly |targets| edges covering every target on `side`.
///
/// Targets are processed in increasing order. For each one an augmenting
/// path is searched depth-first; at every visited vertex the neighbors are
/// first scanned for a free partner and only then for an augmenting
/// continuation, both in increasing index order.
Matching saturating_matching(const BipartiteGraph& g, Side side, std::span<const int> targets);

enum class Origin { M, N };

struct TaggedEdge {
    Edge edge;
    Origin origin;

    bool operator==(const TaggedEdge&) const = default;
};

struct Vertex {
    Side side;
    int index;

    auto operator<=>(const Vertex&) const = default;
};

/// One connected piece of M xor N.
struct AlternatingComponent {
    bool is_cycle = false;
    // Traversal order; vertices.size() == edges.size() + 1 for paths and
    // vertices.front() == vertices.back() for cycles.
    std::vector<Vertex> vertices;
    std::vector<TaggedEdge> edges;
};

/// Splits M xor N into maximal alternating paths and cycles.
///
/// Paths start from their smaller endpoint (left before right, then by
/// index). Cycles start at their smallest left vertex and leave it along its
/// M-edge. Components are listed by starting vertex.
std::vector<AlternatingComponent> symmetric_difference_components(const Matching& m, const Matching& n);

/// Combines a matching covering `x1` (left) and one covering `y1` (right)
/// into a single matching K within M u N covering x1 u y1, following the
/// case analysis on the components of M xor N. Every membership that the
/// case analysis relies on is checked; a failed check raises
/// PreconditionViolated.
Matching merge_matchings(const BipartiteGraph& g, const Matching& m, const Matching& n,
                         std::span<const int> x1, std::span<const int> y1);

} // namespace pls
