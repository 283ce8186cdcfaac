#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace amoeba {

using Vertex = int;

/// Undirected edge, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite unlabeled tree on vertices 0..size()-1.
///
/// Construction validates the tree property and throws Error(NotATree) on
/// failure. Edges are kept sorted; vertex indices are never changed by any
/// operation, so embeddings into a tree stay valid when it is grown.
class Tree {
public:
    /// The single-vertex tree.
    Tree();

    Tree(std::size_t vertex_count, std::vector<Edge> edges);

    static Tree path(std::size_t vertex_count);
    static Tree star(std::size_t leaves);

    std::size_t size() const noexcept { return adjacency_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    std::size_t degree(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }
    std::size_t max_degree() const;
    bool has_edge(Vertex a, Vertex b) const;

    /// Appends edges that each join an existing vertex to the next fresh
    /// vertex index (size(), size()+1, ... in order of first appearance).
    Tree with_new_edges(std::span<const Edge> new_edges) const;

    friend bool operator==(const Tree& a, const Tree& b) { return a.edges_ == b.edges_ && a.size() == b.size(); }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

/// BFS distances from `source`.
std::vector<int> distances_from(const Tree& t, Vertex source);

struct TreeMetrics {
    int diameter = 0;
    int radius = 0;
    std::vector<Vertex> centers;
    std::vector<int> eccentricities;
};

TreeMetrics tree_metrics(const Tree& t);

/// A longest path, endpoint to endpoint.
std::vector<Vertex> diametral_path(const Tree& t);

struct RootedTree {
    Tree tree;
    Vertex root = 0;
};

/// Full t-ary tree of the given depth, root at index 0.
RootedTree full_tary_tree(int arity, int depth, std::size_t vertex_cap = 1u << 22);

/// Spider with legs of the given lengths; the body is vertex 0.
Tree spider(std::span<const int> legs);

} // namespace amoeba
