#include "amoeba/tree.hpp"

#include "amoeba/error.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace amoeba {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotACopy: return "NotACopy";
    case ErrorKind::InconsistentLog: return "InconsistentLog";
    case ErrorKind::DeadCopyChosen: return "DeadCopyChosen";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EmptyColony: return "EmptyColony";
    }
    return "Unknown";
}

namespace {

[[noreturn]] void not_a_tree(const std::string& why)
{
    throw Error(ErrorKind::NotATree, "not a tree: " + why);
}

} // namespace

Tree::Tree() : adjacency_(1) {}

Tree::Tree(std::size_t vertex_count, std::vector<Edge> edges)
{
    if (vertex_count == 0)
        not_a_tree("a tree needs at least one vertex");
    if (edges.size() != vertex_count - 1)
        not_a_tree("expected " + std::to_string(vertex_count - 1) + " edges, got " + std::to_string(edges.size()));

    adjacency_.assign(vertex_count, {});
    for (const Edge& e : edges) {
        if (e.u < 0 || static_cast<std::size_t>(e.v) >= vertex_count)
            not_a_tree("vertex index out of range");
        if (e.u == e.v)
            not_a_tree("self-loop at " + std::to_string(e.u));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        not_a_tree("duplicate edge");
    for (const Edge& e : edges) {
        adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& list : adjacency_)
        std::sort(list.begin(), list.end());
    edges_ = std::move(edges);

    // n-1 edges plus connectivity implies acyclic.
    std::vector<int> dist = distances_from(*this, 0);
    if (std::find(dist.begin(), dist.end(), -1) != dist.end())
        not_a_tree("graph is disconnected (or contains a cycle)");
}

Tree Tree::path(std::size_t vertex_count)
{
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < vertex_count; ++i)
        edges.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
    return Tree(vertex_count, std::move(edges));
}

Tree Tree::star(std::size_t leaves)
{
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= leaves; ++i)
        edges.emplace_back(0, static_cast<Vertex>(i));
    return Tree(leaves + 1, std::move(edges));
}

std::size_t Tree::max_degree() const
{
    std::size_t best = 0;
    for (const auto& list : adjacency_)
        best = std::max(best, list.size());
    return best;
}

bool Tree::has_edge(Vertex a, Vertex b) const
{
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= size() || static_cast<std::size_t>(b) >= size())
        return false;
    auto list = neighbors(a);
    return std::binary_search(list.begin(), list.end(), b);
}

Tree Tree::with_new_edges(std::span<const Edge> new_edges) const
{
    std::vector<Edge> edges = edges_;
    auto next = static_cast<Vertex>(size());
    for (const Edge& e : new_edges) {
        // Edge stores (min, max): the fresh vertex must be the larger one.
        if (e.v != next || e.u >= next)
            not_a_tree("new edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") does not attach fresh vertex " + std::to_string(next));
        edges.push_back(e);
        ++next;
    }
    return Tree(static_cast<std::size_t>(next), std::move(edges));
}

std::vector<int> distances_from(const Tree& t, Vertex source)
{
    std::vector<int> dist(t.size(), -1);
    std::queue<Vertex> queue;
    dist[static_cast<std::size_t>(source)] = 0;
    queue.push(source);
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop();
        for (Vertex y : t.neighbors(x)) {
            if (dist[static_cast<std::size_t>(y)] < 0) {
                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                queue.push(y);
            }
        }
    }
    return dist;
}

std::vector<Vertex> diametral_path(const Tree& t)
{
    auto farthest = [](const std::vector<int>& dist) {
        return static_cast<Vertex>(std::max_element(dist.begin(), dist.end()) - dist.begin());
    };
    Vertex a = farthest(distances_from(t, 0));
    std::vector<int> from_a = distances_from(t, a);
    Vertex b = farthest(from_a);

    std::vector<Vertex> path{b};
    Vertex cur = b;
    while (cur != a) {
        for (Vertex y : t.neighbors(cur)) {
            if (from_a[static_cast<std::size_t>(y)] == from_a[static_cast<std::size_t>(cur)] - 1) {
                cur = y;
                break;
            }
        }
        path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

TreeMetrics tree_metrics(const Tree& t)
{
    TreeMetrics m;
    std::vector<Vertex> path = diametral_path(t);
    m.diameter = static_cast<int>(path.size()) - 1;
    m.radius = (m.diameter + 1) / 2;

    std::vector<int> from_a = distances_from(t, path.front());
    std::vector<int> from_b = distances_from(t, path.back());
    // In a tree, ecc(v) is the distance to one of the two diametral endpoints.
    m.eccentricities.resize(t.size());
    for (std::size_t v = 0; v < t.size(); ++v)
        m.eccentricities[v] = std::max(from_a[v], from_b[v]);

    const auto mid = static_cast<std::size_t>(m.diameter / 2);
    m.centers.push_back(path[mid]);
    if (m.diameter % 2 == 1)
        m.centers.push_back(path[mid + 1]);
    std::sort(m.centers.begin(), m.centers.end());
    return m;
}

RootedTree full_tary_tree(int arity, int depth, std::size_t vertex_cap)
{
    if (arity < 1 || depth < 0)
        throw Error(ErrorKind::MalformedInput, "full_tary_tree needs arity >= 1 and depth >= 0");

    std::size_t total = 1;
    std::size_t level = 1;
    for (int d = 0; d < depth; ++d) {
        level *= static_cast<std::size_t>(arity);
        total += level;
        if (total > vertex_cap)
            throw Error(ErrorKind::BudgetExceeded, "full t-ary tree exceeds vertex cap");
    }

    std::vector<Edge> edges;
    edges.reserve(total - 1);
    std::vector<Vertex> frontier{0};
    Vertex next = 1;
    for (int d = 0; d < depth; ++d) {
        std::vector<Vertex> children;
        for (Vertex parent : frontier) {
            for (int c = 0; c < arity; ++c) {
                edges.emplace_back(parent, next);
                children.push_back(next++);
            }
        }
        frontier = std::move(children);
    }
    return {Tree(total, std::move(edges)), 0};
}

Tree spider(std::span<const int> legs)
{
    std::vector<Edge> edges;
    Vertex next = 1;
    for (int len : legs) {
        Vertex prev = 0;
        for (int i = 0; i < len; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Tree(static_cast<std::size_t>(next), std::move(edges));
}

} // namespace amoeba
