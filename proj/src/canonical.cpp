#include "amoeba/canonical.hpp"

#include "amoeba/error.hpp"

#include <algorithm>
#include <map>

namespace amoeba {

namespace {

// BFS layout of a rooted (or bicentred) tree. Top-level vertices have
// parent -1; traversal never enters `blocked`.
struct Layout {
    std::vector<Vertex> order;
    std::vector<Vertex> parent;
};

Layout layout_from(const Tree& t, std::span<const Vertex> tops, Vertex blocked)
{
    Layout l;
    l.parent.assign(t.size(), -2);
    for (Vertex top : tops) {
        l.parent[static_cast<std::size_t>(top)] = -1;
        l.order.push_back(top);
    }
    if (blocked >= 0)
        l.parent[static_cast<std::size_t>(blocked)] = -3;
    for (std::size_t i = 0; i < l.order.size(); ++i) {
        Vertex x = l.order[i];
        for (Vertex y : t.neighbors(x)) {
            if (l.parent[static_cast<std::size_t>(y)] == -2) {
                l.parent[static_cast<std::size_t>(y)] = x;
                l.order.push_back(y);
            }
        }
    }
    return l;
}

void check_labels(const Tree& t, std::span<const int> labels)
{
    if (!labels.empty() && labels.size() != t.size())
        throw Error(ErrorKind::MalformedInput, "label vector does not cover every vertex");
}

// Code strings for every vertex in the layout, children sorted.
std::vector<std::string> codes_for(const Tree& t, const Layout& l, std::span<const int> labels)
{
    std::vector<std::string> code(t.size());
    std::vector<std::vector<std::string*>> kids(t.size());
    for (auto it = l.order.rbegin(); it != l.order.rend(); ++it) {
        const auto v = static_cast<std::size_t>(*it);
        auto& ch = kids[v];
        std::sort(ch.begin(), ch.end(), [](const std::string* a, const std::string* b) { return *a < *b; });
        std::string s = "(";
        if (!labels.empty())
            s += std::to_string(labels[v]);
        for (const std::string* c : ch)
            s += *c;
        s += ')';
        code[v] = std::move(s);
        Vertex p = l.parent[v];
        if (p >= 0)
            kids[static_cast<std::size_t>(p)].push_back(&code[v]);
    }
    return code;
}

// AHU integer ids; equal ids <=> isomorphic labeled rooted subtrees.
std::vector<int> ahu_ids(const Tree& t, const Layout& l, std::span<const int> labels)
{
    std::vector<int> id(t.size(), -1);
    std::vector<std::vector<int>> kids(t.size());
    std::map<std::vector<int>, int> intern;
    for (auto it = l.order.rbegin(); it != l.order.rend(); ++it) {
        const auto v = static_cast<std::size_t>(*it);
        std::vector<int> key = std::move(kids[v]);
        std::sort(key.begin(), key.end());
        key.insert(key.begin(), labels.empty() ? 0 : labels[v]);
        auto [pos, inserted] = intern.try_emplace(std::move(key), static_cast<int>(intern.size()));
        id[v] = pos->second;
        Vertex p = l.parent[v];
        if (p >= 0)
            kids[static_cast<std::size_t>(p)].push_back(id[v]);
    }
    return id;
}

VertexPartition partition_from_layout(const Tree& t, const Layout& l, std::span<const int> labels)
{
    std::vector<int> id = ahu_ids(t, l, labels);
    std::vector<int> cls(t.size(), -1);
    std::map<std::pair<int, int>, int> intern;
    for (Vertex v : l.order) {
        const auto i = static_cast<std::size_t>(v);
        int parent_cls = l.parent[i] >= 0 ? cls[static_cast<std::size_t>(l.parent[i])] : -1;
        auto [pos, inserted] = intern.try_emplace({parent_cls, id[i]}, static_cast<int>(intern.size()));
        cls[i] = pos->second;
    }

    std::map<int, std::vector<Vertex>> grouped;
    for (Vertex v : l.order)
        grouped[cls[static_cast<std::size_t>(v)]].push_back(v);
    VertexPartition part;
    for (auto& [c, members] : grouped) {
        std::sort(members.begin(), members.end());
        part.blocks.push_back(std::move(members));
    }
    std::sort(part.blocks.begin(), part.blocks.end());
    return part;
}

} // namespace

std::vector<int> VertexPartition::block_index(std::size_t vertex_count) const
{
    std::vector<int> idx(vertex_count, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (Vertex v : blocks[b])
            idx[static_cast<std::size_t>(v)] = static_cast<int>(b);
    return idx;
}

std::string rooted_code(const Tree& t, Vertex root, std::span<const int> labels, Vertex blocked)
{
    check_labels(t, labels);
    const Vertex tops[] = {root};
    Layout l = layout_from(t, tops, blocked);
    return codes_for(t, l, labels)[static_cast<std::size_t>(root)];
}

CanonicalCode canonical_code(const Tree& t, std::span<const int> labels)
{
    check_labels(t, labels);
    TreeMetrics m = tree_metrics(t);
    std::string best;
    for (std::size_t i = 0; i < m.centers.size(); ++i) {
        std::string code = rooted_code(t, m.centers[i], labels);
        if (i == 0 || code < best)
            best = std::move(code);
    }
    return {std::move(best)};
}

VertexPartition automorphism_orbits(const Tree& t, std::span<const int> labels)
{
    check_labels(t, labels);
    // Every automorphism fixes the center set, so the tree is treated as
    // rooted at its center (or at the midpoint of its central edge).
    TreeMetrics m = tree_metrics(t);
    Layout l;
    if (m.centers.size() == 1) {
        l = layout_from(t, m.centers, -1);
    } else {
        // Hang each center on a virtual root; both are top-level nodes.
        l.parent.assign(t.size(), -2);
        Layout a = layout_from(t, std::span<const Vertex>(&m.centers[0], 1), m.centers[1]);
        Layout b = layout_from(t, std::span<const Vertex>(&m.centers[1], 1), m.centers[0]);
        l.order = a.order;
        l.order.insert(l.order.end(), b.order.begin(), b.order.end());
        for (Vertex v : a.order)
            l.parent[static_cast<std::size_t>(v)] = a.parent[static_cast<std::size_t>(v)];
        for (Vertex v : b.order)
            l.parent[static_cast<std::size_t>(v)] = b.parent[static_cast<std::size_t>(v)];
    }
    return partition_from_layout(t, l, labels);
}

VertexPartition rooted_orbits(const Tree& t, Vertex root, Vertex blocked, std::span<const int> labels)
{
    check_labels(t, labels);
    const Vertex tops[] = {root};
    return partition_from_layout(t, layout_from(t, tops, blocked), labels);
}

} // namespace amoeba
