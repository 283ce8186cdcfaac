#include "amoeba/copies.hpp"

#include "amoeba/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace amoeba {

std::vector<Vertex> CopyEmbedding::vertices() const
{
    std::vector<Vertex> out;
    out.reserve(mult.size());
    for (const RootMult& rm : mult)
        out.push_back(rm.vertex);
    return out;
}

int CopyEmbedding::mult_at(Vertex v) const
{
    auto it = std::lower_bound(mult.begin(), mult.end(), v,
                               [](const RootMult& rm, Vertex x) { return rm.vertex < x; });
    return it != mult.end() && it->vertex == v ? it->mult : 0;
}

int CopyEmbedding::total_mult() const
{
    int k = 0;
    for (const RootMult& rm : mult)
        k += rm.mult;
    return k;
}

namespace {

// The pattern tree rooted at a center, in preorder, with sibling twins
// (children of one parent with identical labeled subtrees) chained so that
// their images can be forced into increasing order.
struct Pattern {
    std::vector<Vertex> order;
    std::vector<Vertex> parent;
    std::vector<Vertex> twin_before; // previous identical sibling, or -1
    std::vector<std::size_t> degree;
};

Pattern prepare_pattern(const Amoeba& a)
{
    const Tree& shape = a.shape();
    Pattern p;
    p.parent.assign(shape.size(), -1);
    p.twin_before.assign(shape.size(), -1);
    p.degree.resize(shape.size());
    for (std::size_t v = 0; v < shape.size(); ++v)
        p.degree[v] = shape.degree(static_cast<Vertex>(v));

    Vertex root = tree_metrics(shape).centers.front();
    std::vector<Vertex> stack{root};
    std::vector<bool> seen(shape.size(), false);
    seen[static_cast<std::size_t>(root)] = true;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        p.order.push_back(x);

        std::vector<std::pair<std::string, Vertex>> kids;
        for (Vertex y : shape.neighbors(x)) {
            if (seen[static_cast<std::size_t>(y)])
                continue;
            seen[static_cast<std::size_t>(y)] = true;
            p.parent[static_cast<std::size_t>(y)] = x;
            kids.emplace_back(rooted_code(shape, y, a.mult(), x), y);
        }
        std::sort(kids.begin(), kids.end());
        for (std::size_t i = 1; i < kids.size(); ++i)
            if (kids[i].first == kids[i - 1].first)
                p.twin_before[static_cast<std::size_t>(kids[i].second)] = kids[i - 1].second;
        // Push in reverse so the preorder visits kids in sorted order, which
        // places every twin after the sibling it is chained to.
        for (auto it = kids.rbegin(); it != kids.rend(); ++it)
            stack.push_back(it->second);
    }
    return p;
}

class CopyFinder {
public:
    CopyFinder(const Amoeba& a, const Tree& host)
        : a_(a), host_(host), pattern_(prepare_pattern(a)), image_(a.shape().size(), -1),
          used_(host.size(), false)
    {
    }

    std::vector<CopyEmbedding> run()
    {
        if (a_.shape().size() <= host_.size())
            extend(0);
        std::sort(found_.begin(), found_.end());
        found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
        return std::move(found_);
    }

private:
    void extend(std::size_t i)
    {
        if (i == pattern_.order.size()) {
            emit();
            return;
        }
        const Vertex p = pattern_.order[i];
        const auto pi = static_cast<std::size_t>(p);
        auto try_vertex = [&](Vertex x) {
            const auto xi = static_cast<std::size_t>(x);
            if (used_[xi] || host_.degree(x) < pattern_.degree[pi])
                return;
            Vertex twin = pattern_.twin_before[pi];
            if (twin >= 0 && x < image_[static_cast<std::size_t>(twin)])
                return;
            used_[xi] = true;
            image_[pi] = x;
            extend(i + 1);
            used_[xi] = false;
            image_[pi] = -1;
        };
        if (i == 0) {
            for (std::size_t x = 0; x < host_.size(); ++x)
                try_vertex(static_cast<Vertex>(x));
        } else {
            for (Vertex x : host_.neighbors(image_[static_cast<std::size_t>(pattern_.parent[pi])]))
                try_vertex(x);
        }
    }

    void emit()
    {
        CopyEmbedding c;
        for (const Edge& e : a_.shape().edges())
            c.edges.emplace_back(image_[static_cast<std::size_t>(e.u)], image_[static_cast<std::size_t>(e.v)]);
        std::sort(c.edges.begin(), c.edges.end());
        for (std::size_t v = 0; v < image_.size(); ++v)
            c.mult.push_back({image_[v], a_.mult()[v]});
        std::sort(c.mult.begin(), c.mult.end());
        found_.push_back(std::move(c));
    }

    const Amoeba& a_;
    const Tree& host_;
    Pattern pattern_;
    std::vector<Vertex> image_;
    std::vector<bool> used_;
    std::vector<CopyEmbedding> found_;
};

[[noreturn]] void not_a_copy(const std::string& why)
{
    throw Error(ErrorKind::NotACopy, "not a copy: " + why);
}

} // namespace

std::vector<CopyEmbedding> enumerate_copies(const Amoeba& a, const Tree& host)
{
    return CopyFinder(a, host).run();
}

void validate_copy(const CopyEmbedding& c, const Tree& host)
{
    if (c.mult.empty())
        not_a_copy("no vertices");
    for (std::size_t i = 0; i < c.mult.size(); ++i) {
        const RootMult& rm = c.mult[i];
        if (rm.vertex < 0 || static_cast<std::size_t>(rm.vertex) >= host.size())
            not_a_copy("vertex " + std::to_string(rm.vertex) + " outside host");
        if (rm.mult < 0)
            not_a_copy("negative multiplicity");
        if (i > 0 && c.mult[i - 1].vertex >= rm.vertex)
            not_a_copy("multiplicity entries must be sorted and distinct");
    }
    if (c.edges.size() + 1 != c.mult.size())
        not_a_copy("edge count does not match vertex count");
    if (!std::is_sorted(c.edges.begin(), c.edges.end()))
        not_a_copy("edges must be sorted");

    std::vector<Vertex> verts = c.vertices();
    auto index_of = [&](Vertex v) -> std::ptrdiff_t {
        auto it = std::lower_bound(verts.begin(), verts.end(), v);
        return it != verts.end() && *it == v ? it - verts.begin() : -1;
    };
    // Union-find over copy vertices; |E| = |V|-1 and no cycle => subtree.
    std::vector<std::ptrdiff_t> uf(verts.size());
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](std::ptrdiff_t x) {
        while (uf[static_cast<std::size_t>(x)] != x)
            x = uf[static_cast<std::size_t>(x)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
        return x;
    };
    for (const Edge& e : c.edges) {
        if (!host.has_edge(e.u, e.v))
            not_a_copy("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not in host");
        std::ptrdiff_t a = index_of(e.u);
        std::ptrdiff_t b = index_of(e.v);
        if (a < 0 || b < 0)
            not_a_copy("edge endpoint without multiplicity entry");
        a = find(a);
        b = find(b);
        if (a == b)
            not_a_copy("edges contain a cycle");
        uf[static_cast<std::size_t>(a)] = b;
    }
}

Amoeba copy_as_amoeba(const CopyEmbedding& c)
{
    std::vector<Vertex> verts = c.vertices();
    auto local = [&](Vertex v) {
        return static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    std::vector<Edge> edges;
    for (const Edge& e : c.edges)
        edges.emplace_back(local(e.u), local(e.v));
    std::vector<int> mult;
    for (const RootMult& rm : c.mult)
        mult.push_back(rm.mult);
    return Amoeba(Tree(verts.size(), std::move(edges)), std::move(mult));
}

bool is_copy_of(const CopyEmbedding& c, const Tree& host, const Amoeba& a)
{
    try {
        validate_copy(c, host);
    } catch (const Error&) {
        return false;
    }
    return canonical_amoeba_code(copy_as_amoeba(c)) == canonical_amoeba_code(a);
}

int hanging_height(const Tree& host, Vertex from, Vertex into, int cap)
{
    int best = 0;
    // (vertex, parent, depth)
    std::vector<std::tuple<Vertex, Vertex, int>> stack{{into, from, 0}};
    while (!stack.empty()) {
        auto [x, parent, depth] = stack.back();
        stack.pop_back();
        best = std::max(best, depth);
        if (best >= cap)
            return cap;
        for (Vertex y : host.neighbors(x))
            if (y != parent)
                stack.emplace_back(y, x, depth + 1);
    }
    return best;
}

CopyStatus copy_status(const CopyEmbedding& c, const Tree& host, int ell)
{
    if (ell < 1)
        throw Error(ErrorKind::MalformedInput, "ell must be positive");
    validate_copy(c, host);
    std::vector<Vertex> verts = c.vertices();
    auto in_copy = [&](Vertex v) { return std::binary_search(verts.begin(), verts.end(), v); };

    CopyStatus status;
    for (const RootMult& rm : c.mult) {
        if (rm.mult == 0)
            continue;
        std::vector<int> costs;
        for (Vertex w : host.neighbors(rm.vertex)) {
            if (in_copy(w))
                continue;
            int depth = ell == 1 ? 0 : hanging_height(host, rm.vertex, w, ell - 1);
            costs.push_back(std::max(0, ell - 1 - depth));
        }
        std::sort(costs.begin(), costs.end());
        for (int slot = 0; slot < rm.mult; ++slot)
            status.min_cost += static_cast<std::size_t>(slot) < costs.size() ? costs[static_cast<std::size_t>(slot)] : ell;
    }
    status.dead = status.min_cost == 0;
    return status;
}

} // namespace amoeba
