#include "amoeba/copies.hpp"

#include "amoeba/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace amoeba {

namespace {

// A place where missing path edges are appended: `length` fresh vertices
// chained from `at`.
struct Attachment {
    Vertex at = 0;
    int length = 0;
};

using Plan = std::vector<Attachment>;

// A hanging component of host - V(copy) at a root.
struct Component {
    Vertex entry = 0;
    int depth = 0;
    int cost = 0;
    std::string shape; // rooted code from `entry`
};

std::vector<Vertex> deepest_vertices(const Tree& host, Vertex root, Vertex entry, int depth)
{
    std::vector<Vertex> out;
    std::vector<std::tuple<Vertex, Vertex, int>> stack{{entry, root, 0}};
    while (!stack.empty()) {
        auto [x, parent, d] = stack.back();
        stack.pop_back();
        if (d == depth)
            out.push_back(x);
        for (Vertex y : host.neighbors(x))
            if (y != parent)
                stack.emplace_back(y, x, d + 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Deepest vertices of a component, one per orbit of its rooted automorphisms.
std::vector<Vertex> deepest_representatives(const Tree& host, Vertex root, const Component& comp)
{
    std::vector<Vertex> deepest = deepest_vertices(host, root, comp.entry, comp.depth);
    if (deepest.size() <= 1)
        return deepest;
    std::vector<int> block = rooted_orbits(host, comp.entry, root).block_index(host.size());
    std::vector<Vertex> reps;
    std::set<int> seen;
    for (Vertex x : deepest)
        if (seen.insert(block[static_cast<std::size_t>(x)]).second)
            reps.push_back(x);
    return reps;
}

// All ways to pick `need` components out of `tied`, up to swapping
// components with identical rooted shape.
void choose_tied(const std::vector<Component>& tied, std::size_t need,
                 std::vector<std::vector<Component>>& out)
{
    std::map<std::string, std::vector<Component>> groups;
    for (const Component& c : tied)
        groups[c.shape].push_back(c);
    std::vector<const std::vector<Component>*> group_list;
    for (const auto& [shape, members] : groups)
        group_list.push_back(&members);

    std::vector<Component> current;
    auto rec = [&](auto&& self, std::size_t g, std::size_t remaining) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        if (g == group_list.size())
            return;
        const auto& members = *group_list[g];
        for (std::size_t take = std::min(remaining, members.size()) + 1; take-- > 0;) {
            for (std::size_t i = 0; i < take; ++i)
                current.push_back(members[i]);
            self(self, g + 1, remaining - take);
            current.resize(current.size() - take);
        }
    };
    rec(rec, 0, need);
}

// Minimum-cost plans for one root.
std::vector<Plan> root_plans(const Tree& host, const std::vector<Vertex>& copy_vertices, Vertex root, int mult,
                             int ell)
{
    std::vector<Component> comps;
    for (Vertex w : host.neighbors(root)) {
        if (std::binary_search(copy_vertices.begin(), copy_vertices.end(), w))
            continue;
        Component c;
        c.entry = w;
        c.depth = hanging_height(host, root, w, ell - 1);
        c.cost = ell - 1 - c.depth;
        comps.push_back(std::move(c));
    }
    std::sort(comps.begin(), comps.end(),
              [](const Component& a, const Component& b) { return std::tie(a.cost, a.entry) < std::tie(b.cost, b.entry); });

    const auto need = static_cast<std::size_t>(mult);
    std::vector<std::vector<Component>> selections;
    int fresh = 0;
    if (comps.size() >= need) {
        const int threshold = comps[need - 1].cost;
        std::vector<Component> must;
        std::vector<Component> tied;
        for (const Component& c : comps) {
            if (c.cost < threshold)
                must.push_back(c);
            else if (c.cost == threshold)
                tied.push_back(c);
        }
        if (threshold == 0) {
            // Zero-cost slots add nothing; the choice is immaterial.
            selections.push_back({});
        } else {
            for (Component& c : tied)
                c.shape = rooted_code(host, c.entry, {}, root);
            std::vector<std::vector<Component>> picks;
            choose_tied(tied, need - must.size(), picks);
            for (auto& pick : picks) {
                std::vector<Component> sel;
                for (const Component& c : must)
                    if (c.cost > 0)
                        sel.push_back(c);
                sel.insert(sel.end(), pick.begin(), pick.end());
                selections.push_back(std::move(sel));
            }
        }
    } else {
        std::vector<Component> sel;
        for (const Component& c : comps)
            if (c.cost > 0)
                sel.push_back(c);
        selections.push_back(std::move(sel));
        fresh = mult - static_cast<int>(comps.size());
    }

    std::vector<Plan> plans;
    for (auto& sel : selections) {
        std::sort(sel.begin(), sel.end(), [](const Component& a, const Component& b) { return a.entry < b.entry; });
        std::vector<Plan> partial{{}};
        for (const Component& c : sel) {
            std::vector<Plan> next;
            for (Vertex at : deepest_representatives(host, root, c)) {
                for (const Plan& p : partial) {
                    Plan q = p;
                    q.push_back({at, c.cost});
                    next.push_back(std::move(q));
                }
            }
            partial = std::move(next);
        }
        for (Plan& p : partial) {
            for (int f = 0; f < fresh; ++f)
                p.push_back({root, ell});
            plans.push_back(std::move(p));
        }
    }
    return plans;
}

} // namespace

GrowthSet minimal_growths(const CopyEmbedding& c, const Tree& host, int ell)
{
    CopyStatus status = copy_status(c, host, ell);
    GrowthSet set;
    set.cost = status.min_cost;
    if (status.dead) {
        set.results.push_back({host, {}});
        return set;
    }

    std::vector<Vertex> verts = c.vertices();
    std::vector<Plan> combined{{}};
    for (const RootMult& rm : c.mult) {
        if (rm.mult == 0)
            continue;
        std::vector<Plan> options = root_plans(host, verts, rm.vertex, rm.mult, ell);
        std::vector<Plan> next;
        for (const Plan& base : combined) {
            for (const Plan& opt : options) {
                Plan p = base;
                p.insert(p.end(), opt.begin(), opt.end());
                next.push_back(std::move(p));
            }
        }
        combined = std::move(next);
    }

    std::map<CanonicalCode, Growth> unique;
    for (const Plan& plan : combined) {
        std::vector<Edge> added;
        auto next = static_cast<Vertex>(host.size());
        for (const Attachment& at : plan) {
            Vertex prev = at.at;
            for (int i = 0; i < at.length; ++i) {
                added.emplace_back(prev, next);
                prev = next++;
            }
        }
        Tree grown = host.with_new_edges(added);
        CanonicalCode code = canonical_code(grown);
        unique.try_emplace(std::move(code), Growth{std::move(grown), std::move(added)});
    }
    for (auto& [code, g] : unique)
        set.results.push_back(std::move(g));
    return set;
}

} // namespace amoeba
