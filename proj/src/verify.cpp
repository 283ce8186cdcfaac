#include "amoeba/verify.hpp"

#include "amoeba/error.hpp"

#include <algorithm>

namespace amoeba {

bool depth_bound_applies(const Amoeba& a, const Tree& start, int ell)
{
    return tree_metrics(a.shape()).diameter > 2 * ell - 4 || tree_metrics(start).diameter > 2 * ell - 6;
}

std::vector<Violation> check_depth_bound(const Tree& grown, std::size_t start_size, int ell)
{
    std::vector<Violation> out;
    const std::size_t n = grown.size();
    // Orient new vertices away from the start tree.
    std::vector<Vertex> parent(n, -1);
    std::vector<Vertex> order;
    std::vector<bool> seen(n, false);
    for (std::size_t v = 0; v < start_size; ++v) {
        seen[v] = true;
        order.push_back(static_cast<Vertex>(v));
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Vertex y : grown.neighbors(order[i])) {
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                parent[static_cast<std::size_t>(y)] = order[i];
                order.push_back(y);
            }
        }
    }

    // leaves[v][d]: leaves of the hanging subtree of v at distance d, for d < ell.
    const auto width = static_cast<std::size_t>(ell);
    std::vector<std::vector<int>> leaves(n);
    std::vector<int> height(n, 0);
    std::vector<bool> has_child(n, false);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto v = static_cast<std::size_t>(*it);
        if (v < start_size)
            break;
        auto& mine = leaves[v];
        mine.resize(width, 0);
        if (!has_child[v])
            mine[0] = 1;
        if (height[v] <= ell - 1) {
            for (std::size_t d = 0; d < width; ++d) {
                if (mine[d] >= 2) {
                    out.push_back({-1, "depth-bound",
                                   "new vertex " + std::to_string(v) + " has two leaf paths of length " +
                                       std::to_string(d) + " in a hanging subtree of depth " +
                                       std::to_string(height[v])});
                    break;
                }
            }
        }
        const auto p = static_cast<std::size_t>(parent[v]);
        if (p < start_size)
            continue;
        has_child[p] = true;
        height[p] = std::max(height[p], height[v] + 1);
        leaves[p].resize(width, 0);
        for (std::size_t d = 0; d + 1 < width; ++d)
            leaves[p][d + 1] += mine[d];
    }
    return out;
}

std::vector<Violation> verify_log(const SequenceLog& log)
{
    std::vector<Violation> out;
    if (log.members.empty()) {
        out.push_back({-1, "empty-colony", "log names no amoeba"});
        return out;
    }
    if (log.ell < 1) {
        out.push_back({-1, "bad-ell", "ell must be positive"});
        return out;
    }
    const int ell = log.ell;
    const bool check_bound = log.members.size() == 1 && depth_bound_applies(log.amoeba(), log.start, ell);

    Tree cur = log.start;
    for (std::size_t i = 0; i < log.steps.size(); ++i) {
        const LogStep& step = log.steps[i];
        const int s = static_cast<int>(i);
        auto report = [&](std::string kind, std::string detail) { out.push_back({s, std::move(kind), std::move(detail)}); };

        if (step.member < 0 || static_cast<std::size_t>(step.member) >= log.members.size()) {
            report("bad-member", "member index " + std::to_string(step.member) + " out of range");
            break;
        }
        const Amoeba& a = log.members[static_cast<std::size_t>(step.member)];

        Tree next;
        try {
            next = cur.with_new_edges(step.new_edges);
        } catch (const Error& e) {
            report("inconsistent-new-edges", e.what());
            break;
        }
        if (!is_copy_of(step.copy, cur, a)) {
            report("not-a-copy", "recorded copy is not a copy of the amoeba in the current tree");
            cur = std::move(next);
            continue;
        }

        CopyStatus status = copy_status(step.copy, cur, ell);
        if (status.dead)
            report("dead-copy", "a dead copy was grown");
        const auto added = static_cast<int>(step.new_edges.size());
        if (added != status.min_cost)
            report("growth-not-minimal", "added " + std::to_string(added) + " edges, minimum is " +
                                             std::to_string(status.min_cost));
        if (!copy_status(step.copy, next, ell).dead)
            report("copy-not-extended", "grown tree does not contain an extension of the copy");
        if (!status.dead && added == status.min_cost) {
            GrowthSet growths = minimal_growths(step.copy, cur, ell);
            CanonicalCode code = canonical_code(next);
            bool member = std::any_of(growths.results.begin(), growths.results.end(),
                                      [&](const Growth& g) { return canonical_code(g.tree) == code; });
            if (!member)
                report("growth-not-among-minimal", "grown tree is not one of the minimal growths");
        }
        for (Violation v : check_area_properties(cur, next, step.copy, ell, step.new_edges)) {
            v.step = s;
            out.push_back(std::move(v));
        }
        if (check_bound) {
            for (Violation v : check_depth_bound(next, log.start.size(), ell)) {
                v.step = s;
                out.push_back(std::move(v));
            }
        }
        cur = std::move(next);
    }
    return out;
}

} // namespace amoeba
