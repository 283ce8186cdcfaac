#include "amoeba/area.hpp"

#include "amoeba/error.hpp"

#include <algorithm>

namespace amoeba {

std::vector<Area> new_areas(const Tree& before, const Tree& after, const CopyEmbedding& c)
{
    const std::vector<Vertex> verts = c.vertices();
    const auto old_n = static_cast<Vertex>(before.size());
    std::vector<Area> out;
    for (Vertex v : verts) {
        for (Vertex w : after.neighbors(v)) {
            if (std::binary_search(verts.begin(), verts.end(), w))
                continue;
            Area area;
            area.copy_vertex = v;
            area.attachment_root = w;
            bool has_new = false;
            // (vertex, parent, depth, all-old-so-far)
            std::vector<std::tuple<Vertex, Vertex, int, bool>> stack{{w, v, 0, w < old_n}};
            while (!stack.empty()) {
                auto [x, parent, d, old_path] = stack.back();
                stack.pop_back();
                area.subtree.push_back(x);
                area.depth = std::max(area.depth, d);
                if (x >= old_n)
                    has_new = true;
                else if (old_path)
                    area.original_depth = std::max(area.original_depth, d);
                for (Vertex y : after.neighbors(x))
                    if (y != parent)
                        stack.emplace_back(y, x, d + 1, old_path && y < old_n);
            }
            if (!has_new)
                continue;
            std::sort(area.subtree.begin(), area.subtree.end());
            out.push_back(std::move(area));
        }
    }
    return out;
}

std::vector<Violation> check_area_properties(const Tree& before, const Tree& after, const CopyEmbedding& c, int ell,
                                             std::span<const Edge> new_edges)
{
    try {
        if (!(before.with_new_edges(new_edges) == after))
            throw Error(ErrorKind::InconsistentLog, "grown tree is not the old tree plus the listed new edges");
        validate_copy(c, before);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::InconsistentLog)
            throw;
        throw Error(ErrorKind::InconsistentLog, e.what());
    }

    std::vector<Violation> out;
    const auto old_n = static_cast<Vertex>(before.size());
    std::vector<int> areas_at(after.size(), 0);
    for (const Area& area : new_areas(before, after, c)) {
        const std::string where = "area at " + std::to_string(area.attachment_root) + " (copy vertex " +
                                  std::to_string(area.copy_vertex) + ")";
        const int m = c.mult_at(area.copy_vertex);
        if (m == 0) {
            out.push_back({-1, "new-edges-off-root", where + " grows from a vertex of multiplicity 0"});
            continue;
        }
        if (++areas_at[static_cast<std::size_t>(area.copy_vertex)] > m)
            out.push_back({-1, "too-many-areas", where + ": more grown areas than the multiplicity"});
        if (area.original_depth > ell - 1)
            out.push_back({-1, "area-original-depth",
                           where + " meets the old tree in depth " + std::to_string(area.original_depth)});
        if (area.depth != ell - 1) {
            out.push_back({-1, "area-depth", where + " has depth " + std::to_string(area.depth) + ", expected " +
                                                 std::to_string(ell - 1)});
            continue;
        }
        // Leaves at maximal depth: exactly one, and it must be new.
        std::vector<Vertex> deepest;
        std::vector<std::tuple<Vertex, Vertex, int>> stack{{area.attachment_root, area.copy_vertex, 0}};
        while (!stack.empty()) {
            auto [x, parent, d] = stack.back();
            stack.pop_back();
            if (d == area.depth)
                deepest.push_back(x);
            for (Vertex y : after.neighbors(x))
                if (y != parent)
                    stack.emplace_back(y, x, d + 1);
        }
        if (deepest.size() != 1)
            out.push_back({-1, "area-path-not-unique",
                           where + " has " + std::to_string(deepest.size()) + " maximal root-to-leaf paths"});
        else if (deepest.front() < old_n)
            out.push_back({-1, "area-path-old", where + " has its maximal path inside the old tree"});
    }
    return out;
}

} // namespace amoeba
