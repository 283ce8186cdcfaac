#pragma once

#include "amoeba/copies.hpp"

#include <span>
#include <string>
#include <vector>

namespace amoeba {

struct Violation {
    int step = -1; // -1 when not tied to a log step
    std::string kind;
    std::string detail;
};

/// The component of (grown tree - copy vertices) that contains the first
/// vertex of an extension path.
struct Area {
    Vertex copy_vertex = 0;      // the root v_0 the path starts from
    Vertex attachment_root = 0;  // v_1
    std::vector<Vertex> subtree; // sorted
    int depth = 0;
    int original_depth = -1;     // depth of the part inside the pre-growth tree; -1 if empty
};

/// Areas at copy vertices that contain at least one new vertex.
std::vector<Area> new_areas(const Tree& before, const Tree& after, const CopyEmbedding& c);

/// Checks a single growth step: every area holding new edges hangs from a
/// root, has depth exactly ell-1 with a unique deepest leaf that is new, and
/// meets the old tree in depth at most ell-1. Throws InconsistentLog if
/// `after` is not `before` plus `new_edges`.
std::vector<Violation> check_area_properties(const Tree& before, const Tree& after, const CopyEmbedding& c, int ell,
                                             std::span<const Edge> new_edges);

} // namespace amoeba
