#pragma once

#include "amoeba/area.hpp"
#include "amoeba/engine.hpp"

#include <vector>

namespace amoeba {

/// Replays a log and reports every problem found: copies that are not copies
/// of the acting member or are dead, growths that are not minimal or not among
/// the minimal growths, area violations, and new vertices whose hanging
/// subtree is shallow yet branches into two equal-length leaf paths (which a
/// genuine sequence cannot produce once diam(H) > 2*ell-4 or
/// diam(T_0) > 2*ell-6).
std::vector<Violation> verify_log(const SequenceLog& log);

/// The equal-length-paths check alone, for `grown` against its start tree
/// (vertices 0..start_size-1).
std::vector<Violation> check_depth_bound(const Tree& grown, std::size_t start_size, int ell);

/// Whether the depth-bound exclusion applies to this amoeba and start tree.
bool depth_bound_applies(const Amoeba& a, const Tree& start, int ell);

} // namespace amoeba
