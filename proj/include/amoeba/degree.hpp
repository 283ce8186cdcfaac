#pragma once

#include "amoeba/amoeba.hpp"

#include <utility>
#include <vector>

namespace amoeba {

/// Degree-based necessary conditions for immortality under 1-extensions.
///
/// tilde_d(v) = d(v) + m(v) and M = max tilde_d. The digraph D on 1..M has an
/// arc (x, y) whenever some vertex v has y = tilde_d(v) and d(v) <= x < y;
/// q is the largest integer reachable from 1. An immortal amoeba has q = M,
/// d(v) <= M for all v, and Delta(H) <= 1 + k.
struct DegreeReport {
    bool applicable = true; // false when requested for ell != 1
    std::vector<int> tilde_d;
    int max_tilde = 0; // M
    std::vector<std::pair<int, int>> d_edges;
    int q = 0;
    int max_degree = 0;
    int total_mult = 0;

    bool q_equals_m = true;
    bool degrees_bounded = true;
    bool delta_le_1_plus_k = true;

    bool passes() const { return q_equals_m && degrees_bounded && delta_le_1_plus_k; }
    bool mortal_by_degree() const { return applicable && !passes(); }
};

DegreeReport degree_check(const Amoeba& a, int ell = 1);

} // namespace amoeba
