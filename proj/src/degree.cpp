#include "amoeba/degree.hpp"

#include <algorithm>
#include <set>

namespace amoeba {

DegreeReport degree_check(const Amoeba& a, int ell)
{
    DegreeReport r;
    r.applicable = ell == 1;
    const Tree& h = a.shape();
    r.total_mult = a.total_mult();
    r.max_degree = static_cast<int>(h.max_degree());
    for (std::size_t v = 0; v < h.size(); ++v) {
        r.tilde_d.push_back(static_cast<int>(h.degree(static_cast<Vertex>(v))) + a.mult()[v]);
        r.max_tilde = std::max(r.max_tilde, r.tilde_d.back());
    }

    std::set<std::pair<int, int>> arcs;
    for (std::size_t v = 0; v < h.size(); ++v) {
        const int d = static_cast<int>(h.degree(static_cast<Vertex>(v)));
        const int y = r.tilde_d[v];
        for (int x = std::max(1, d); x < y; ++x)
            arcs.emplace(x, y);
    }
    r.d_edges.assign(arcs.begin(), arcs.end());

    // Vertices of D are 1..M; with M = 0 there is nothing to reach.
    if (r.max_tilde >= 1) {
        std::vector<bool> reached(static_cast<std::size_t>(r.max_tilde) + 1, false);
        reached[1] = true;
        for (bool changed = true; changed;) {
            changed = false;
            for (auto [x, y] : r.d_edges) {
                if (reached[static_cast<std::size_t>(x)] && !reached[static_cast<std::size_t>(y)]) {
                    reached[static_cast<std::size_t>(y)] = true;
                    changed = true;
                }
            }
        }
        for (int x = r.max_tilde; x >= 1; --x) {
            if (reached[static_cast<std::size_t>(x)]) {
                r.q = x;
                break;
            }
        }
    }

    r.q_equals_m = r.q == r.max_tilde;
    r.degrees_bounded = r.max_degree <= r.max_tilde;
    r.delta_le_1_plus_k = r.max_degree <= 1 + r.total_mult;
    return r;
}

} // namespace amoeba
