#pragma once

#include "amoeba/canonical.hpp"
#include "amoeba/tree.hpp"

#include <vector>

namespace amoeba {

/// A tree together with a multiplicity per vertex. Vertices of positive
/// multiplicity are roots; each root v asks for mult(v) extra paths.
class Amoeba {
public:
    Amoeba(Tree shape, std::vector<int> mult);

    const Tree& shape() const noexcept { return shape_; }
    const std::vector<int>& mult() const noexcept { return mult_; }
    int mult(Vertex v) const { return mult_[static_cast<std::size_t>(v)]; }

    /// k(A): sum of multiplicities.
    int total_mult() const noexcept { return total_; }
    std::vector<Vertex> roots() const;

    /// Alternate root-list form (s_1, ..., s_k): each root repeated mult times.
    std::vector<Vertex> root_list() const;
    static Amoeba from_root_list(Tree shape, const std::vector<Vertex>& roots);

    friend bool operator==(const Amoeba&, const Amoeba&) = default;

private:
    Tree shape_;
    std::vector<int> mult_;
    int total_ = 0;
};

/// Code equal iff the amoebas are isomorphic respecting multiplicities.
CanonicalCode canonical_amoeba_code(const Amoeba& a);

/// Multiplicities raised to the maximum over each automorphism orbit of the
/// unlabeled shape.
Amoeba completion(const Amoeba& a);

/// The shape plus mult(v) fresh paths of `ell` edges at every vertex v.
/// New vertices are numbered after the shape's, root by root.
Tree ell_extension(const Amoeba& a, int ell);

} // namespace amoeba
