#pragma once

#include "amoeba/amoeba.hpp"
#include "amoeba/tree.hpp"

#include <compare>
#include <vector>

namespace amoeba {

struct RootMult {
    Vertex vertex = 0;
    int mult = 0;

    friend auto operator<=>(const RootMult&, const RootMult&) = default;
};

/// A copy (H', m') of an amoeba inside a host tree: a subtree given by its
/// host edges plus the induced multiplicity of each of its vertices. Two
/// copies are the same copy iff both parts coincide; the witness isomorphism
/// is not recorded.
struct CopyEmbedding {
    std::vector<Edge> edges;     // sorted
    std::vector<RootMult> mult;  // one entry per copy vertex, sorted by vertex

    std::vector<Vertex> vertices() const;
    int mult_at(Vertex v) const;
    int total_mult() const;

    friend auto operator<=>(const CopyEmbedding&, const CopyEmbedding&) = default;
};

/// All copies of `a` in `host`, without duplicates, sorted by (edges, mult).
std::vector<CopyEmbedding> enumerate_copies(const Amoeba& a, const Tree& host);

/// Throws NotACopy unless `c` is a subtree of `host` with a multiplicity entry
/// for each of its vertices.
void validate_copy(const CopyEmbedding& c, const Tree& host);

/// True iff `c` is a valid copy in `host` isomorphic to `a` as a labeled tree.
bool is_copy_of(const CopyEmbedding& c, const Tree& host, const Amoeba& a);

/// The amoeba (H', m') that the copy describes, reindexed 0..|H'|-1 in
/// increasing host-vertex order.
Amoeba copy_as_amoeba(const CopyEmbedding& c);

struct CopyStatus {
    bool dead = true;
    int min_cost = 0;
};

/// Minimal number of edges an ell-growth of `c` adds to `host`.
CopyStatus copy_status(const CopyEmbedding& c, const Tree& host, int ell);

struct Growth {
    Tree tree;
    std::vector<Edge> new_edges; // each attaches the next fresh vertex index
};

/// All pairwise non-isomorphic ell-growths of a copy, sorted by canonical code.
struct GrowthSet {
    int cost = 0;
    std::vector<Growth> results;
};

GrowthSet minimal_growths(const CopyEmbedding& c, const Tree& host, int ell);

/// Height of the component of host - {from} containing `into` (measured from
/// `into`), capped at `cap`. `from` and `into` must be adjacent.
int hanging_height(const Tree& host, Vertex from, Vertex into, int cap);

} // namespace amoeba
