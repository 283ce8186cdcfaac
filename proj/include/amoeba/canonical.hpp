#pragma once

#include "amoeba/tree.hpp"

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace amoeba {

/// Balanced-parenthesis encoding of a tree, rooted at its center. When labels
/// are supplied each node's label is written right after its opening
/// parenthesis. Equal codes <=> isomorphic (label-preserving) trees.
struct CanonicalCode {
    std::string text;

    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

CanonicalCode canonical_code(const Tree& t, std::span<const int> labels = {});

/// Encoding of the subtree hanging from `root` away from `blocked` (pass -1
/// to encode the whole tree rooted at `root`).
std::string rooted_code(const Tree& t, Vertex root, std::span<const int> labels = {}, Vertex blocked = -1);

struct VertexPartition {
    std::vector<std::vector<Vertex>> blocks; // each sorted; ordered by first element

    /// block index per vertex
    std::vector<int> block_index(std::size_t vertex_count) const;
};

/// Orbits of the (label-preserving) automorphism group.
VertexPartition automorphism_orbits(const Tree& t, std::span<const int> labels = {});

/// Orbits of the automorphisms of the rooted subtree hanging from `root` away
/// from `blocked` that fix `root`. Only vertices of that subtree are covered.
VertexPartition rooted_orbits(const Tree& t, Vertex root, Vertex blocked = -1, std::span<const int> labels = {});

} // namespace amoeba
