#pragma once

#include "amoeba/tree.hpp"

#include <span>
#include <string>

namespace amoeba {

/// Graphviz rendering: `highlight` vertices are filled grey (a copy) and
/// `dashed` edges are drawn dashed (edges added by a growth). Output depends
/// only on the arguments.
std::string to_dot(const Tree& t, std::span<const Vertex> highlight = {}, std::span<const Edge> dashed = {},
                   std::span<const int> mult = {});

} // namespace amoeba
