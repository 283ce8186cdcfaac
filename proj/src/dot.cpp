#include "amoeba/dot.hpp"

#include <algorithm>
#include <sstream>

namespace amoeba {

std::string to_dot(const Tree& t, std::span<const Vertex> highlight, std::span<const Edge> dashed,
                   std::span<const int> mult)
{
    std::ostringstream os;
    os << "graph amoeba {\n  node [shape=circle, fontsize=10];\n";
    for (std::size_t v = 0; v < t.size(); ++v) {
        const auto x = static_cast<Vertex>(v);
        os << "  " << v << " [label=\"" << v;
        if (v < mult.size() && mult[v] > 0)
            os << "\\nm=" << mult[v];
        os << '"';
        if (std::find(highlight.begin(), highlight.end(), x) != highlight.end())
            os << ", style=filled, fillcolor=grey80";
        os << "];\n";
    }
    for (const Edge& e : t.edges()) {
        os << "  " << e.u << " -- " << e.v;
        if (std::find(dashed.begin(), dashed.end(), e) != dashed.end())
            os << " [style=dashed]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace amoeba
