#include "amoeba/amoeba.hpp"

#include "amoeba/error.hpp"

#include <algorithm>
#include <numeric>

namespace amoeba {

Amoeba::Amoeba(Tree shape, std::vector<int> mult) : shape_(std::move(shape)), mult_(std::move(mult))
{
    if (mult_.size() != shape_.size())
        throw Error(ErrorKind::MalformedInput, "mult has " + std::to_string(mult_.size()) + " entries for " +
                                                   std::to_string(shape_.size()) + " vertices");
    for (int m : mult_)
        if (m < 0)
            throw Error(ErrorKind::MalformedInput, "negative multiplicity");
    total_ = std::accumulate(mult_.begin(), mult_.end(), 0);
}

std::vector<Vertex> Amoeba::roots() const
{
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < mult_.size(); ++v)
        if (mult_[v] > 0)
            out.push_back(static_cast<Vertex>(v));
    return out;
}

std::vector<Vertex> Amoeba::root_list() const
{
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < mult_.size(); ++v)
        out.insert(out.end(), static_cast<std::size_t>(mult_[v]), static_cast<Vertex>(v));
    return out;
}

Amoeba Amoeba::from_root_list(Tree shape, const std::vector<Vertex>& roots)
{
    std::vector<int> mult(shape.size(), 0);
    for (Vertex r : roots) {
        if (r < 0 || static_cast<std::size_t>(r) >= mult.size())
            throw Error(ErrorKind::MalformedInput, "root index out of range");
        ++mult[static_cast<std::size_t>(r)];
    }
    return Amoeba(std::move(shape), std::move(mult));
}

CanonicalCode canonical_amoeba_code(const Amoeba& a)
{
    return canonical_code(a.shape(), a.mult());
}

Amoeba completion(const Amoeba& a)
{
    VertexPartition orbits = automorphism_orbits(a.shape());
    std::vector<int> mult = a.mult();
    for (const auto& block : orbits.blocks) {
        int best = 0;
        for (Vertex v : block)
            best = std::max(best, a.mult(v));
        for (Vertex v : block)
            mult[static_cast<std::size_t>(v)] = best;
    }
    return Amoeba(a.shape(), std::move(mult));
}

Tree ell_extension(const Amoeba& a, int ell)
{
    if (ell < 1)
        throw Error(ErrorKind::MalformedInput, "ell must be positive");
    std::vector<Edge> added;
    auto next = static_cast<Vertex>(a.shape().size());
    for (std::size_t v = 0; v < a.mult().size(); ++v) {
        for (int copy = 0; copy < a.mult()[v]; ++copy) {
            auto prev = static_cast<Vertex>(v);
            for (int step = 0; step < ell; ++step) {
                added.emplace_back(prev, next);
                prev = next++;
            }
        }
    }
    return a.shape().with_new_edges(added);
}

} // namespace amoeba
