#pragma once

#include "amoeba/amoeba.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace amoeba {

/// C(d_1, ..., d_l): a central path p_1..p_l with d_i pendant leaves at p_i
/// (d_1 = d_l = 0), plus a set of 1-based central-path positions carrying
/// multiplicity 1.
struct CaterpillarSpec {
    std::vector<int> legs;
    std::vector<int> roots; // sorted, 1-based

    int path_length() const { return static_cast<int>(legs.size()); }

    friend bool operator==(const CaterpillarSpec&, const CaterpillarSpec&) = default;
};

/// Throws MalformedInput unless the spec satisfies its invariants.
void validate_spec(const CaterpillarSpec& spec);

/// "C(0,2,2,3,0) roots=1,3,4"
std::string format_spec(const CaterpillarSpec& spec);
CaterpillarSpec parse_spec(const std::string& text);

/// Tree with the central path on vertices 0..l-1 and legs numbered after.
Tree caterpillar_tree(const CaterpillarSpec& spec);
Amoeba caterpillar_amoeba(const CaterpillarSpec& spec);

/// Leg sequence along a longest path if every vertex lies within distance 1
/// of it, read in the lexicographically smaller direction; no roots.
std::optional<CaterpillarSpec> recognize_caterpillar(const Tree& t);

/// Spec of an amoeba from the caterpillar family: caterpillar shape,
/// multiplicities in {0,1}, and a longest path through every root. Absent
/// otherwise.
std::optional<CaterpillarSpec> caterpillar_spec_of(const Amoeba& a);

enum class Orientation { Decreasing, Increasing };

std::string_view to_string(Orientation o);

bool is_slow_sequence(std::span<const int> seq, Orientation orientation);

struct SlowVerdict {
    bool decreasing_ok = false;
    bool increasing_ok = false;
    std::vector<std::pair<Orientation, int>> mandated_missing;
    std::vector<std::pair<Orientation, int>> sequence_violations;

    bool slow() const { return decreasing_ok || increasing_ok; }
};

SlowVerdict is_slow_amoeba(const CaterpillarSpec& spec);

enum class CaterpillarDecision { Immortal, Mortal, NotApplicable };

std::string_view to_string(CaterpillarDecision d);

struct CaterpillarResult {
    CaterpillarDecision decision = CaterpillarDecision::NotApplicable;
    std::optional<CaterpillarSpec> spec;      // the amoeba's own spec
    std::optional<CaterpillarSpec> completed; // spec of the completion, when in the family
    std::optional<SlowVerdict> verdict;
    std::string reason;
};

/// Mortality under 1-extensions for the caterpillar family: immortal iff the
/// completion is slow.
CaterpillarResult decide_caterpillar(const Amoeba& a);

/// One 1-extension of the copy described by `spec`: every root gets a
/// pendant; pendants at p_1 / p_l lengthen the central path. The roots move
/// one position toward the growing end.
CaterpillarSpec shift_step(const CaterpillarSpec& spec);

} // namespace amoeba
