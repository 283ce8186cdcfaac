#pragma once

#include "amoeba/caterpillar.hpp"
#include "amoeba/degree.hpp"
#include "amoeba/engine.hpp"
#include "amoeba/free_trees.hpp"

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace amoeba {

enum class Verdict { Mortal, Immortal, Unknown };

std::string_view to_string(Verdict v);

namespace certificate {

/// A generation sequence ended here; the tree confines the amoeba.
struct ConfiningTreeReached {
    Tree tree;
    SequenceLog log;
};
/// Found by search over free trees.
struct ConfiningTreeFound {
    Tree tree;
};
struct MortalByDegree {
    DegreeReport report;
};
/// Every growth choice from the shape was explored and all sequences end.
struct ExhaustedStateSpace {
    long states = 0;
};
struct SlowCaterpillar {
    CaterpillarSpec spec; // of the completion
};
struct SurvivedBudget {
    int steps = 0;
    std::size_t final_size = 0;
};

} // namespace certificate

using Certificate = std::variant<certificate::ConfiningTreeReached, certificate::ConfiningTreeFound,
                                 certificate::MortalByDegree, certificate::ExhaustedStateSpace,
                                 certificate::SlowCaterpillar, certificate::SurvivedBudget>;

std::string_view certificate_kind(const Certificate& c);

struct Classification {
    Verdict verdict = Verdict::Unknown;
    Certificate certificate;
};

/// True iff `t` has a copy of `a` and every copy is dead.
bool is_confining(const Tree& t, const Amoeba& a, int ell);

/// Smallest confining tree on at most n_max vertices (first in enumeration
/// order at that size).
std::optional<Tree> find_confining_tree(const Amoeba& a, int ell, int n_max, int cap = kFreeTreeCap);

/// Every confining tree (one per isomorphism class) on at most n_max vertices.
std::vector<Tree> all_confining_trees(const Amoeba& a, int ell, int n_max, int cap = kFreeTreeCap);

struct ExhaustiveResult {
    bool mortal = false; // every sequence from the start terminates
    long states = 0;     // distinct trees expanded
    bool budget_hit = false;
    std::size_t largest = 0;
};

/// Depth-first search over all (copy, growth) choices, memoized on the
/// canonical code of the current tree.
ExhaustiveResult exhaustive_search(const Amoeba& a, int ell, const Tree& start, Budget budget);

/// Classification pipeline: degree conditions and the caterpillar criterion
/// (ell = 1), single-path simulation (ell <= 2), exhaustive search (ell >= 3).
Classification classify(const Amoeba& a, int ell, Budget budget);

/// Independently re-checks a classification's certificate.
bool recheck(const Classification& c, const Amoeba& a, int ell);

struct CensusRow {
    CanonicalCode code;
    Amoeba amoeba;
    Classification classification;
};

/// One row per isomorphism class of amoebas on at most n_max vertices with
/// total multiplicity at most k_max.
std::vector<CensusRow> run_census(int n_max, int k_max, int ell, Budget budget, int parallel = 1,
                                  int cap = kFreeTreeCap);

/// The amoebas run_census classifies, in row order.
std::vector<Amoeba> census_amoebas(int n_max, int k_max, int cap = kFreeTreeCap);

} // namespace amoeba
