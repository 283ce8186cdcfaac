#pragma once

#include "amoeba/amoeba.hpp"
#include "amoeba/copies.hpp"

#include <cstdint>
#include <vector>

namespace amoeba {

/// Dual budget; the vertex cap dominates. max_states bounds exhaustive search.
struct Budget {
    int max_steps = 500;
    int max_vertices = 512;
    long max_states = 100000;
};

struct Strategy {
    enum class Kind { FirstAlive, Random, Exhaustive, External };

    Kind kind = Kind::FirstAlive;
    std::uint64_t seed = 0;

    static Strategy first_alive() { return {Kind::FirstAlive, 0}; }
    static Strategy random(std::uint64_t seed) { return {Kind::Random, seed}; }
};

/// A nonempty set of amoebas; each growth step grows a copy of any member.
class Colony {
public:
    explicit Colony(std::vector<Amoeba> members);

    const std::vector<Amoeba>& members() const noexcept { return members_; }

private:
    std::vector<Amoeba> members_;
};

struct LogStep {
    int member = 0;
    CopyEmbedding copy;
    std::vector<Edge> new_edges;
};

/// Replayable record of a growth sequence: start tree, then the copy grown
/// and the new edges chosen at every step.
struct SequenceLog {
    std::vector<Amoeba> members; // one entry unless this is a colony log
    bool colony = false;
    int ell = 1;
    Tree start;
    std::vector<LogStep> steps;

    const Amoeba& amoeba() const { return members.front(); }

    /// The tree after all steps (throws InconsistentLog on bad edges).
    Tree replay() const;
};

struct GrowthState {
    Tree current;
    int step_index = 0;
    SequenceLog history;
};

/// Growth sequence origin: the amoeba's own shape (generation sequence).
GrowthState initial_state(const Amoeba& a, int ell);
/// Growth sequence of a colony from an arbitrary start tree.
GrowthState initial_state(const Colony& c, int ell, const Tree& start);

/// A copy of some member in the current tree, as offered to a strategy.
/// Candidates are ordered by member, then by enumerate_copies order.
struct Candidate {
    int member = 0;
    CopyEmbedding copy;
    CopyStatus status;
};

std::vector<Candidate> list_candidates(const std::vector<Amoeba>& members, const Tree& t, int ell);

struct CopyChoice {
    int copy = 0;   // index into list_candidates(...)
    int growth = 0; // index into minimal_growths(...).results
};

/// Applies one growth. Throws IndexOutOfRange or DeadCopyChosen.
GrowthState grow_once(const GrowthState& state, CopyChoice choice);

/// Applies a growth given by its candidate and growth, already computed.
GrowthState apply_growth(const GrowthState& state, const Candidate& candidate, const Growth& growth);

enum class RunOutcome { ConfiningReached, BudgetExhausted };

struct RunResult {
    SequenceLog log;
    RunOutcome outcome = RunOutcome::BudgetExhausted;
    Tree final_tree;
    int steps = 0;
};

/// Advances `state` with an automatic strategy until no alive copy remains or
/// the budget is hit. Step counts include steps already in the state.
RunResult advance(GrowthState state, Strategy strategy, Budget budget);

RunResult run_generation(const Amoeba& a, int ell, Strategy strategy, Budget budget);
RunResult run_colony(const Colony& c, int ell, Strategy strategy, Budget budget, const Tree& start);

} // namespace amoeba
