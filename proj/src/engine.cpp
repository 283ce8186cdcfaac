#include "amoeba/engine.hpp"

#include "amoeba/error.hpp"

#include <random>

namespace amoeba {

Colony::Colony(std::vector<Amoeba> members) : members_(std::move(members))
{
    if (members_.empty())
        throw Error(ErrorKind::EmptyColony, "a colony needs at least one member");
}

Tree SequenceLog::replay() const
{
    Tree t = start;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        try {
            t = t.with_new_edges(steps[i].new_edges);
        } catch (const Error& e) {
            throw Error(ErrorKind::InconsistentLog, "step " + std::to_string(i) + ": " + e.what());
        }
    }
    return t;
}

GrowthState initial_state(const Amoeba& a, int ell)
{
    if (ell < 1)
        throw Error(ErrorKind::MalformedInput, "ell must be positive");
    GrowthState s{a.shape(), 0, {}};
    s.history.members = {a};
    s.history.ell = ell;
    s.history.start = a.shape();
    return s;
}

GrowthState initial_state(const Colony& c, int ell, const Tree& start)
{
    if (ell < 1)
        throw Error(ErrorKind::MalformedInput, "ell must be positive");
    GrowthState s{start, 0, {}};
    s.history.members = c.members();
    s.history.colony = true;
    s.history.ell = ell;
    s.history.start = start;
    return s;
}

std::vector<Candidate> list_candidates(const std::vector<Amoeba>& members, const Tree& t, int ell)
{
    std::vector<Candidate> out;
    for (std::size_t m = 0; m < members.size(); ++m) {
        for (CopyEmbedding& c : enumerate_copies(members[m], t)) {
            CopyStatus st = copy_status(c, t, ell);
            out.push_back({static_cast<int>(m), std::move(c), st});
        }
    }
    return out;
}

GrowthState apply_growth(const GrowthState& state, const Candidate& candidate, const Growth& growth)
{
    if (candidate.status.dead)
        throw Error(ErrorKind::DeadCopyChosen, "the chosen copy is dead");
    GrowthState next{growth.tree, state.step_index + 1, state.history};
    next.history.steps.push_back({candidate.member, candidate.copy, growth.new_edges});
    return next;
}

GrowthState grow_once(const GrowthState& state, CopyChoice choice)
{
    const int ell = state.history.ell;
    std::vector<Candidate> candidates = list_candidates(state.history.members, state.current, ell);
    if (choice.copy < 0 || static_cast<std::size_t>(choice.copy) >= candidates.size())
        throw Error(ErrorKind::IndexOutOfRange, "copy index " + std::to_string(choice.copy) + " out of range (" +
                                                    std::to_string(candidates.size()) + " copies)");
    const Candidate& cand = candidates[static_cast<std::size_t>(choice.copy)];
    if (cand.status.dead)
        throw Error(ErrorKind::DeadCopyChosen, "copy " + std::to_string(choice.copy) + " is dead");
    GrowthSet growths = minimal_growths(cand.copy, state.current, ell);
    if (choice.growth < 0 || static_cast<std::size_t>(choice.growth) >= growths.results.size())
        throw Error(ErrorKind::IndexOutOfRange, "growth index " + std::to_string(choice.growth) +
                                                    " out of range (" + std::to_string(growths.results.size()) +
                                                    " growths)");
    return apply_growth(state, cand, growths.results[static_cast<std::size_t>(choice.growth)]);
}

RunResult advance(GrowthState state, Strategy strategy, Budget budget)
{
    if (strategy.kind != Strategy::Kind::FirstAlive && strategy.kind != Strategy::Kind::Random)
        throw Error(ErrorKind::MalformedInput, "automatic runs need the first or random strategy");
    const int ell = state.history.ell;
    std::mt19937_64 rng(strategy.seed);

    RunResult result;
    result.outcome = RunOutcome::BudgetExhausted;
    while (true) {
        std::vector<Candidate> candidates = list_candidates(state.history.members, state.current, ell);
        std::vector<const Candidate*> alive;
        for (const Candidate& c : candidates)
            if (!c.status.dead)
                alive.push_back(&c);
        if (alive.empty()) {
            result.outcome = RunOutcome::ConfiningReached;
            break;
        }
        if (state.step_index >= budget.max_steps)
            break;
        const Candidate* pick = alive.front();
        if (strategy.kind == Strategy::Kind::Random)
            pick = alive[std::uniform_int_distribution<std::size_t>(0, alive.size() - 1)(rng)];
        GrowthSet growths = minimal_growths(pick->copy, state.current, ell);
        std::size_t g = 0;
        if (strategy.kind == Strategy::Kind::Random)
            g = std::uniform_int_distribution<std::size_t>(0, growths.results.size() - 1)(rng);
        const Growth& growth = growths.results[g];
        if (growth.tree.size() > static_cast<std::size_t>(budget.max_vertices))
            break;
        state = apply_growth(state, *pick, growth);
    }
    result.final_tree = state.current;
    result.steps = state.step_index;
    result.log = std::move(state.history);
    return result;
}

RunResult run_generation(const Amoeba& a, int ell, Strategy strategy, Budget budget)
{
    return advance(initial_state(a, ell), strategy, budget);
}

RunResult run_colony(const Colony& c, int ell, Strategy strategy, Budget budget, const Tree& start)
{
    return advance(initial_state(c, ell, start), strategy, budget);
}

} // namespace amoeba
