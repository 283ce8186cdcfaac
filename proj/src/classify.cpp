#include "amoeba/classify.hpp"

#include "amoeba/error.hpp"
#include "amoeba/verify.hpp"

#include <atomic>
#include <set>
#include <thread>
#include <unordered_map>

namespace amoeba {

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::Mortal: return "Mortal";
    case Verdict::Immortal: return "Immortal";
    case Verdict::Unknown: return "Unknown";
    }
    return "Unknown";
}

std::string_view certificate_kind(const Certificate& c)
{
    struct Namer {
        std::string_view operator()(const certificate::ConfiningTreeReached&) const { return "ConfiningTreeReached"; }
        std::string_view operator()(const certificate::ConfiningTreeFound&) const { return "ConfiningTreeFound"; }
        std::string_view operator()(const certificate::MortalByDegree&) const { return "MortalByDegree"; }
        std::string_view operator()(const certificate::ExhaustedStateSpace&) const { return "ExhaustedStateSpace"; }
        std::string_view operator()(const certificate::SlowCaterpillar&) const { return "SlowCaterpillar"; }
        std::string_view operator()(const certificate::SurvivedBudget&) const { return "SurvivedBudget"; }
    };
    return std::visit(Namer{}, c);
}

bool is_confining(const Tree& t, const Amoeba& a, int ell)
{
    std::vector<CopyEmbedding> copies = enumerate_copies(a, t);
    if (copies.empty())
        return false;
    for (const CopyEmbedding& c : copies)
        if (!copy_status(c, t, ell).dead)
            return false;
    return true;
}

std::optional<Tree> find_confining_tree(const Amoeba& a, int ell, int n_max, int cap)
{
    if (n_max > cap)
        throw Error(ErrorKind::BudgetExceeded, "confining-tree search capped at " + std::to_string(cap) + " vertices");
    for (int n = static_cast<int>(a.shape().size()); n <= n_max; ++n) {
        FreeTreeGenerator gen(n, cap);
        while (auto t = gen.next())
            if (is_confining(*t, a, ell))
                return t;
    }
    return std::nullopt;
}

std::vector<Tree> all_confining_trees(const Amoeba& a, int ell, int n_max, int cap)
{
    if (n_max > cap)
        throw Error(ErrorKind::BudgetExceeded, "confining-tree search capped at " + std::to_string(cap) + " vertices");
    std::vector<Tree> out;
    for (int n = static_cast<int>(a.shape().size()); n <= n_max; ++n) {
        FreeTreeGenerator gen(n, cap);
        while (auto t = gen.next())
            if (is_confining(*t, a, ell))
                out.push_back(std::move(*t));
    }
    return out;
}

namespace {

class Explorer {
public:
    Explorer(const Amoeba& a, int ell, Budget budget) : a_(a), ell_(ell), budget_(budget) {}

    ExhaustiveResult run(const Tree& start)
    {
        result_.mortal = explore(start, 0);
        return result_;
    }

private:
    // True iff every sequence from t terminates; false on budget exhaustion.
    bool explore(const Tree& t, int depth)
    {
        result_.largest = std::max(result_.largest, t.size());
        CanonicalCode code = canonical_code(t);
        if (proved_.count(code.text))
            return true;
        if (++result_.states > budget_.max_states) {
            result_.budget_hit = true;
            return false;
        }
        for (const CopyEmbedding& c : enumerate_copies(a_, t)) {
            if (copy_status(c, t, ell_).dead)
                continue;
            if (depth >= budget_.max_steps) {
                result_.budget_hit = true;
                return false;
            }
            for (const Growth& g : minimal_growths(c, t, ell_).results) {
                if (g.tree.size() > static_cast<std::size_t>(budget_.max_vertices)) {
                    result_.budget_hit = true;
                    return false;
                }
                if (!explore(g.tree, depth + 1))
                    return false;
            }
        }
        proved_.insert(std::move(code.text));
        return true;
    }

    const Amoeba& a_;
    int ell_;
    Budget budget_;
    ExhaustiveResult result_;
    std::set<std::string> proved_;
};

} // namespace

ExhaustiveResult exhaustive_search(const Amoeba& a, int ell, const Tree& start, Budget budget)
{
    return Explorer(a, ell, budget).run(start);
}

Classification classify(const Amoeba& a, int ell, Budget budget)
{
    if (ell < 1)
        throw Error(ErrorKind::MalformedInput, "ell must be positive");

    if (ell == 1) {
        DegreeReport report = degree_check(a, ell);
        if (report.mortal_by_degree())
            return {Verdict::Mortal, certificate::MortalByDegree{report}};
        CaterpillarResult cat = decide_caterpillar(a);
        if (cat.decision == CaterpillarDecision::Immortal)
            return {Verdict::Immortal, certificate::SlowCaterpillar{*cat.completed}};
        // A Mortal caterpillar decision still needs a checkable witness; the
        // simulation below supplies it.
    }

    if (ell <= 2) {
        RunResult run = run_generation(a, ell, Strategy::first_alive(), budget);
        if (run.outcome == RunOutcome::ConfiningReached)
            return {Verdict::Mortal, certificate::ConfiningTreeReached{run.final_tree, std::move(run.log)}};
        return {Verdict::Unknown, certificate::SurvivedBudget{run.steps, run.final_tree.size()}};
    }

    ExhaustiveResult ex = exhaustive_search(a, ell, a.shape(), budget);
    if (ex.mortal)
        return {Verdict::Mortal, certificate::ExhaustedStateSpace{ex.states}};
    return {Verdict::Unknown, certificate::SurvivedBudget{static_cast<int>(ex.states), ex.largest}};
}

bool recheck(const Classification& c, const Amoeba& a, int ell)
{
    struct Checker {
        const Amoeba& a;
        int ell;
        bool operator()(const certificate::ConfiningTreeReached& cert) const
        {
            return is_confining(cert.tree, a, ell) && verify_log(cert.log).empty() && cert.log.replay() == cert.tree;
        }
        bool operator()(const certificate::ConfiningTreeFound& cert) const { return is_confining(cert.tree, a, ell); }
        bool operator()(const certificate::MortalByDegree&) const { return degree_check(a, ell).mortal_by_degree(); }
        bool operator()(const certificate::ExhaustedStateSpace& cert) const
        {
            Budget b;
            b.max_states = 2 * cert.states;
            b.max_vertices = 1 << 20;
            b.max_steps = 1 << 20;
            return exhaustive_search(a, ell, a.shape(), b).mortal;
        }
        bool operator()(const certificate::SlowCaterpillar&) const
        {
            return ell == 1 && decide_caterpillar(a).decision == CaterpillarDecision::Immortal;
        }
        bool operator()(const certificate::SurvivedBudget&) const { return true; }
    };
    return std::visit(Checker{a, ell}, c.certificate);
}

std::vector<Amoeba> census_amoebas(int n_max, int k_max, int cap)
{
    if (n_max < 1 || k_max < 0)
        throw Error(ErrorKind::MalformedInput, "census needs n_max >= 1 and k_max >= 0");
    if (n_max > cap)
        throw Error(ErrorKind::BudgetExceeded, "census capped at " + std::to_string(cap) + " vertices");
    std::vector<Amoeba> out;
    std::set<CanonicalCode> seen;
    for (int n = 1; n <= n_max; ++n) {
        for (const Tree& t : enumerate_free_trees(n, cap)) {
            std::vector<int> mult(t.size(), 0);
            // All vectors with sum <= k_max, odometer order.
            auto rec = [&](auto&& self, std::size_t i, int left) -> void {
                if (i == mult.size()) {
                    Amoeba a(t, mult);
                    if (seen.insert(canonical_amoeba_code(a)).second)
                        out.push_back(std::move(a));
                    return;
                }
                for (int m = 0; m <= left; ++m) {
                    mult[i] = m;
                    self(self, i + 1, left - m);
                }
                mult[i] = 0;
            };
            rec(rec, 0, k_max);
        }
    }
    return out;
}

std::vector<CensusRow> run_census(int n_max, int k_max, int ell, Budget budget, int parallel, int cap)
{
    std::vector<Amoeba> amoebas = census_amoebas(n_max, k_max, cap);
    std::vector<std::optional<Classification>> verdicts(amoebas.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < amoebas.size(); i = next++)
            verdicts[i] = classify(amoebas[i], ell, budget);
    };
    const int threads = std::max(1, parallel);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    std::vector<CensusRow> rows;
    for (std::size_t i = 0; i < amoebas.size(); ++i)
        rows.push_back({canonical_amoeba_code(amoebas[i]), amoebas[i], std::move(*verdicts[i])});
    return rows;
}

} // namespace amoeba
