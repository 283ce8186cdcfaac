// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "oracles.hpp"

#include "amoeba/canonical.hpp"
#include "amoeba/caterpillar.hpp"
#include "amoeba/classify.hpp"
#include "amoeba/degree.hpp"
#include "amoeba/free_trees.hpp"
#include "amoeba/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

using namespace amoeba;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Logs gathered by criteria 1-8 and rechecked by criterion 9.
std::vector<SequenceLog> g_logs;

void keep(const SequenceLog& log)
{
    g_logs.push_back(log);
}

Outcome fail(const std::string& why)
{
    return {false, why};
}

Amoeba am(std::size_t n, std::vector<Edge> edges, std::vector<int> mult)
{
    return Amoeba(Tree(n, std::move(edges)), std::move(mult));
}

Budget budget(int steps, int vertices)
{
    Budget b;
    b.max_steps = steps;
    b.max_vertices = vertices;
    return b;
}

Outcome star_mortality()
{
    Amoeba star = am(4, {{0, 1}, {0, 2}, {0, 3}}, {0, 1, 0, 0});
    Classification c = classify(star, 1, {});
    if (c.verdict != Verdict::Mortal || certificate_kind(c.certificate) != "MortalByDegree")
        return fail("classify gave " + std::string(to_string(c.verdict)) + "/" +
                    std::string(certificate_kind(c.certificate)));
    DegreeReport r = degree_check(star);
    if (r.max_degree != 3 || r.total_mult != 1 || r.delta_le_1_plus_k)
        return fail("degree report does not show 3 > 1 + 1");
    RunResult run = run_generation(star, 1, Strategy::first_alive(), {});
    keep(run.log);
    const std::vector<int> legs{2, 2, 2};
    if (run.outcome != RunOutcome::ConfiningReached || run.steps != 3)
        return fail("run ended after " + std::to_string(run.steps) + " steps without confinement");
    if (run.final_tree.size() != 7 || canonical_code(run.final_tree) != canonical_code(spider(legs)))
        return fail("final tree is not spider(2,2,2)");
    if (!is_confining(run.final_tree, star, 1))
        return fail("final tree is not confining");
    return {true, "MortalByDegree; 3 steps to spider(2,2,2), confining"};
}

Outcome path_center()
{
    Amoeba p3 = am(3, {{0, 1}, {1, 2}}, {0, 1, 0});
    RunResult run = run_generation(p3, 1, Strategy::first_alive(), {});
    keep(run.log);
    if (run.outcome != RunOutcome::ConfiningReached || run.steps != 1)
        return fail("run took " + std::to_string(run.steps) + " steps");
    std::optional<Tree> t = find_confining_tree(p3, 1, 4);
    if (!t || canonical_code(*t) != canonical_code(Tree::star(3)))
        return fail("smallest confining tree is not the 4-vertex star");
    return {true, "1 step; smallest confining tree = star on 4"};
}

Outcome caterpillar_extension()
{
    CaterpillarSpec s{{0, 2, 2, 3, 0}, {1, 3, 4}};
    const std::vector<int> want{0, 0, 2, 3, 4, 0};
    auto rec = recognize_caterpillar(ell_extension(caterpillar_amoeba(s), 1));
    if (!rec || rec->legs != want)
        return fail("1-extension reads as " + (rec ? format_spec(*rec) : std::string("non-caterpillar")));
    CaterpillarSpec shifted = shift_step(s);
    if (shifted.legs != want)
        return fail("shift_step gave " + format_spec(shifted));
    return {true, "extension and shift give " + format_spec(shifted)};
}

Outcome edge_immortal()
{
    Amoeba p2 = am(2, {{0, 1}}, {1, 0});
    CaterpillarResult d = decide_caterpillar(p2);
    if (d.decision != CaterpillarDecision::Immortal)
        return fail("decide_caterpillar gave " + std::string(to_string(d.decision)));
    RunResult run = run_generation(p2, 1, Strategy::first_alive(), budget(200, 1 << 20));
    keep(run.log);
    if (run.outcome != RunOutcome::BudgetExhausted || run.steps != 200)
        return fail("run stopped after " + std::to_string(run.steps) + " steps");
    if (find_confining_tree(p2, 1, 9))
        return fail("a confining tree exists on <= 9 vertices");
    return {true, "Immortal; survived 200 steps; no confining tree on <= 9 vertices"};
}

Outcome growth_uniqueness()
{
    std::mt19937_64 rng(20240601);
    int checked = 0, draws = 0;
    while (checked < 500) {
        ++draws;
        const int n = 1 + static_cast<int>(rng() % 6);
        Tree shape = oracle::random_tree(rng, n);
        std::vector<int> mult(shape.size(), 0);
        const int k = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < k; ++i)
            ++mult[rng() % mult.size()];
        Amoeba a(shape, mult);
        const int hn = n + static_cast<int>(rng() % static_cast<unsigned>(13 - n));
        Tree host = oracle::random_tree(rng, hn);
        std::vector<CopyEmbedding> copies = enumerate_copies(a, host);
        std::vector<const CopyEmbedding*> alive;
        for (const CopyEmbedding& c : copies)
            if (!copy_status(c, host, 1).dead)
                alive.push_back(&c);
        if (alive.empty())
            continue;
        const CopyEmbedding& c = *alive[rng() % alive.size()];
        const int ell = 1 + static_cast<int>(rng() % 2);
        CopyStatus st = copy_status(c, host, ell);
        if (st.dead)
            continue;
        std::size_t count = minimal_growths(c, host, ell).results.size();
        if (count != 1)
            return fail("copy with " + std::to_string(count) + " growths at ell=" + std::to_string(ell));
        ++checked;
    }
    return {true, std::to_string(checked) + " alive copies (" + std::to_string(draws) + " draws), one growth each"};
}

Outcome minimality_oracle()
{
    std::vector<Tree> hosts;
    for (int n = 1; n <= 10; ++n)
        for (Tree& t : enumerate_free_trees(n))
            hosts.push_back(std::move(t));
    std::vector<Amoeba> amoebas = census_amoebas(5, 2);
    std::set<std::string> done;
    long instances = 0, discrepancies = 0;
    std::string first;
    for (const Tree& host : hosts) {
        for (const Amoeba& a : amoebas) {
            if (a.shape().size() > host.size())
                continue;
            for (const CopyEmbedding& c : enumerate_copies(a, host)) {
                std::vector<int> labels(host.size(), 0);
                for (const RootMult& rm : c.mult)
                    labels[rm.vertex] = 1 + rm.mult;
                const std::string key = canonical_code(host, labels).text;
                for (int ell = 1; ell <= 3; ++ell) {
                    CopyStatus st = copy_status(c, host, ell);
                    if (st.min_cost > 3 || !done.insert(key + "/" + std::to_string(ell)).second)
                        continue;
                    ++instances;
                    GrowthSet g = minimal_growths(c, host, ell);
                    oracle::SupertreeResult o = oracle::supertree_oracle(host, c, ell, 3);
                    std::set<std::string> mine;
                    for (const Growth& r : g.results)
                        mine.insert(oracle::naive_code(r.tree));
                    if (o.cost != g.cost || o.codes != mine) {
                        if (++discrepancies == 1)
                            first = "host " + canonical_code(host).text + " copy " + key + " ell " +
                                    std::to_string(ell) + ": cost " + std::to_string(g.cost) + " vs " +
                                    std::to_string(o.cost) + ", " + std::to_string(mine.size()) + " vs " +
                                    std::to_string(o.codes.size()) + " growths";
                    }
                }
            }
        }
    }
    if (discrepancies)
        return fail(std::to_string(discrepancies) + " discrepancies; first: " + first);
    return {true, std::to_string(instances) + " distinct (host, copy, ell) instances, zero discrepancies"};
}

Outcome orbit_completion()
{
    long trees = 0, agreements = 0;
    const Budget b = budget(500, 512);
    for (const Amoeba& a : census_amoebas(6, 2)) {
        Amoeba c = completion(a);
        for (const Tree& t : all_confining_trees(c, 1, 8)) {
            ++trees;
            if (!is_confining(t, a, 1))
                return fail("confining tree of the completion does not confine " + canonical_amoeba_code(a).text);
        }
        Classification x = classify(a, 1, b);
        Classification y = classify(c, 1, b);
        if (auto* r = std::get_if<certificate::ConfiningTreeReached>(&x.certificate))
            keep(r->log);
        if (x.verdict != Verdict::Unknown && y.verdict != Verdict::Unknown) {
            if (x.verdict != y.verdict)
                return fail("verdicts differ for " + canonical_amoeba_code(a).text);
            ++agreements;
        }
    }
    return {true, std::to_string(trees) + " confining trees transferred; " + std::to_string(agreements) +
                      " decided pairs agree"};
}

Outcome degree_conditions()
{
    long immortal = 0, heavy = 0;
    for (const Amoeba& a : census_amoebas(6, 2)) {
        Classification c = classify(a, 1, {});
        DegreeReport r = degree_check(a);
        if (c.verdict == Verdict::Immortal) {
            ++immortal;
            if (!r.q_equals_m || !r.degrees_bounded)
                return fail("immortal amoeba violates q = M or d <= M: " + canonical_amoeba_code(a).text);
        }
        if (static_cast<int>(a.shape().max_degree()) > 1 + a.total_mult()) {
            ++heavy;
            RunResult run = run_generation(a, 1, Strategy::first_alive(), budget(1 << 20, 64));
            keep(run.log);
            if (run.outcome != RunOutcome::ConfiningReached)
                return fail("no termination within 64 vertices: " + canonical_amoeba_code(a).text);
        }
    }
    return {true, std::to_string(immortal) + " immortal amoebas satisfy the conditions; " + std::to_string(heavy) +
                      " with Delta > 1+k terminate within 64 vertices"};
}

Outcome log_validity()
{
    long long_ell3 = 0, bound_checked = 0;
    std::mt19937_64 rng(99);
    for (const Amoeba& a : census_amoebas(5, 2)) {
        if (a.total_mult() == 0 || tree_metrics(a.shape()).diameter <= 2)
            continue;
        for (int trial = 0; trial < 3; ++trial) {
            Strategy s = trial == 0 ? Strategy::first_alive() : Strategy::random(rng());
            RunResult run = run_generation(a, 3, s, budget(25, 120));
            keep(run.log);
            ++long_ell3;
            if (depth_bound_applies(a, a.shape(), 3))
                ++bound_checked;
        }
    }
    long total_steps = 0;
    for (std::size_t i = 0; i < g_logs.size(); ++i) {
        std::vector<Violation> v = verify_log(g_logs[i]);
        total_steps += static_cast<long>(g_logs[i].steps.size());
        if (!v.empty())
            return fail("log " + std::to_string(i) + " step " + std::to_string(v[0].step) + ": " + v[0].kind + " " +
                        v[0].detail);
    }
    if (bound_checked == 0)
        return fail("no ell=3 run exercised the depth bound");
    return {true, std::to_string(g_logs.size()) + " logs (" + std::to_string(total_steps) + " steps, " +
                      std::to_string(long_ell3) + " ell=3 runs, " + std::to_string(bound_checked) +
                      " under the depth bound) with zero violations"};
}

Outcome caterpillar_cross_validation()
{
    std::set<CanonicalCode> seen;
    long mortal = 0, immortal = 0, survived = 0;
    std::vector<std::pair<std::string, std::string>> survivors;
    for (int n = 1; n <= 8; ++n) {
        for (const Tree& t : enumerate_free_trees(n)) {
            if (!recognize_caterpillar(t))
                continue;
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                std::vector<int> m(t.size());
                for (int v = 0; v < n; ++v)
                    m[static_cast<std::size_t>(v)] = static_cast<int>((mask >> v) & 1u);
                Amoeba a(t, m);
                if (!seen.insert(canonical_amoeba_code(a)).second)
                    continue;
                CaterpillarResult d = decide_caterpillar(a);
                if (d.decision == CaterpillarDecision::Mortal) {
                    ++mortal;
                    RunResult run = run_generation(a, 1, Strategy::first_alive(), budget(1 << 20, 128));
                    keep(run.log);
                    if (run.outcome != RunOutcome::ConfiningReached) {
                        if (survivors.empty() || survivors.back().second != d.reason)
                            survivors.emplace_back(canonical_amoeba_code(a).text, d.reason);
                        ++survived;
                    }
                } else if (d.decision == CaterpillarDecision::Immortal) {
                    ++immortal;
                    RunResult run = run_generation(a, 1, Strategy::first_alive(), budget(200, 1 << 20));
                    if (run.outcome != RunOutcome::BudgetExhausted || run.steps < 200)
                        return fail("Immortal but died after " + std::to_string(run.steps) +
                                    " steps: " + canonical_amoeba_code(a).text);
                    if (find_confining_tree(a, 1, 9))
                        return fail("Immortal but confined on <= 9 vertices: " + canonical_amoeba_code(a).text);
                }
            }
        }
    }
    if (survived > 0) {
        std::string detail = std::to_string(survived) + " of " + std::to_string(mortal) +
                             " Mortal decisions survived to 128 vertices, e.g.";
        for (std::size_t i = 0; i < survivors.size() && i < 4; ++i)
            detail += " " + survivors[i].first + " [" + survivors[i].second + "]";
        return fail(detail);
    }
    return {true, std::to_string(mortal) + " mortal and " + std::to_string(immortal) +
                      " immortal caterpillar amoebas, zero contradictions"};
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
};

} // namespace

int main(int argc, char** argv)
{
    // Optional arguments: criterion ids to run.
    std::set<int> only;
    for (int i = 1; i < argc; ++i)
        only.insert(std::atoi(argv[i]));

    const std::vector<Criterion> criteria{
        {1, "star with a leaf root is mortal", 1, star_mortality},
        {2, "P_3 with a center root dies in one step", 1, path_center},
        {3, "caterpillar extension C(0,2,2,3,0) -> C(0,0,2,3,4,0)", 1, caterpillar_extension},
        {4, "edge with one root is immortal", 30, edge_immortal},
        {5, "one minimal growth for ell in {1,2}", 60, growth_uniqueness},
        {6, "minimal growths match the supertree oracle", 600, minimality_oracle},
        {7, "orbit completion suite", 600, orbit_completion},
        {8, "degree condition consistency", 600, degree_conditions},
        {9, "area and depth-bound validity of all logs", 600, log_validity},
        {10, "caterpillar decision cross-validation", 1800, caterpillar_cross_validation},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        if (!only.empty() && !only.count(c.id))
            continue;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.pass && secs > c.limit_seconds) {
            o.pass = false;
            o.detail += "; over the time limit";
        }
        failures += o.pass ? 0 : 1;
        std::printf("[%s] criterion %d: %s (%.2f s, limit %.0f s) %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                    c.limit_seconds, o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
