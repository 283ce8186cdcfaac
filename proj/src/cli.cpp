#include "amoeba/cli.hpp"

#include "amoeba/canonical.hpp"
#include "amoeba/classify.hpp"
#include "amoeba/dot.hpp"
#include "amoeba/error.hpp"
#include "amoeba/json_io.hpp"
#include "amoeba/service.hpp"
#include "amoeba/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace amoeba::cli {

namespace {

using io::json;

struct Flags {
    std::string input;
    std::string start;
    int ell = 1;
    int max_steps = 500;
    int max_vertices = 512;
    int max_n = 9;
    int k_max = 2;
    std::string strategy = "first";
    std::uint64_t seed = 0;
    std::string emit = "json";
    int parallel = 1;
    int port = 8080;
    std::string spec;
    int shift = 0;
};

std::string slurp(const std::string& path)
{
    if (path.empty())
        throw Error(ErrorKind::MalformedInput, "--input is required");
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::MalformedInput, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Budget budget_of(const Flags& f)
{
    Budget b;
    b.max_steps = f.max_steps;
    b.max_vertices = f.max_vertices;
    return b;
}

Amoeba read_amoeba(const Flags& f)
{
    io::Document doc = io::parse_any(slurp(f.input));
    if (auto* a = std::get_if<Amoeba>(&doc))
        return *a;
    throw Error(ErrorKind::MalformedInput, "expected an amoeba document");
}

Strategy strategy_of(const Flags& f)
{
    return f.strategy == "random" ? Strategy::random(f.seed) : Strategy::first_alive();
}

int cmd_classify(const Flags& f, std::ostream& out)
{
    Amoeba a = read_amoeba(f);
    Classification c = classify(a, f.ell, budget_of(f));
    if (f.emit == "dot") {
        const Tree* t = nullptr;
        if (auto* r = std::get_if<certificate::ConfiningTreeReached>(&c.certificate))
            t = &r->tree;
        else if (auto* r = std::get_if<certificate::ConfiningTreeFound>(&c.certificate))
            t = &r->tree;
        out << to_dot(t ? *t : a.shape(), {}, {}, t ? std::span<const int>{} : std::span<const int>(a.mult()));
    } else {
        out << io::to_json(c).dump() << "\n";
    }
    return c.verdict == Verdict::Unknown ? 2 : 0;
}

int cmd_simulate(const Flags& f, std::ostream& out)
{
    io::Document doc = io::parse_any(slurp(f.input));
    RunResult run;
    if (auto* a = std::get_if<Amoeba>(&doc)) {
        GrowthState st = initial_state(*a, f.ell);
        if (!f.start.empty()) {
            st.current = io::parse_tree(slurp(f.start));
            st.history.start = st.current;
        }
        run = advance(std::move(st), strategy_of(f), budget_of(f));
    } else if (auto* c = std::get_if<Colony>(&doc)) {
        if (f.start.empty())
            throw Error(ErrorKind::MalformedInput, "a colony needs --start");
        run = run_colony(*c, f.ell, strategy_of(f), budget_of(f), io::parse_tree(slurp(f.start)));
    } else {
        throw Error(ErrorKind::MalformedInput, "expected an amoeba or colony document");
    }
    const char* outcome = run.outcome == RunOutcome::ConfiningReached ? "ConfiningReached" : "BudgetExhausted";
    if (f.emit == "dot") {
        std::vector<Vertex> shade;
        std::vector<Edge> dashed;
        if (!run.log.steps.empty()) {
            shade = run.log.steps.back().copy.vertices();
            dashed = run.log.steps.back().new_edges;
        }
        out << to_dot(run.final_tree, shade, dashed);
    } else if (f.emit == "json") {
        out << json{{"outcome", outcome},
                    {"steps", run.steps},
                    {"vertices", run.final_tree.size()},
                    {"tree", io::to_json(run.final_tree)}}
                   .dump()
            << "\n";
    } else {
        out << io::log_to_jsonl(run.log);
    }
    return run.outcome == RunOutcome::ConfiningReached ? 0 : 2;
}

int cmd_confine(const Flags& f, std::ostream& out)
{
    Amoeba a = read_amoeba(f);
    std::optional<Tree> t = find_confining_tree(a, f.ell, f.max_n);
    if (f.emit == "dot") {
        if (t)
            out << to_dot(*t);
    } else {
        json j{{"found", t.has_value()}, {"max_n", f.max_n}};
        if (t)
            j["tree"] = io::to_json(*t);
        out << j.dump() << "\n";
    }
    return t ? 0 : 2;
}

int cmd_caterpillar(const Flags& f, std::ostream& out)
{
    if (!f.spec.empty()) {
        CaterpillarSpec spec = parse_spec(f.spec);
        if (f.shift > 0) {
            for (int i = 0; i < f.shift; ++i)
                spec = shift_step(spec);
            if (f.emit == "dot")
                out << to_dot(caterpillar_tree(spec), {}, {}, caterpillar_amoeba(spec).mult());
            else
                out << json{{"spec", format_spec(spec)}, {"legs", spec.legs}, {"roots", spec.roots}}.dump() << "\n";
            return 0;
        }
        CaterpillarResult r = decide_caterpillar(caterpillar_amoeba(spec));
        out << io::to_json(r).dump() << "\n";
        return 0;
    }
    CaterpillarResult r = decide_caterpillar(read_amoeba(f));
    out << io::to_json(r).dump() << "\n";
    return 0;
}

int cmd_degree(const Flags& f, std::ostream& out)
{
    out << io::to_json(degree_check(read_amoeba(f), f.ell)).dump() << "\n";
    return 0;
}

int cmd_orbits(const Flags& f, std::ostream& out)
{
    io::Document doc = io::parse_any(slurp(f.input));
    json j;
    if (auto* t = std::get_if<Tree>(&doc)) {
        j = {{"orbits", io::to_json(automorphism_orbits(*t))}, {"code", canonical_code(*t).text}};
    } else if (auto* a = std::get_if<Amoeba>(&doc)) {
        j = {{"orbits", io::to_json(automorphism_orbits(a->shape(), a->mult()))},
             {"code", canonical_amoeba_code(*a).text}};
    } else {
        throw Error(ErrorKind::MalformedInput, "expected a tree or amoeba document");
    }
    out << j.dump() << "\n";
    return 0;
}

int cmd_enumerate(const Flags& f, std::ostream& out)
{
    if (f.emit == "jsonl") {
        for (int n = 1; n <= f.max_n; ++n)
            for (const Tree& t : enumerate_free_trees(n))
                out << io::to_json(t).dump() << "\n";
        return 0;
    }
    json counts = json::array();
    for (int n = 1; n <= f.max_n; ++n) {
        FreeTreeGenerator gen(n);
        long c = 0;
        while (gen.next())
            ++c;
        counts.push_back({{"n", n}, {"count", c}});
    }
    out << json{{"max_n", f.max_n}, {"counts", counts}}.dump() << "\n";
    return 0;
}

int cmd_census(const Flags& f, std::ostream& out)
{
    std::vector<CensusRow> rows = run_census(f.max_n, f.k_max, f.ell, budget_of(f), f.parallel);
    json list = json::array();
    long mortal = 0, immortal = 0, unknown = 0;
    for (const CensusRow& r : rows) {
        json c = io::to_json(r.classification);
        list.push_back({{"code", r.code.text},
                        {"amoeba", io::to_json(r.amoeba)},
                        {"verdict", c["verdict"]},
                        {"certificate", c["certificate"]["kind"]}});
        switch (r.classification.verdict) {
        case Verdict::Mortal: ++mortal; break;
        case Verdict::Immortal: ++immortal; break;
        case Verdict::Unknown: ++unknown; break;
        }
    }
    if (f.emit == "jsonl") {
        for (const json& row : list)
            out << row.dump() << "\n";
    } else {
        out << json{{"max_n", f.max_n},
                    {"k_max", f.k_max},
                    {"ell", f.ell},
                    {"rows", list},
                    {"mortal", mortal},
                    {"immortal", immortal},
                    {"unknown", unknown}}
                   .dump()
            << "\n";
    }
    return 0;
}

int cmd_verify(const Flags& f, std::ostream& out)
{
    SequenceLog log = io::log_from_jsonl(slurp(f.input));
    std::vector<Violation> violations = verify_log(log);
    if (f.emit == "json") {
        json list = json::array();
        for (const Violation& v : violations)
            list.push_back(io::to_json(v));
        out << json{{"steps", log.steps.size()}, {"violations", list}}.dump() << "\n";
    } else {
        for (const Violation& v : violations)
            out << io::to_json(v).dump() << "\n";
    }
    return violations.empty() ? 0 : 1;
}

int cmd_serve(const Flags& f, std::ostream& err)
{
    service::Options options;
    options.max_vertices = static_cast<std::size_t>(f.max_vertices);
    if (const char* dir = std::getenv("AMOEBA_LOG_DIR"))
        options.log_dir = dir;
    err << "listening on port " << f.port << "\n";
    return service::serve(f.port, options);
}

void error_document(std::ostream& out, const std::string& kind, const std::string& message)
{
    out << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Flags f;
    CLI::App app{"Amoeba tree-growth engine"};
    app.require_subcommand(1);

    auto input = [&](CLI::App* c) { c->add_option("--input", f.input, "input document, - for stdin"); };
    auto ell = [&](CLI::App* c) { c->add_option("--ell", f.ell, "extension length")->check(CLI::Range(1, 64)); };
    auto budget = [&](CLI::App* c) {
        c->add_option("--max-steps", f.max_steps)->check(CLI::Range(0, 1000000));
        c->add_option("--max-vertices", f.max_vertices)->check(CLI::Range(1, 1000000));
    };
    auto emit = [&](CLI::App* c, std::vector<std::string> allowed) {
        c->add_option("--emit", f.emit)->check(CLI::IsMember(allowed));
    };
    auto max_n = [&](CLI::App* c) { c->add_option("--max-n", f.max_n)->check(CLI::Range(1, kFreeTreeCap)); };
    auto parallel = [&](CLI::App* c) { c->add_option("--parallel", f.parallel)->check(CLI::Range(1, 256)); };

    CLI::App* classify_cmd = app.add_subcommand("classify", "decide mortality");
    input(classify_cmd), ell(classify_cmd), budget(classify_cmd), emit(classify_cmd, {"json", "dot"});

    CLI::App* simulate = app.add_subcommand("simulate", "run a growth sequence");
    input(simulate), ell(simulate), budget(simulate), emit(simulate, {"jsonl", "json", "dot"});
    simulate->add_option("--strategy", f.strategy)->check(CLI::IsMember({"first", "random"}));
    simulate->add_option("--seed", f.seed);
    simulate->add_option("--start", f.start, "start tree (required for colonies)");

    CLI::App* confine = app.add_subcommand("confine", "search for a confining tree");
    input(confine), ell(confine), max_n(confine), emit(confine, {"json", "dot"});

    CLI::App* cat = app.add_subcommand("caterpillar", "caterpillar decision and shifts");
    input(cat), emit(cat, {"json", "dot"});
    cat->add_option("--spec", f.spec, "C(d_1,...,d_l) roots=i,j");
    cat->add_option("--shift", f.shift)->check(CLI::Range(0, 10000));

    CLI::App* degree = app.add_subcommand("degree-check", "degree conditions");
    input(degree), ell(degree), emit(degree, {"json"});

    CLI::App* orbits = app.add_subcommand("orbits", "automorphism orbits");
    input(orbits), emit(orbits, {"json"});

    CLI::App* enumerate = app.add_subcommand("enumerate", "free trees up to --max-n");
    max_n(enumerate), emit(enumerate, {"json", "jsonl"});

    CLI::App* census = app.add_subcommand("census", "classify all small amoebas");
    ell(census), budget(census), max_n(census), parallel(census), emit(census, {"json", "jsonl"});
    census->add_option("--k-max", f.k_max)->check(CLI::Range(0, 64));

    CLI::App* verify = app.add_subcommand("verify", "check a JSONL sequence log");
    input(verify), emit(verify, {"jsonl", "json"});

    CLI::App* serve = app.add_subcommand("serve", "run the explorer service");
    serve->add_option("--port", f.port)->check(CLI::Range(1, 65535));
    serve->add_option("--max-vertices", f.max_vertices)->check(CLI::Range(1, 1000000));
    parallel(serve);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        error_document(out, "UsageError", e.what());
        return 1;
    }

    if (simulate->parsed() && f.emit == "json" && !simulate->count("--emit"))
        f.emit = "jsonl";
    if (verify->parsed() && !verify->count("--emit"))
        f.emit = "jsonl";

    try {
        if (classify_cmd->parsed())
            return cmd_classify(f, out);
        if (simulate->parsed())
            return cmd_simulate(f, out);
        if (confine->parsed())
            return cmd_confine(f, out);
        if (cat->parsed())
            return cmd_caterpillar(f, out);
        if (degree->parsed())
            return cmd_degree(f, out);
        if (orbits->parsed())
            return cmd_orbits(f, out);
        if (enumerate->parsed())
            return cmd_enumerate(f, out);
        if (census->parsed())
            return cmd_census(f, out);
        if (verify->parsed())
            return cmd_verify(f, out);
        if (serve->parsed())
            return cmd_serve(f, err);
    } catch (const Error& e) {
        error_document(out, std::string(to_string(e.kind())), e.what());
        return 1;
    } catch (const std::exception& e) {
        error_document(out, "MalformedInput", e.what());
        return 1;
    }
    return 1;
}

} // namespace amoeba::cli
