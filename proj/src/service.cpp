#include "amoeba/service.hpp"

#include "amoeba/classify.hpp"
#include "amoeba/error.hpp"
#include "amoeba/json_io.hpp"

#include <httplib.h>

#include <deque>
#include <fstream>
#include <random>

namespace amoeba::service {

using io::json;

struct ExplorerService::Session {
    std::string id;
    std::mutex mutex;
    GrowthState state;
    std::deque<GrowthState> undo;
};

namespace {

Response reply(int status, const json& body)
{
    return {status, body.dump(), "application/json"};
}

Response error(int status, const std::string& message)
{
    return reply(status, {{"error", message}});
}

json summary(const std::string& id, const GrowthState& state)
{
    std::vector<Candidate> candidates = list_candidates(state.history.members, state.current, state.history.ell);
    std::size_t alive = 0;
    for (const Candidate& c : candidates)
        alive += c.status.dead ? 0 : 1;
    return {{"id", id},
            {"ell", state.history.ell},
            {"step", state.step_index},
            {"vertices", state.current.size()},
            {"tree", io::to_json(state.current)},
            {"copies", candidates.size()},
            {"alive_copies", alive},
            {"confining", !candidates.empty() && alive == 0}};
}

std::optional<json> parse_body(const std::string& body)
{
    if (body.empty())
        return json::object();
    try {
        json j = json::parse(body);
        if (!j.is_object())
            return std::nullopt;
        return j;
    } catch (const json::exception&) {
        return std::nullopt;
    }
}

std::optional<int> parse_index(const std::string& text)
{
    try {
        std::size_t used = 0;
        int v = std::stoi(text, &used);
        if (used != text.size())
            return std::nullopt;
        return v;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

} // namespace

ExplorerService::ExplorerService(Options options) : options_(std::move(options)) {}
ExplorerService::~ExplorerService() = default;

std::shared_ptr<ExplorerService::Session> ExplorerService::find(const std::string& id)
{
    std::shared_lock lock(sessions_mutex_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

void ExplorerService::persist(const Session& s) const
{
    if (!options_.log_dir)
        return;
    std::ofstream out(*options_.log_dir + "/session-" + s.id + ".jsonl", std::ios::trunc);
    out << io::log_to_jsonl(s.state.history);
}

Response ExplorerService::create_session(const std::string& body)
{
    auto req = parse_body(body);
    if (!req)
        return error(400, "body must be a JSON object");
    try {
        int ell = 1;
        if (req->contains("ell")) {
            if (!(*req)["ell"].is_number_integer() || (*req)["ell"].get<int>() < 1)
                return error(400, "ell must be a positive integer");
            ell = (*req)["ell"].get<int>();
        }
        GrowthState state;
        if (req->contains("colony")) {
            Colony colony = io::colony_from_json((*req)["colony"]);
            if (!req->contains("start"))
                return error(400, "a colony session needs a start tree");
            Tree start = io::tree_from_json((*req)["start"]);
            if (start.size() > options_.max_vertices)
                return error(413, "start tree exceeds the vertex cap");
            state = initial_state(colony, ell, start);
        } else if (req->contains("amoeba")) {
            Amoeba a = io::amoeba_from_json((*req)["amoeba"]);
            state = initial_state(a, ell);
            if (req->contains("start")) {
                Tree start = io::tree_from_json((*req)["start"]);
                if (start.size() > options_.max_vertices)
                    return error(413, "start tree exceeds the vertex cap");
                state.current = start;
                state.history.start = start;
            }
            if (state.current.size() > options_.max_vertices)
                return error(413, "start tree exceeds the vertex cap");
        } else {
            return error(400, "body needs \"amoeba\" or \"colony\"");
        }

        auto session = std::make_shared<Session>();
        session->state = std::move(state);
        {
            std::unique_lock lock(sessions_mutex_);
            static thread_local std::mt19937_64 rng(std::random_device{}());
            char suffix[9];
            std::snprintf(suffix, sizeof suffix, "%08x", static_cast<unsigned>(rng()));
            session->id = "s" + std::to_string(next_id_++) + "-" + suffix;
            sessions_[session->id] = session;
        }
        std::lock_guard guard(session->mutex);
        persist(*session);
        return reply(201, summary(session->id, session->state));
    } catch (const Error& e) {
        return error(400, e.what());
    }
}

Response ExplorerService::get_session(const std::string& id)
{
    auto s = find(id);
    if (!s)
        return error(404, "unknown session");
    std::lock_guard guard(s->mutex);
    return reply(200, summary(s->id, s->state));
}

Response ExplorerService::list_copies(const std::string& id)
{
    auto s = find(id);
    if (!s)
        return error(404, "unknown session");
    std::lock_guard guard(s->mutex);
    const GrowthState& st = s->state;
    json list = json::array();
    std::vector<Candidate> candidates = list_candidates(st.history.members, st.current, st.history.ell);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        json c = io::to_json(candidates[i].copy);
        c["index"] = i;
        c["member"] = candidates[i].member;
        c["alive"] = !candidates[i].status.dead;
        c["min_cost"] = candidates[i].status.min_cost;
        list.push_back(std::move(c));
    }
    return reply(200, {{"copies", list}});
}

Response ExplorerService::list_growths(const std::string& id, const std::string& copy_index)
{
    auto s = find(id);
    if (!s)
        return error(404, "unknown session");
    std::lock_guard guard(s->mutex);
    const GrowthState& st = s->state;
    std::vector<Candidate> candidates = list_candidates(st.history.members, st.current, st.history.ell);
    auto k = parse_index(copy_index);
    if (!k || *k < 0 || static_cast<std::size_t>(*k) >= candidates.size())
        return error(422, "copy index out of range");
    const Candidate& cand = candidates[static_cast<std::size_t>(*k)];
    GrowthSet set = minimal_growths(cand.copy, st.current, st.history.ell);
    json growths = json::array();
    if (!cand.status.dead) {
        for (std::size_t g = 0; g < set.results.size(); ++g)
            growths.push_back({{"index", g},
                               {"new_edges", io::edges_to_json(set.results[g].new_edges)},
                               {"copy_vertices", cand.copy.vertices()}});
    }
    return reply(200, {{"copy", *k}, {"alive", !cand.status.dead}, {"cost", set.cost}, {"growths", growths}});
}

Response ExplorerService::apply(const std::string& id, const std::string& body)
{
    auto s = find(id);
    if (!s)
        return error(404, "unknown session");
    auto req = parse_body(body);
    if (!req || !req->contains("copy") || !(*req)["copy"].is_number_integer())
        return error(400, "body needs an integer \"copy\"");
    CopyChoice choice{(*req)["copy"].get<int>(), 0};
    if (req->contains("growth")) {
        if (!(*req)["growth"].is_number_integer())
            return error(400, "\"growth\" must be an integer");
        choice.growth = (*req)["growth"].get<int>();
    }
    std::lock_guard guard(s->mutex);
    try {
        GrowthState next = grow_once(s->state, choice);
        if (next.current.size() > options_.max_vertices)
            return error(413, "growth would exceed the vertex cap");
        s->undo.push_back(std::move(s->state));
        if (s->undo.size() > options_.undo_depth)
            s->undo.pop_front();
        s->state = std::move(next);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::DeadCopyChosen)
            return error(409, e.what());
        if (e.kind() == ErrorKind::IndexOutOfRange)
            return error(422, e.what());
        return error(400, e.what());
    }
    persist(*s);
    return reply(200, summary(s->id, s->state));
}

Response ExplorerService::undo(const std::string& id)
{
    auto s = find(id);
    if (!s)
        return error(404, "unknown session");
    std::lock_guard guard(s->mutex);
    if (s->undo.empty())
        return error(409, s->state.step_index == 0 ? "already at the start tree" : "undo history exhausted");
    s->state = std::move(s->undo.back());
    s->undo.pop_back();
    persist(*s);
    return reply(200, summary(s->id, s->state));
}

Response ExplorerService::auto_run(const std::string& id, const std::string& body)
{
    auto s = find(id);
    if (!s)
        return error(404, "unknown session");
    auto req = parse_body(body);
    if (!req)
        return error(400, "body must be a JSON object");
    int steps = req->value("steps", 1);
    std::string kind = req->value("strategy", std::string("first"));
    if (steps < 0)
        return error(400, "steps must be non-negative");
    Strategy strategy;
    if (kind == "first")
        strategy = Strategy::first_alive();
    else if (kind == "random")
        strategy = Strategy::random(req->value("seed", std::uint64_t{0}));
    else
        return error(400, "strategy must be \"first\" or \"random\"");

    std::lock_guard guard(s->mutex);
    Budget budget;
    budget.max_steps = s->state.step_index + steps;
    budget.max_vertices = static_cast<int>(options_.max_vertices);
    const int before = s->state.step_index;
    RunResult run = advance(s->state, strategy, budget);
    if (run.steps > before) {
        s->undo.push_back(s->state);
        if (s->undo.size() > options_.undo_depth)
            s->undo.pop_front();
        s->state = GrowthState{run.final_tree, run.steps, std::move(run.log)};
    }
    persist(*s);
    json out = summary(s->id, s->state);
    out["outcome"] = run.outcome == RunOutcome::ConfiningReached ? "ConfiningReached" : "BudgetExhausted";
    out["steps_taken"] = run.steps - before;
    return reply(200, out);
}

Response ExplorerService::export_log(const std::string& id)
{
    auto s = find(id);
    if (!s)
        return error(404, "unknown session");
    std::lock_guard guard(s->mutex);
    return {200, io::log_to_jsonl(s->state.history), "application/x-ndjson"};
}

Response ExplorerService::classify(const std::string& id, const std::string& body)
{
    auto s = find(id);
    if (!s)
        return error(404, "unknown session");
    auto req = parse_body(body);
    if (!req)
        return error(400, "body must be a JSON object");
    Budget budget;
    budget.max_steps = req->value("max_steps", budget.max_steps);
    budget.max_vertices = req->value("max_vertices", budget.max_vertices);
    if (budget.max_steps < 1 || budget.max_vertices < 1)
        return error(400, "budget must be positive");
    Amoeba a = [&] {
        std::lock_guard guard(s->mutex);
        return s->state.history.amoeba();
    }();
    const int ell = s->state.history.ell;
    if (s->state.history.colony)
        return error(400, "classification is defined for single amoebas, not colonies");
    return reply(200, io::to_json(amoeba::classify(a, ell, budget)));
}

void ExplorerService::mount(httplib::Server& server)
{
    auto send = [](httplib::Response& res, const Response& r) {
        res.status = r.status;
        res.set_content(r.body, r.content_type);
    };
    server.Post("/sessions", [this, send](const httplib::Request& req, httplib::Response& res) {
        send(res, create_session(req.body));
    });
    server.Get(R"(/sessions/([^/]+))", [this, send](const httplib::Request& req, httplib::Response& res) {
        send(res, get_session(req.matches[1]));
    });
    server.Get(R"(/sessions/([^/]+)/copies)", [this, send](const httplib::Request& req, httplib::Response& res) {
        send(res, list_copies(req.matches[1]));
    });
    server.Get(R"(/sessions/([^/]+)/copies/([^/]+)/growths)",
               [this, send](const httplib::Request& req, httplib::Response& res) {
                   send(res, list_growths(req.matches[1], req.matches[2]));
               });
    server.Post(R"(/sessions/([^/]+)/apply)", [this, send](const httplib::Request& req, httplib::Response& res) {
        send(res, apply(req.matches[1], req.body));
    });
    server.Post(R"(/sessions/([^/]+)/undo)", [this, send](const httplib::Request& req, httplib::Response& res) {
        send(res, undo(req.matches[1]));
    });
    server.Post(R"(/sessions/([^/]+)/auto)", [this, send](const httplib::Request& req, httplib::Response& res) {
        send(res, auto_run(req.matches[1], req.body));
    });
    server.Get(R"(/sessions/([^/]+)/log)", [this, send](const httplib::Request& req, httplib::Response& res) {
        send(res, export_log(req.matches[1]));
    });
    server.Post(R"(/sessions/([^/]+)/classify)", [this, send](const httplib::Request& req, httplib::Response& res) {
        send(res, classify(req.matches[1], req.body));
    });
}

int serve(int port, Options options)
{
    ExplorerService service(std::move(options));
    httplib::Server server;
    service.mount(server);
    return server.listen("0.0.0.0", port) ? 0 : 1;
}

} // namespace amoeba::service
