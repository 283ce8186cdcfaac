#include "amoeba/canonical.hpp"
#include "amoeba/json_io.hpp"
#include "amoeba/service.hpp"
#include "amoeba/verify.hpp"

#include <doctest.h>
#include <httplib.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

using namespace amoeba;
using io::json;
using service::ExplorerService;

namespace {

const std::string kP2 = R"({"amoeba":{"vertices":2,"edges":[[0,1]],"mult":[1,0]},"ell":1})";
const std::string kStar = R"({"amoeba":{"vertices":4,"edges":[[0,1],[0,2],[0,3]],"mult":[0,1,0,0]},"ell":1})";

json body(const service::Response& r)
{
    return json::parse(r.body);
}

std::string make(ExplorerService& s, const std::string& request)
{
    service::Response r = s.create_session(request);
    REQUIRE(r.status == 201);
    return body(r)["id"];
}

int first_alive(ExplorerService& s, const std::string& id)
{
    json copies = body(s.list_copies(id))["copies"];
    for (const json& c : copies)
        if (c["alive"])
            return c["index"];
    return -1;
}

int first_dead(ExplorerService& s, const std::string& id)
{
    json copies = body(s.list_copies(id))["copies"];
    for (const json& c : copies)
        if (!c["alive"])
            return c["index"];
    return -1;
}

std::string code_of(const json& state)
{
    return canonical_code(io::tree_from_json(state["tree"])).text;
}

} // namespace

TEST_CASE("session creation")
{
    ExplorerService s;
    service::Response p2 = s.create_session(kP2);
    CHECK(p2.status == 201);
    CHECK(body(p2)["vertices"] == 2);
    CHECK(body(p2)["alive_copies"] == 2);

    CHECK(body(s.create_session(kStar))["alive_copies"] == 3);

    CHECK(s.create_session(R"({"amoeba":{"vertices":2,"edges":[[0,1]],"mult":[1]},"ell":1})").status == 400);
    CHECK(s.create_session("not json").status == 400);
    CHECK(s.create_session(R"({"ell":1})").status == 400);
    CHECK(s.create_session(R"({"amoeba":{"vertices":1,"edges":[],"mult":[1]},"ell":0})").status == 400);

    ExplorerService tight(service::Options{3, 128, std::nullopt});
    CHECK(tight.create_session(kStar).status == 413);

    std::string a = body(s.create_session(kP2))["id"];
    std::string b = body(s.create_session(kP2))["id"];
    CHECK(a != b);
}

TEST_CASE("apply, growth previews, undo")
{
    ExplorerService s;
    std::string id = make(s, kP2);
    const std::string t0 = code_of(body(s.get_session(id)));

    const int k = first_alive(s, id);
    REQUIRE(k >= 0);
    json growths = body(s.list_growths(id, std::to_string(k)));
    CHECK(growths["growths"].size() == 1);
    CHECK(growths["growths"][0]["new_edges"].size() == 1);
    CHECK(growths["growths"][0].contains("copy_vertices"));

    service::Response applied = s.apply(id, json{{"copy", k}, {"growth", 0}}.dump());
    CHECK(applied.status == 200);
    CHECK(code_of(body(applied)) == canonical_code(Tree::path(3)).text);
    CHECK(body(applied)["step"] == 1);

    service::Response undone = s.undo(id);
    CHECK(undone.status == 200);
    CHECK(code_of(body(undone)) == t0);
    CHECK(s.undo(id).status == 409);
}

TEST_CASE("error statuses")
{
    ExplorerService s;
    CHECK(s.get_session("missing").status == 404);
    CHECK(s.list_copies("missing").status == 404);
    CHECK(s.apply("missing", R"({"copy":0})").status == 404);
    CHECK(s.undo("missing").status == 404);
    CHECK(s.export_log("missing").status == 404);

    std::string id = make(s, kP2);
    CHECK(s.list_growths(id, "99").status == 422);
    CHECK(s.list_growths(id, "x").status == 422);
    CHECK(s.apply(id, R"({"copy":99})").status == 422);
    CHECK(s.apply(id, R"({"copy":0,"growth":9})").status == 422);
    CHECK(s.apply(id, R"({"growth":0})").status == 400);
    CHECK(s.auto_run(id, R"({"strategy":"best"})").status == 400);

    REQUIRE(s.apply(id, json{{"copy", first_alive(s, id)}}.dump()).status == 200);
    const int dead = first_dead(s, id);
    REQUIRE(dead >= 0);
    CHECK(s.apply(id, json{{"copy", dead}}.dump()).status == 409);
}

TEST_CASE("two-growth example lists two previews")
{
    ExplorerService s;
    json req{{"amoeba", {{"vertices", 1}, {"edges", json::array()}, {"mult", {1}}}},
             {"ell", 3},
             {"start", {{"vertices", 6}, {"edges", {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {2, 5}}}}}};
    std::string id = make(s, req.dump());
    json copies = body(s.list_copies(id))["copies"];
    bool found = false;
    for (const json& c : copies) {
        if (c["vertices"] == json::array({0})) {
            CHECK(body(s.list_growths(id, std::to_string(c["index"].get<int>())))["growths"].size() == 2);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("auto run reaches the confining spider")
{
    ExplorerService s;
    std::string id = make(s, kStar);
    service::Response r = s.auto_run(id, R"({"steps":3,"strategy":"first"})");
    REQUIRE(r.status == 200);
    CHECK(body(r)["outcome"] == "ConfiningReached");
    CHECK(body(r)["vertices"] == 7);
    CHECK(body(r)["confining"] == true);

    service::Response log = s.export_log(id);
    CHECK(log.content_type == "application/x-ndjson");
    SequenceLog parsed = io::log_from_jsonl(log.body);
    CHECK(parsed.steps.size() == 3);
    CHECK(verify_log(parsed).empty());

    CHECK(s.undo(id).status == 200);
    CHECK(body(s.get_session(id))["vertices"] == 4);
}

TEST_CASE("classify through the service")
{
    ExplorerService s;
    std::string id = make(s, kP2);
    service::Response r = s.classify(id, R"({"max_steps":20,"max_vertices":64})");
    CHECK(r.status == 200);
    CHECK(body(r)["verdict"] == "Immortal");
    CHECK(s.classify(id, R"({"max_steps":0})").status == 400);
}

TEST_CASE("sessions persist their logs when a directory is configured")
{
    auto dir = std::filesystem::temp_directory_path() / "amoeba-service-test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    ExplorerService s(service::Options{512, 128, dir.string()});
    std::string id = make(s, kStar);
    s.auto_run(id, R"({"steps":2})");
    std::ifstream in(dir / ("session-" + id + ".jsonl"));
    std::stringstream text;
    text << in.rdbuf();
    CHECK(io::log_from_jsonl(text.str()).steps.size() == 2);
}

TEST_CASE("http round trip with concurrent sessions")
{
    ExplorerService s;
    httplib::Server server;
    s.mount(server);
    const int port = server.bind_to_any_port("127.0.0.1");
    std::thread th([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    httplib::Client client("127.0.0.1", port);
    auto created = client.Post("/sessions", kP2, "application/json");
    REQUIRE(created);
    CHECK(created->status == 201);
    std::string id = json::parse(created->body)["id"];

    auto copies = client.Get("/sessions/" + id + "/copies");
    REQUIRE(copies);
    int k = -1;
    const json listed = json::parse(copies->body)["copies"];
    for (const json& c : listed)
        if (c["alive"] && k < 0)
            k = c["index"];
    auto growths = client.Get("/sessions/" + id + "/copies/" + std::to_string(k) + "/growths");
    REQUIRE(growths);
    CHECK(growths->status == 200);

    // Two manual growths, one undo, five automatic steps.
    for (int i = 0; i < 2; ++i) {
        auto list = json::parse(client.Get("/sessions/" + id + "/copies")->body)["copies"];
        int alive = -1;
        for (const json& c : list)
            if (c["alive"] && alive < 0)
                alive = c["index"];
        auto r = client.Post("/sessions/" + id + "/apply", json{{"copy", alive}, {"growth", 0}}.dump(),
                             "application/json");
        REQUIRE(r);
        CHECK(r->status == 200);
        auto state = json::parse(client.Get("/sessions/" + id)->body);
        CHECK(state["tree"] == json::parse(r->body)["tree"]);
    }
    CHECK(client.Post("/sessions/" + id + "/undo", "", "application/json")->status == 200);
    auto autod = client.Post("/sessions/" + id + "/auto", R"({"steps":5,"strategy":"random","seed":3})",
                             "application/json");
    REQUIRE(autod);
    CHECK(json::parse(autod->body)["step"] == 6);

    auto log = client.Get("/sessions/" + id + "/log");
    REQUIRE(log);
    CHECK(verify_log(io::log_from_jsonl(log->body)).empty());
    CHECK(client.Get("/sessions/none")->status == 404);

    auto cls = client.Post("/sessions/" + id + "/classify", "{}", "application/json");
    REQUIRE(cls);
    CHECK(json::parse(cls->body)["verdict"] == "Immortal");

    // Distinct sessions mutated in parallel end in their own states.
    std::vector<std::string> ids;
    for (int i = 0; i < 4; ++i)
        ids.push_back(json::parse(client.Post("/sessions", kP2, "application/json")->body)["id"]);
    std::vector<std::thread> workers;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        workers.emplace_back([&, i] {
            httplib::Client c("127.0.0.1", port);
            c.Post("/sessions/" + ids[i] + "/auto", json{{"steps", static_cast<int>(i) + 1}}.dump(),
                   "application/json");
        });
    }
    // Same session hit concurrently: every request is applied once.
    std::string shared = json::parse(client.Post("/sessions", kP2, "application/json")->body)["id"];
    for (int i = 0; i < 4; ++i) {
        workers.emplace_back([&] {
            httplib::Client c("127.0.0.1", port);
            c.Post("/sessions/" + shared + "/auto", R"({"steps":2})", "application/json");
        });
    }
    for (auto& w : workers)
        w.join();
    for (std::size_t i = 0; i < ids.size(); ++i)
        CHECK(json::parse(client.Get("/sessions/" + ids[i])->body)["step"] == static_cast<int>(i) + 1);
    auto sharedState = json::parse(client.Get("/sessions/" + shared)->body);
    CHECK(sharedState["step"] == 8);
    CHECK(verify_log(io::log_from_jsonl(client.Get("/sessions/" + shared + "/log")->body)).empty());

    server.stop();
    th.join();
}
