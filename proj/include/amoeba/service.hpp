#pragma once

#include "amoeba/engine.hpp"

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace httplib {
class Server;
}

namespace amoeba::service {

struct Response {
    int status = 200;
    std::string body;
    std::string content_type = "application/json";
};

struct Options {
    std::size_t max_vertices = 512;
    std::size_t undo_depth = 128;
    std::optional<std::string> log_dir; // one JSONL file per session when set
};

/// Session-oriented growth explorer. Every method takes and returns raw
/// bodies so the same logic backs the HTTP routes and direct calls in tests.
/// Mutations of one session are serialized; distinct sessions are independent.
class ExplorerService {
public:
    explicit ExplorerService(Options options = {});
    ~ExplorerService();

    Response create_session(const std::string& body);
    Response get_session(const std::string& id);
    Response list_copies(const std::string& id);
    Response list_growths(const std::string& id, const std::string& copy_index);
    Response apply(const std::string& id, const std::string& body);
    Response undo(const std::string& id);
    Response auto_run(const std::string& id, const std::string& body);
    Response export_log(const std::string& id);
    Response classify(const std::string& id, const std::string& body);

    /// Registers the HTTP routes on `server`.
    void mount(httplib::Server& server);

private:
    struct Session;

    std::shared_ptr<Session> find(const std::string& id);
    void persist(const Session& s) const;

    Options options_;
    std::shared_mutex sessions_mutex_;
    std::unordered_map<std::string, std::shared_ptr<Session>> sessions_;
    std::size_t next_id_ = 1;
};

/// Blocking HTTP server on 0.0.0.0:port.
int serve(int port, Options options);

} // namespace amoeba::service
