#pragma once

#include "verblogic/dialogue.hpp"
#include "verblogic/knowledge_base.hpp"

#include <json.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <string>
#include <string_view>

namespace httplib {
class Server;
}

namespace verblogic::app {

struct HttpResponse {
    int status = 200;
    nlohmann::json body;
};

// The /api/ surface, independent of the HTTP transport:
//   GET  /api/facts
//   POST /api/session              {"fact": <index>}
//   POST /api/session/{id}/ask     {"operator": "HOW"|"WHICH_PART"|"WHICH_KIND", "slot"?: ...}
//   GET  /api/session/{id}
// Errors carry {"error": {"code", "message"}}: 400 malformed request, 404
// unknown fact or session, 409 dialogue errors.
//
// Safe to call from many threads; requests on one session are serialized.
class DialogueService {
public:
    explicit DialogueService(const KnowledgeBase& kb);

    HttpResponse handle(std::string_view method, std::string_view path, std::string_view body);

    HttpResponse list_facts() const;
    HttpResponse create_session(std::string_view body);
    HttpResponse ask(const std::string& session_id, std::string_view body);
    HttpResponse get_session(const std::string& session_id) const;

private:
    struct Entry {
        Entry(std::size_t index, Session s) : fact_index(index), session(std::move(s)) {}
        std::mutex mutex;
        std::size_t fact_index;
        Session session;
    };

    std::shared_ptr<Entry> find(const std::string& id) const;
    nlohmann::json state(const Entry& entry) const;
    std::string next_id();

    const KnowledgeBase& kb_;
    mutable std::shared_mutex sessions_mutex_;
    std::map<std::string, std::shared_ptr<Entry>> sessions_;
    std::mutex rng_mutex_;
    std::mt19937_64 rng_;
};

// Routes /api/ requests on `server` to `service` (both must outlive it).
void mount(httplib::Server& server, DialogueService& service);

// Blocks serving the API until the process is interrupted.
void serve(const KnowledgeBase& kb, const std::string& host, int port, std::ostream& log);

}  // namespace verblogic::app
