#include "verblogic/app/service.hpp"

#include "verblogic/app/json_format.hpp"
#include "verblogic/errors.hpp"

#include <httplib.h>

#include <cstdio>
#include <ostream>

namespace verblogic::app {

using nlohmann::json;

namespace {

HttpResponse error(int status, std::string code, std::string message) {
    return {status, json{{"error", {{"code", std::move(code)}, {"message", std::move(message)}}}}};
}

// Parses a JSON object body; nullopt when malformed.
std::optional<json> parse_body(std::string_view body) {
    json j = json::parse(body.begin(), body.end(), nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    return j;
}

}  // namespace

DialogueService::DialogueService(const KnowledgeBase& kb) : kb_(kb), rng_(std::random_device{}()) {}

std::string DialogueService::next_id() {
    std::lock_guard lock(rng_mutex_);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(rng_()));
    return buf;
}

HttpResponse DialogueService::handle(std::string_view method, std::string_view path,
                                     std::string_view body) {
    constexpr std::string_view prefix = "/api/session/";
    if (path == "/api/facts") {
        if (method == "GET") return list_facts();
    } else if (path == "/api/session") {
        if (method == "POST") return create_session(body);
    } else if (path.starts_with(prefix)) {
        std::string_view rest = path.substr(prefix.size());
        auto slash = rest.find('/');
        std::string id(rest.substr(0, slash));
        if (slash == std::string_view::npos) {
            if (method == "GET") return get_session(id);
        } else if (rest.substr(slash) == "/ask") {
            if (method == "POST") return ask(id, body);
        } else {
            return error(404, "not_found", "no such endpoint");
        }
    } else {
        return error(404, "not_found", "no such endpoint");
    }
    return error(405, "method_not_allowed", std::string(method) + " not allowed on " + std::string(path));
}

HttpResponse DialogueService::list_facts() const {
    json facts = json::array();
    for (std::size_t i = 0; i < kb_.facts.size(); ++i)
        facts.push_back({{"index", i}, {"rendered", render_text(kb_.facts[i], kb_.lexicon)}});
    return {200, facts};
}

json DialogueService::state(const Entry& e) const {
    const Session& s = e.session;
    json refinements = json::array();
    for (const auto& r : s.available_refinements()) refinements.push_back(to_json(r));
    const bool fully_specific = refinements.empty();
    const RenderStyle style = s.at_opening() ? RenderStyle::generic : RenderStyle::standard;
    return json{
        {"session_id", s.id()},
        {"fact", e.fact_index},
        {"utterance", to_json(s.utterance(), kb_.lexicon, style)},
        {"rendered", s.rendered()},
        {"available_refinements", std::move(refinements)},
        {"fully_specific", fully_specific},
    };
}

HttpResponse DialogueService::create_session(std::string_view body) {
    auto j = parse_body(body);
    if (!j || !j->contains("fact") || !(*j)["fact"].is_number_integer())
        return error(400, "bad_request", "expected {\"fact\": <index>}");
    const auto index = (*j)["fact"].get<long long>();
    if (index < 0 || static_cast<std::size_t>(index) >= kb_.facts.size())
        return error(404, "unknown_fact", "no fact with index " + std::to_string(index));

    const Compound& fact = kb_.facts[static_cast<std::size_t>(index)];
    if (!fact.is_leaf())
        return error(409, "compound_fact", "dialogue needs a single statement, not a compound");
    try {
        auto entry = std::make_shared<Entry>(static_cast<std::size_t>(index),
                                             open_session(kb_, fact.atom(), next_id()));
        json body_out = state(*entry);
        std::unique_lock lock(sessions_mutex_);
        sessions_.emplace(entry->session.id(), std::move(entry));
        return {201, std::move(body_out)};
    } catch (const Error& e) {
        return error(409, e.code(), e.what());
    }
}

std::shared_ptr<DialogueService::Entry> DialogueService::find(const std::string& id) const {
    std::shared_lock lock(sessions_mutex_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

HttpResponse DialogueService::ask(const std::string& session_id, std::string_view body) {
    auto entry = find(session_id);
    if (!entry) return error(404, "unknown_session", "no session '" + session_id + "'");
    auto j = parse_body(body);
    if (!j || !j->contains("operator") || !(*j)["operator"].is_string())
        return error(400, "bad_request", "expected {\"operator\": \"HOW\"|\"WHICH_PART\"|\"WHICH_KIND\"}");
    auto op = parse_operator((*j)["operator"].get<std::string>());
    if (!op) return error(400, "bad_operator", "unknown operator '" + (*j)["operator"].get<std::string>() + "'");
    std::optional<PlaceSlot> slot;
    if (j->contains("slot") && !(*j)["slot"].is_null()) {
        if (!(*j)["slot"].is_string()) return error(400, "bad_slot", "slot must be \"in\", \"from\" or \"to\"");
        slot = parse_place_slot((*j)["slot"].get<std::string>());
        if (!slot) return error(400, "bad_slot", "slot must be \"in\", \"from\" or \"to\"");
    }

    std::lock_guard lock(entry->mutex);
    try {
        entry->session.ask(*op, slot);
    } catch (const Error& e) {
        return error(409, e.code(), e.what());
    }
    return {200, state(*entry)};
}

HttpResponse DialogueService::get_session(const std::string& session_id) const {
    auto entry = find(session_id);
    if (!entry) return error(404, "unknown_session", "no session '" + session_id + "'");
    std::lock_guard lock(entry->mutex);
    return {200, state(*entry)};
}

void mount(httplib::Server& server, DialogueService& service) {
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Headers", "Content-Type"},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
    auto dispatch = [&service](const httplib::Request& req, httplib::Response& res) {
        HttpResponse out = service.handle(req.method, req.path, req.body);
        res.status = out.status;
        res.set_content(out.body.dump(), "application/json");
    };
    server.Get(R"(/api/.*)", dispatch);
    server.Post(R"(/api/.*)", dispatch);
    server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

void serve(const KnowledgeBase& kb, const std::string& host, int port, std::ostream& log) {
    DialogueService service(kb);
    httplib::Server server;
    mount(server, service);

    log << "serving " << kb.facts.size() << " fact(s) on http://" << host << ':' << port << "/api/\n"
        << std::flush;
    if (!server.listen(host, port)) throw std::runtime_error("cannot listen on " + host + ":" + std::to_string(port));
}

}  // namespace verblogic::app
