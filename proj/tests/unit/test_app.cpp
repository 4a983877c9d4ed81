#include "support.hpp"

#include "verblogic/app/cli.hpp"
#include "verblogic/app/json_format.hpp"
#include "verblogic/app/repl.hpp"
#include "verblogic/app/service.hpp"

#include <doctest.h>
#include <httplib.h>
#include <json.hpp>

#include <atomic>
#include <sstream>
#include <thread>

using namespace verblogic;
using namespace verblogic::testing;
using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "verblogic");
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = app::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("check") {
    auto r = cli({"check", kb_path("house.vl")});
    CHECK(r.code == 0);
    CHECK(r.out == "OK\n");

    r = cli({"check", "--kb", kb_path("house.vl")});
    CHECK(r.code == 0);

    r = cli({"check", "/nonexistent/file.vl"});
    CHECK(r.code == 1);
}

TEST_CASE("derive --format json emits the seven atoms deterministically") {
    auto r = cli({"derive", kb_path("house.vl"), "--format", "json"});
    REQUIRE(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 7);
    for (const auto& l : ls) {
        json j = json::parse(l);
        std::vector<std::string> keys;
        for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
        std::sort(keys.begin(), keys.end());
        CHECK(keys == std::vector<std::string>{"adverb", "can", "condition", "negated", "object", "places",
                                               "rendered", "subject", "tense", "verb"});
        CHECK(j["places"].size() == 3);
        CHECK(j["tense"] == "future");
    }
    CHECK(cli({"derive", kb_path("house.vl"), "--format", "json"}).out == r.out);
}

TEST_CASE("derive on the conditional file") {
    auto r = cli({"derive", kb_path("house_conditional.vl")});
    REQUIRE(r.code == 0);
    auto ls = lines(r.out);
    CHECK(ls.size() == 7);
    for (const auto& l : ls) CHECK(l.rfind("If I get this job, I will ", 0) == 0);
}

TEST_CASE("derive on compound facts") {
    auto r = cli({"derive", kb_path("produce.vl"), "--fact", "0"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("I cooked a fruit and a vegetable\n") != std::string::npos);
    auto j = cli({"derive", kb_path("produce.vl"), "--fact", "0", "--format", "json"});
    CHECK(json::parse(lines(j.out).front()).contains("junction"));
}

TEST_CASE("diagnostics and usage errors") {
    auto r = cli({"derive", kb_path("../tests/data/bad.vl")});
    CHECK(r.code == 1);
    CHECK(r.err.find("bad.vl:2:") != std::string::npos);

    CHECK(cli({"derive", "--bogus"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"derive"}).code == 2);
    CHECK(cli({"derive", kb_path("house.vl"), "--format", "xml"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("ask applies operators to the opening") {
    auto r = cli({"ask", kb_path("house.vl")});
    CHECK(r.out == "I will own property in U.S.\n");
    r = cli({"ask", kb_path("house.vl"), "WHICH_PART", "HOW"});
    CHECK(r.out == "I will buy a property in CA\n");
    r = cli({"ask", kb_path("travel.vl"), "WHICH_PART:from"});
    CHECK(r.out == "I moved from Tokyo to U.S.\n");
    r = cli({"ask", kb_path("house.vl"), "WHICH_KIND", "WHICH_KIND"});
    CHECK(r.code == 1);
    CHECK(r.err.find("fully specific") != std::string::npos);
    CHECK(cli({"ask", kb_path("house.vl"), "WHY"}).code == 2);
}

TEST_CASE("annotate") {
    CHECK(cli({"annotate", kb_path("food.vl"), "I", "eat", "chicken"}).out == "I often eat chicken\n");
    CHECK(cli({"annotate", kb_path("food.vl"), "I", "eat", "seaweed"}).out == "I rarely eat seaweed\n");
    CHECK(cli({"annotate", kb_path("food.vl"), "you", "eat", "seaweed"}).out == "you often eat seaweed\n");
    CHECK(cli({"annotate", kb_path("food.vl"), "I", "eat", "book"}).out == "I never eat a book\n");
    auto r = cli({"annotate", kb_path("food.vl"), "I", "read", "book"});
    CHECK(r.code == 1);
    CHECK(cli({"annotate", kb_path("food.vl"), "I", "eat"}).code == 2);
    auto j = json::parse(cli({"annotate", kb_path("food.vl"), "I", "eat", "bread", "--format", "json"}).out);
    CHECK(j["adverb"] == "often");
}

TEST_CASE("repl transcript") {
    auto r = cli({"repl", kb_path("house.vl")}, "WHICH PART\nHOW\nWHICH KIND\n");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "A: I will own property in U.S.\n"
          "B> WHICH PART\n"
          "A: I will own a property in CA\n"
          "B> HOW\n"
          "A: I will buy a property in CA\n"
          "B> WHICH KIND\n"
          "A: I will buy a house in CA\n"
          "B> \n");
}

TEST_CASE("repl errors and auxiliary commands") {
    auto r = cli({"repl", kb_path("house.vl")}, "BANANA\nfact\nWHICH KIND\nWHICH KIND\nconclusions\nquit\nHOW\n");
    auto ls = lines(r.out);
    CHECK(r.code == 0);
    CHECK(ls[2].rfind("error: unknown command 'BANANA'", 0) == 0);
    CHECK(ls[4] == "A: I will buy a house in CA");
    CHECK(ls[6] == "A: I will own a house in U.S.");
    CHECK(ls[8].rfind("error: ", 0) == 0);
    // seven conclusions, then quit stops before HOW
    CHECK(std::count_if(ls.begin(), ls.end(), [](const std::string& l) { return l.rfind("A: ", 0) == 0; }) == 2 + 1 + 7);
    CHECK(ls.back() == "B> quit");

    auto neg = cli({"repl", kb_path("potato.vl"), "--fact", "1"}, "");
    CHECK(neg.code == 1);
    auto ann = cli({"repl", kb_path("food.vl")}, "annotate I eat book\n");
    CHECK(ann.code == 1);  // food.vl has no facts
}

}

TEST_SUITE("http api") {

TEST_CASE("dialogue service routes") {
    KnowledgeBase kb = kb_file("house.vl");
    app::DialogueService service(kb);

    auto facts = service.handle("GET", "/api/facts", "");
    CHECK(facts.status == 200);
    CHECK(facts.body == json::array({{{"index", 0}, {"rendered", "I will buy a house in CA"}}}));

    auto created = service.handle("POST", "/api/session", R"({"fact": 0})");
    REQUIRE(created.status == 201);
    CHECK(created.body["rendered"] == "I will own property in U.S.");
    CHECK(created.body["utterance"]["places"]["in"] == "U.S.");
    CHECK(created.body["available_refinements"].size() == 3);
    const std::string id = created.body["session_id"];

    auto asked = service.handle("POST", "/api/session/" + id + "/ask", R"({"operator": "WHICH_PART"})");
    REQUIRE(asked.status == 200);
    CHECK(asked.body["utterance"]["places"]["in"] == "CA");
    CHECK(asked.body["rendered"] == "I will own a property in CA");

    service.handle("POST", "/api/session/" + id + "/ask", R"({"operator": "HOW"})");
    auto last = service.handle("POST", "/api/session/" + id + "/ask", R"({"operator": "WHICH_KIND", "slot": null})");
    CHECK(last.body["rendered"] == "I will buy a house in CA");
    CHECK(last.body["fully_specific"] == true);

    auto again = service.handle("POST", "/api/session/" + id + "/ask", R"({"operator": "HOW"})");
    CHECK(again.status == 409);
    CHECK(again.body["error"]["code"] == "fully_specific");

    auto state = service.handle("GET", "/api/session/" + id, "");
    CHECK(state.status == 200);
    CHECK(state.body["available_refinements"].empty());

    CHECK(service.handle("POST", "/api/session", "not json").status == 400);
    CHECK(service.handle("POST", "/api/session", R"({"fact": "0"})").status == 400);
    CHECK(service.handle("POST", "/api/session", R"({"fact": 3})").status == 404);
    CHECK(service.handle("POST", "/api/session/" + id + "/ask", R"({"operator": "WHY"})").status == 400);
    CHECK(service.handle("POST", "/api/session/" + id + "/ask", R"({"operator": "HOW", "slot": "up"})").status == 400);
    CHECK(service.handle("POST", "/api/session/nope/ask", R"({"operator": "HOW"})").status == 404);
    CHECK(service.handle("GET", "/api/session/nope", "").status == 404);
    CHECK(service.handle("GET", "/api/other", "").status == 404);
    CHECK(service.handle("DELETE", "/api/facts", "").status == 405);
}

TEST_CASE("ambiguous slots map to 409") {
    KnowledgeBase kb = kb_file("travel.vl");
    app::DialogueService service(kb);
    const std::string id = service.handle("POST", "/api/session", R"({"fact": 0})").body["session_id"];
    auto r = service.handle("POST", "/api/session/" + id + "/ask", R"({"operator": "WHICH_PART"})");
    CHECK(r.status == 409);
    CHECK(r.body["error"]["code"] == "ambiguous_slot");
    r = service.handle("POST", "/api/session/" + id + "/ask", R"({"operator": "WHICH_PART", "slot": "from"})");
    CHECK(r.status == 200);
    CHECK(r.body["rendered"] == "I moved from Tokyo to U.S.");
}

TEST_CASE("negated and compound facts cannot open sessions") {
    KnowledgeBase kb = kb_file("potato.vl");
    app::DialogueService service(kb);
    auto r = service.handle("POST", "/api/session", R"({"fact": 1})");
    CHECK(r.status == 409);
    CHECK(r.body["error"]["code"] == "negated_fact");

    KnowledgeBase produce = kb_file("produce.vl");
    app::DialogueService s2(produce);
    CHECK(s2.handle("POST", "/api/session", R"({"fact": 0})").body["error"]["code"] == "compound_fact");
}

TEST_CASE("over a real socket, REPL and HTTP agree") {
    KnowledgeBase kb = kb_file("house.vl");
    app::DialogueService service(kb);
    httplib::Server server;
    app::mount(server, service);
    const int port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread worker([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    httplib::Client client("127.0.0.1", port);
    std::vector<std::string> http_lines;
    auto res = client.Post("/api/session", R"({"fact": 0})", "application/json");
    REQUIRE(res);
    CHECK(res->status == 201);
    CHECK(res->get_header_value("Access-Control-Allow-Origin") == "*");
    json body = json::parse(res->body);
    http_lines.push_back(body["rendered"]);
    const std::string id = body["session_id"];
    for (const char* op : {"WHICH_PART", "HOW", "WHICH_KIND"}) {
        auto r = client.Post("/api/session/" + id + "/ask", json{{"operator", op}}.dump(), "application/json");
        REQUIRE(r);
        http_lines.push_back(json::parse(r->body)["rendered"]);
    }
    auto g = client.Get("/api/session/" + id);
    REQUIRE(g);
    CHECK(json::parse(g->body)["fully_specific"] == true);
    auto missing = client.Get("/api/session/zzz");
    REQUIRE(missing);
    CHECK(missing->status == 404);

    server.stop();
    worker.join();

    std::istringstream in("WHICH PART\nHOW\nWHICH KIND\n");
    std::ostringstream out;
    app::run_repl(kb, 0, in, out, false);
    std::vector<std::string> repl_lines;
    for (const auto& l : lines(out.str())) {
        auto pos = l.find("A: ");
        if (pos != std::string::npos) repl_lines.push_back(l.substr(pos + 3));
    }
    CHECK(repl_lines == http_lines);
}

TEST_CASE("concurrent sessions over one knowledge base") {
    KnowledgeBase kb = kb_file("house.vl");
    app::DialogueService service(kb);
    std::vector<std::thread> threads;
    std::atomic<int> finished{0};
    for (int i = 0; i < 8; ++i)
        threads.emplace_back([&] {
            for (int k = 0; k < 20; ++k) {
                auto c = service.handle("POST", "/api/session", R"({"fact": 0})");
                const std::string id = c.body["session_id"];
                service.handle("POST", "/api/session/" + id + "/ask", R"({"operator": "WHICH_PART"})");
                service.handle("POST", "/api/session/" + id + "/ask", R"({"operator": "HOW"})");
                auto last = service.handle("POST", "/api/session/" + id + "/ask", R"({"operator": "WHICH_KIND"})");
                if (last.body["rendered"] == "I will buy a house in CA") ++finished;
            }
        });
    for (auto& th : threads) th.join();
    CHECK(finished == 160);
}

}
