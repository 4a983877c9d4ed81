#include "verblogic/app/cli.hpp"

#include "verblogic/app/json_format.hpp"
#include "verblogic/app/repl.hpp"
#include "verblogic/app/service.hpp"
#include "verblogic/dialogue.hpp"
#include "verblogic/dsl.hpp"
#include "verblogic/engine.hpp"
#include "verblogic/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace verblogic::app {

namespace {

enum class Format { text, json };

struct Options {
    std::string kb_path;
    std::vector<std::string> args;
    Format format = Format::text;
    std::size_t fact = 0;
    bool fact_given = false;
    std::string tense = "present";
    std::string host = "127.0.0.1";
    int port = 7878;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Loaded {
    KnowledgeBase kb;
    bool ok = false;
};

Loaded load(const std::string& path, std::ostream& err, bool show_warnings) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        err << path << ": error: cannot read file\n";
        return {};
    }
    std::ostringstream text;
    text << file.rdbuf();
    dsl::BuildResult built = dsl::load_kb(text.str());
    for (const auto& d : built.diagnostics)
        if (show_warnings || d.severity == dsl::Severity::error) err << dsl::format(d, path) << '\n';
    return {std::move(built.kb), built.ok()};
}

// Takes the knowledge base path from --kb or the first positional.
void take_kb_path(Options& o) {
    if (!o.kb_path.empty()) return;
    if (o.args.empty()) throw UsageError("a knowledge base file is required (positional or --kb)");
    o.kb_path = o.args.front();
    o.args.erase(o.args.begin());
}

void expect_args(const Options& o, std::size_t n, const char* what) {
    if (o.args.size() != n) throw UsageError(std::string("expected ") + what);
}

std::vector<std::size_t> selected_facts(const KnowledgeBase& kb, const Options& o) {
    if (!o.fact_given) {
        std::vector<std::size_t> all(kb.facts.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        return all;
    }
    if (o.fact >= kb.facts.size())
        throw std::out_of_range("no fact with index " + std::to_string(o.fact));
    return {o.fact};
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
    Loaded l = load(o.kb_path, err, true);
    if (!l.ok) return 1;
    out << "OK\n";
    return 0;
}

int cmd_derive(const Options& o, std::ostream& out, std::ostream& err) {
    Loaded l = load(o.kb_path, err, false);
    if (!l.ok) return 1;
    const KnowledgeBase& kb = l.kb;
    for (std::size_t index : selected_facts(kb, o)) {
        const Compound& fact = kb.facts[index];
        auto emit = [&](const nlohmann::json& j, const std::string& text) {
            if (o.format == Format::json)
                out << j.dump() << '\n';
            else
                out << text << '\n';
        };
        if (fact.is_leaf()) {
            for (const auto& a : conclusions_of(kb, fact.atom()))
                emit(to_json(a, kb.lexicon), render_text(a, kb.lexicon));
        } else {
            for (const auto& c : derive_all(kb, fact))
                emit(to_json(c, kb.lexicon), render_text(c, kb.lexicon));
        }
    }
    return 0;
}

// "WHICH_PART:from" or "WHICH_PART" / "HOW" / "WHICH_KIND".
std::pair<QuestionOperator, std::optional<PlaceSlot>> parse_ask(const std::string& text) {
    auto colon = text.find(':');
    auto op = parse_operator(text.substr(0, colon));
    if (!op) throw UsageError("unknown operator '" + text + "'");
    std::optional<PlaceSlot> slot;
    if (colon != std::string::npos) {
        slot = parse_place_slot(text.substr(colon + 1));
        if (!slot) throw UsageError("unknown place slot in '" + text + "'");
    }
    return {*op, slot};
}

int cmd_ask(const Options& o, std::ostream& out, std::ostream& err) {
    std::vector<std::pair<QuestionOperator, std::optional<PlaceSlot>>> asks;
    for (const auto& a : o.args) asks.push_back(parse_ask(a));
    Loaded l = load(o.kb_path, err, false);
    if (!l.ok) return 1;
    const KnowledgeBase& kb = l.kb;
    if (o.fact >= kb.facts.size() || !kb.facts[o.fact].is_leaf()) {
        err << "error: fact " << o.fact << " is missing or compound\n";
        return 1;
    }
    Session session = open_session(kb, kb.facts[o.fact].atom());
    for (const auto& [op, slot] : asks) session.ask(op, slot);
    if (o.format == Format::json) {
        const RenderStyle style = session.at_opening() ? RenderStyle::generic : RenderStyle::standard;
        out << to_json(session.utterance(), kb.lexicon, style).dump() << '\n';
    } else {
        out << session.rendered() << '\n';
    }
    return 0;
}

int cmd_repl(const Options& o, std::istream& in, std::ostream& out, std::ostream& err,
             bool transcript) {
    Loaded l = load(o.kb_path, err, false);
    if (!l.ok) return 1;
    return run_repl(l.kb, o.fact, in, out, transcript);
}

int cmd_annotate(const Options& o, std::ostream& out, std::ostream& err) {
    expect_args(o, 3, "<subject> <verb> <noun>");
    Loaded l = load(o.kb_path, err, false);
    if (!l.ok) return 1;
    const KnowledgeBase& kb = l.kb;
    auto tense = parse_tense(o.tense);
    if (!tense) throw UsageError("unknown tense '" + o.tense + "'");
    const Term subject = kb.resolve(o.args[0]);
    const Term verb = kb.resolve(o.args[1]);
    const Term noun = kb.resolve(o.args[2]);
    Atom a;
    try {
        a = annotate(kb, subject, verb, noun, *tense);
    } catch (const FrameMismatchError&) {
        a = make_atom(subject, verb, noun, {}, *tense);
        a.adverb = FrequencyAdverb::never;
    }
    if (o.format == Format::json)
        out << to_json(a, kb.lexicon).dump() << '\n';
    else
        out << render_text(a, kb.lexicon) << '\n';
    return 0;
}

int cmd_serve(const Options& o, std::ostream& out, std::ostream& err) {
    Loaded l = load(o.kb_path, err, false);
    if (!l.ok) return 1;
    serve(l.kb, o.host, o.port, out);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err, bool transcript) {
    CLI::App app{"Deduction over verb, noun and place taxonomies", "verblogic"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};
    app.add_option("--format", o.format, "Output format: text or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
        ->type_name("FORMAT");
    app.add_option("--kb", o.kb_path, "Knowledge base file");

    auto with_kb = [&](CLI::App* sub, const char* positional_help) {
        sub->add_option("args", o.args, positional_help);
        return sub;
    };
    auto* check = with_kb(app.add_subcommand("check", "Parse and load a knowledge base"), "<kb>");
    auto* derive = with_kb(app.add_subcommand("derive", "Print every conclusion of the facts"), "<kb>");
    derive->add_option("--fact", o.fact, "Only this fact (0-based)");
    auto* ask_cmd = with_kb(app.add_subcommand("ask", "Apply question operators to a fact's opening"),
                            "<kb> [HOW|WHICH_PART[:slot]|WHICH_KIND]...");
    ask_cmd->add_option("--fact", o.fact, "Fact index (0-based)");
    auto* repl = with_kb(app.add_subcommand("repl", "Interactive dialogue over a fact"), "<kb>");
    repl->add_option("--fact", o.fact, "Fact index (0-based)");
    auto* annotate_cmd = with_kb(app.add_subcommand("annotate", "Frequency statement for subject, verb, noun"),
                                 "<kb> <subject> <verb> <noun>");
    annotate_cmd->add_option("--tense", o.tense, "past, present or future");
    auto* serve_cmd = with_kb(app.add_subcommand("serve", "Serve the JSON dialogue API"), "<kb>");
    serve_cmd->add_option("--port", o.port, "Port")->check(CLI::Range(1, 65535));
    serve_cmd->add_option("--host", o.host, "Address to bind");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }
    o.fact_given = derive->count("--fact") > 0;

    try {
        take_kb_path(o);
        if (app.got_subcommand(check)) {
            expect_args(o, 0, "only a knowledge base file");
            return cmd_check(o, out, err);
        }
        if (app.got_subcommand(derive)) {
            expect_args(o, 0, "only a knowledge base file");
            return cmd_derive(o, out, err);
        }
        if (app.got_subcommand(ask_cmd)) return cmd_ask(o, out, err);
        if (app.got_subcommand(repl)) {
            expect_args(o, 0, "only a knowledge base file");
            return cmd_repl(o, in, out, err, transcript);
        }
        if (app.got_subcommand(annotate_cmd)) return cmd_annotate(o, out, err);
        if (app.got_subcommand(serve_cmd)) {
            expect_args(o, 0, "only a knowledge base file");
            return cmd_serve(o, out, err);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n\n" << app.help();
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace verblogic::app
