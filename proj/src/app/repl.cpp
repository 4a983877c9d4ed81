#include "verblogic/app/repl.hpp"

#include "verblogic/dialogue.hpp"
#include "verblogic/dsl.hpp"
#include "verblogic/engine.hpp"
#include "verblogic/errors.hpp"
#include "verblogic/fuzzy.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <string>

namespace verblogic::app {

namespace {

void say(std::ostream& out, const std::string& text) { out << "A: " << text << '\n'; }

}  // namespace

std::string annotation_text(const KnowledgeBase& kb, const Term& subject, const Term& verb,
                       const Term& noun) {
    try {
        return render_text(annotate(kb, subject, verb, noun, Tense::present), kb.lexicon);
    } catch (const FrameMismatchError&) {
        Atom a = make_atom(subject, verb, noun, {}, Tense::present);
        a.adverb = FrequencyAdverb::never;
        return render_text(a, kb.lexicon);
    }
}

int run_repl(const KnowledgeBase& kb, std::size_t fact_index, std::istream& in, std::ostream& out,
             bool echo) {
    if (fact_index >= kb.facts.size()) {
        out << "error: no fact with index " << fact_index << '\n';
        return 1;
    }
    const Compound& fact = kb.facts[fact_index];
    if (!fact.is_leaf()) {
        out << "error: dialogue needs a single statement, not a compound\n";
        return 1;
    }
    std::optional<Session> opened;
    try {
        opened.emplace(open_session(kb, fact.atom()));
    } catch (const Error& e) {
        out << "error: " << e.what() << '\n';
        return 1;
    }
    Session& session = *opened;

    say(out, session.rendered());
    std::string line;
    for (;;) {
        out << "B> " << std::flush;
        if (!std::getline(in, line)) {
            out << '\n';
            break;
        }
        if (echo) out << line << '\n';
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

        try {
            const dsl::ReplCommand cmd = dsl::parse_command(line);
            using Kind = dsl::ReplCommand::Kind;
            if (cmd.kind == Kind::quit) break;
            switch (cmd.kind) {
            case Kind::ask:
                session.ask(cmd.op, cmd.slot);
                say(out, session.rendered());
                break;
            case Kind::show_fact: say(out, render_text(session.fact(), kb.lexicon)); break;
            case Kind::show_conclusions:
                for (const auto& c : derive_conclusions(kb, session.fact()))
                    say(out, render_text(c, kb.lexicon));
                break;
            case Kind::annotate:
                say(out, annotation_text(kb, kb.resolve(cmd.subject.display), kb.resolve(cmd.verb.display),
                                    kb.resolve(cmd.noun.display)));
                break;
            case Kind::quit: break;
            }
        } catch (const Error& e) {
            out << "error: " << e.what() << '\n';
        }
    }
    return 0;
}

}  // namespace verblogic::app
