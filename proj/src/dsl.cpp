#include "verblogic/dsl.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <map>
#include <sstream>

namespace verblogic::dsl {

std::string_view to_string(Severity severity) {
    return severity == Severity::error ? "error" : "warning";
}

std::string format(const Diagnostic& d, std::string_view file) {
    std::ostringstream os;
    os << file << ':' << d.line << ':' << d.column << ": " << to_string(d.severity) << ": "
       << d.message;
    return os.str();
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::error; });
}

std::size_t KBSource::count_edges() const {
    return std::count_if(declarations.begin(), declarations.end(), [](const Declaration& d) {
        return std::holds_alternative<EdgeDecl>(d.body);
    });
}

std::size_t KBSource::count_facts() const {
    return std::count_if(declarations.begin(), declarations.end(), [](const Declaration& d) {
        return std::holds_alternative<FactDecl>(d.body);
    });
}

bool same_structure(const KBSource& a, const KBSource& b) {
    if (a.declarations.size() != b.declarations.size()) return false;
    for (std::size_t i = 0; i < a.declarations.size(); ++i)
        if (!(a.declarations[i].body == b.declarations[i].body)) return false;
    return true;
}

namespace {

// ---------------------------------------------------------------------------
// Lexer

struct Token {
    enum class Type { word, string, punct };
    Type type;
    std::string text;
    int column;
};

bool is_punct(char c) { return c == '<' || c == ':' || c == '~' || c == '=' || c == '(' || c == ')'; }

std::vector<Token> tokenize(std::string_view line, int line_no, std::vector<Diagnostic>& diags) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '#') {
            break;
        } else if (c == '"') {
            const int col = static_cast<int>(i) + 1;
            std::string text;
            ++i;
            bool closed = false;
            while (i < line.size()) {
                if (line[i] == '\\' && i + 1 < line.size()) {
                    text.push_back(line[i + 1]);
                    i += 2;
                } else if (line[i] == '"') {
                    closed = true;
                    ++i;
                    break;
                } else {
                    text.push_back(line[i++]);
                }
            }
            if (!closed) {
                diags.push_back({line_no, col, Severity::error, "unterminated string"});
                return {};
            }
            tokens.push_back({Token::Type::string, std::move(text), col});
        } else if (is_punct(c)) {
            tokens.push_back({Token::Type::punct, std::string(1, c), static_cast<int>(i) + 1});
            ++i;
        } else {
            const std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
                   !is_punct(line[i]) && line[i] != '"' && line[i] != '#')
                ++i;
            tokens.push_back({Token::Type::word, std::string(line.substr(start, i - start)),
                              static_cast<int>(start) + 1});
        }
    }
    return tokens;
}

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

// ---------------------------------------------------------------------------
// Parser

struct ParseState {
    std::map<std::string, std::string> displays;  // id -> first spelling
    std::map<std::string, std::pair<std::string, int>> isos;  // verb -> (class, line)
    ParseResult result;
};

class LineParser {
public:
    LineParser(std::vector<Token> tokens, int line_no, int line_length, ParseState& state)
        : tokens_(std::move(tokens)), line_(line_no), eol_column_(line_length + 1), state_(state) {}

    void parse();

private:
    // Parse failures unwind to parse() after recording a diagnostic.
    struct Abort {};

    bool at_end() const { return pos_ >= tokens_.size(); }
    const Token* peek() const { return at_end() ? nullptr : &tokens_[pos_]; }
    int column() const { return at_end() ? eol_column_ : tokens_[pos_].column; }

    [[noreturn]] void fail(const std::string& message, int col) {
        error(message, col);
        throw Abort{};
    }
    void error(const std::string& message, int col) {
        state_.result.diagnostics.push_back({line_, col, Severity::error, message});
    }
    void warning(const std::string& message, int col) {
        state_.result.diagnostics.push_back({line_, col, Severity::warning, message});
    }

    bool peek_word(std::string_view w) const {
        const Token* t = peek();
        return t && t->type == Token::Type::word && lower(t->text) == w;
    }
    bool peek_punct(char c) const {
        const Token* t = peek();
        return t && t->type == Token::Type::punct && t->text[0] == c;
    }

    Term make_term(const std::string& text) {
        std::string id = canonical_id(text);
        auto [it, inserted] = state_.displays.try_emplace(id, text);
        return Term(std::move(id), it->second);
    }

    Term expect_term(std::string_view what) {
        const Token* t = peek();
        if (!t || t->type != Token::Type::word)
            fail("expected " + std::string(what) + (t ? ", found '" + t->text + "'" : ""), column());
        ++pos_;
        return make_term(t->text);
    }

    void expect_punct(char c) {
        if (!peek_punct(c)) {
            const Token* t = peek();
            fail(std::string("expected '") + c + "'" + (t ? ", found '" + t->text + "'" : ""),
                 column());
        }
        ++pos_;
    }

    void expect_end() {
        if (!at_end()) fail("unexpected '" + peek()->text + "'", column());
    }

    void add(int col, DeclarationBody body) {
        state_.result.source.declarations.push_back({line_, col, std::move(body)});
    }

    void parse_edges(RelationKind kind, int col);
    void parse_isa(int col);
    void parse_iso(int col);
    void parse_subject(int col);
    void parse_mu(int col);
    void parse_mass(int col);
    void parse_fact(int col);
    std::optional<TermList> parse_term_spec(std::string_view what, Term& single);

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int line_;
    int eol_column_;
    ParseState& state_;
};

void LineParser::parse() {
    if (tokens_.empty()) return;
    const Token& head = tokens_[0];
    const int col = head.column;
    try {
        if (head.type != Token::Type::word) fail("expected a declaration keyword", col);
        const std::string kw = lower(head.text);
        ++pos_;
        if (kw == "kind") parse_edges(RelationKind::kind_of, col);
        else if (kw == "part") parse_edges(RelationKind::part_of, col);
        else if (kw == "way") parse_edges(RelationKind::way_of, col);
        else if (kw == "isa") parse_isa(col);
        else if (kw == "iso") parse_iso(col);
        else if (kw == "subject") parse_subject(col);
        else if (kw == "mu") parse_mu(col);
        else if (kw == "mass") parse_mass(col);
        else if (kw == "fact") parse_fact(col);
        else
            fail("unknown keyword '" + head.text +
                     "' (expected kind, part, way, isa, iso, subject, mu, mass or fact)",
                 col);
    } catch (const Abort&) {
    }
}

void LineParser::parse_edges(RelationKind kind, int col) {
    // Chains are accepted: `kind orange < fruit < food`.
    std::vector<EdgeDecl> edges;
    Term child = expect_term("a term");
    do {
        expect_punct('<');
        Term parent = expect_term("a parent term");
        if (parent == child) fail("'" + child.display + "' cannot be below itself", column());
        edges.push_back({kind, child, parent, false});
        child = parent;
    } while (!at_end());
    for (auto& e : edges) add(col, std::move(e));
}

void LineParser::parse_isa(int col) {
    Term individual = expect_term("an individual");
    expect_punct(':');
    Term cls = expect_term("a class");
    expect_end();
    if (individual == cls) fail("'" + cls.display + "' cannot be an instance of itself", col);
    add(col, EdgeDecl{RelationKind::kind_of, individual, cls, true});
}

void LineParser::parse_iso(int col) {
    Term verb = expect_term("a verb");
    expect_punct('~');
    const int class_col = column();
    Term cls = expect_term("a noun class");
    expect_end();
    auto [it, inserted] = state_.isos.try_emplace(verb.id, cls.id, line_);
    if (!inserted) {
        if (it->second.first != cls.id)
            fail("duplicate iso for verb '" + verb.display + "' (already declared on line " +
                     std::to_string(it->second.second) + ")",
                 class_col);
        warning("repeated iso declaration", col);
        return;
    }
    add(col, IsoDecl{verb, cls});
}

void LineParser::parse_subject(int col) {
    Term subject = expect_term("a subject");
    expect_punct(':');
    Term cls = expect_term("a subject class");
    expect_end();
    add(col, SubjectDecl{subject, cls});
}

void LineParser::parse_mu(int col) {
    Term cls = expect_term("a subject class");
    Term verb = expect_term("a verb");
    Term noun = expect_term("a noun");
    expect_punct('=');
    const Token* t = peek();
    const int value_col = column();
    if (!t || t->type != Token::Type::word) fail("expected a decimal value", value_col);
    double value = 0.0;
    const char* first = t->text.data();
    const char* last = first + t->text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) fail("'" + t->text + "' is not a decimal value", value_col);
    ++pos_;
    expect_end();
    if (!(value >= 0.0 && value <= 1.0)) fail("value outside [0,1]", value_col);
    add(col, MuDecl{cls, verb, noun, value});
}

void LineParser::parse_mass(int col) {
    std::vector<Term> nouns{expect_term("a noun")};
    while (!at_end()) nouns.push_back(expect_term("a noun"));
    for (auto& n : nouns) add(col, MassDecl{std::move(n)});
}

std::optional<TermList> LineParser::parse_term_spec(std::string_view what, Term& single) {
    if (!peek_punct('(')) {
        single = expect_term(what);
        return std::nullopt;
    }
    ++pos_;
    TermList list;
    list.terms.push_back(expect_term(what));
    std::optional<Junction> junction;
    while (!peek_punct(')')) {
        const int jcol = column();
        Junction j;
        if (peek_word("and")) j = Junction::all;
        else if (peek_word("or")) j = Junction::any;
        else fail("expected 'and', 'or' or ')'", jcol);
        if (junction && *junction != j) fail("cannot mix 'and' and 'or' in one list", jcol);
        junction = j;
        ++pos_;
        list.terms.push_back(expect_term(what));
    }
    ++pos_;
    if (!junction) fail("a parenthesized list needs at least two terms", column());
    list.junction = *junction;
    single = list.terms.front();
    return list;
}

void LineParser::parse_fact(int col) {
    Term subject = expect_term("a subject");
    const int tense_col = column();
    const Token* t = peek();
    if (!t || t->type != Token::Type::word) fail("expected a tense (past, present or future)", tense_col);
    auto tense = parse_tense(lower(t->text));
    if (!tense) fail("unknown tense '" + t->text + "' (expected past, present or future)", tense_col);
    ++pos_;

    bool negated = false;
    bool can = false;
    std::optional<FrequencyAdverb> adverb;
    for (;;) {
        if (peek_word("not") && !negated) negated = true;
        else if (peek_word("can") && !can) can = true;
        else if (peek() && peek()->type == Token::Type::word && !adverb &&
                 parse_adverb(lower(peek()->text)))
            adverb = parse_adverb(lower(peek()->text));
        else break;
        ++pos_;
    }

    Term verb;
    auto verbs = parse_term_spec("a verb", verb);

    std::optional<Term> object;
    std::optional<TermList> objects;
    auto is_slot_word = [&] {
        return peek_word("in") || peek_word("from") || peek_word("to") || peek_word("if");
    };
    if (!at_end() && !is_slot_word() && (peek_punct('(') || peek()->type == Token::Type::word)) {
        Term o;
        objects = parse_term_spec("an object", o);
        object = o;
    }

    Places places;
    std::optional<std::string> condition;
    while (!at_end()) {
        const int kw_col = column();
        if (peek_word("if")) {
            if (condition) fail("condition given twice", kw_col);
            ++pos_;
            const Token* s = peek();
            if (!s || s->type != Token::Type::string) fail("expected a quoted condition after 'if'", column());
            condition = s->text;
            ++pos_;
            continue;
        }
        const Token* k = peek();
        auto slot = k->type == Token::Type::word ? parse_place_slot(lower(k->text)) : std::nullopt;
        if (!slot) fail("unexpected '" + k->text + "' (expected in, from, to or if)", kw_col);
        if (places.get(*slot)) fail("place slot '" + std::string(to_string(*slot)) + "' given twice", kw_col);
        ++pos_;
        places.set(*slot, expect_term("a place"));
    }

    try {
        Atom base = make_atom(subject, verb, object, places, *tense, negated, condition, can);
        base.adverb = adverb;
        add(col, FactDecl{Compound::factored(std::move(base), std::move(verbs), std::move(objects))});
    } catch (const EmptyFrameError& e) {
        fail(std::string(e.what()), col);
    }
}

}  // namespace

ParseResult parse_kb(std::string_view text) {
    ParseState state;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;
        auto tokens = tokenize(line, line_no, state.result.diagnostics);
        LineParser(std::move(tokens), line_no, static_cast<int>(line.size()), state).parse();
        if (end == text.size()) break;
        start = end + 1;
    }
    return std::move(state.result);
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

std::string quoted(std::string_view text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out + "\"";
}

std::string spec(const Term& single, const std::optional<TermList>& list) {
    if (!list) return single.display;
    std::string out = "(";
    for (std::size_t i = 0; i < list->terms.size(); ++i) {
        if (i) out += " " + std::string(to_string(list->junction)) + " ";
        out += list->terms[i].display;
    }
    return out + ")";
}

std::string format_number(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

}  // namespace

std::string fact_text(const Compound& fact) {
    if (fact.is_junction())
        throw std::invalid_argument("only single statements and factored lists are facts");
    const Atom& a = fact.atom();
    std::string out = "fact " + a.subject.display + " " + std::string(to_string(a.tense));
    if (a.negated) out += " not";
    if (a.can) out += " can";
    if (a.adverb) out += " " + std::string(to_string(*a.adverb));
    out += " " + spec(a.verb, fact.verbs());
    if (a.object) out += " " + spec(*a.object, fact.objects());
    for (PlaceSlot s : all_place_slots)
        if (const auto& p = a.places.get(s)) out += " " + std::string(to_string(s)) + " " + p->display;
    if (a.condition) out += " if " + quoted(*a.condition);
    return out;
}

std::string serialize(const KBSource& source) {
    std::string out;
    for (const auto& decl : source.declarations) {
        std::visit(
            [&](const auto& d) {
                using T = std::decay_t<decltype(d)>;
                if constexpr (std::is_same_v<T, EdgeDecl>) {
                    if (d.individual) {
                        out += "isa " + d.child.display + " : " + d.parent.display;
                    } else {
                        const char* kw = d.kind == RelationKind::kind_of   ? "kind"
                                         : d.kind == RelationKind::part_of ? "part"
                                                                           : "way";
                        out += std::string(kw) + " " + d.child.display + " < " + d.parent.display;
                    }
                } else if constexpr (std::is_same_v<T, IsoDecl>) {
                    out += "iso " + d.verb.display + " ~ " + d.noun_class.display;
                } else if constexpr (std::is_same_v<T, SubjectDecl>) {
                    out += "subject " + d.subject.display + " : " + d.subject_class.display;
                } else if constexpr (std::is_same_v<T, MuDecl>) {
                    out += "mu " + d.subject_class.display + " " + d.verb.display + " " +
                           d.noun.display + " = " + format_number(d.mu);
                } else if constexpr (std::is_same_v<T, MassDecl>) {
                    out += "mass " + d.noun.display;
                } else {
                    out += fact_text(d.statement);
                }
            },
            decl.body);
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Building

BuildResult build_kb(const KBSource& source) {
    BuildResult result;
    KnowledgeBase& kb = result.kb;
    auto report = [&](const Declaration& decl, const std::string& message) {
        result.diagnostics.push_back({decl.line, decl.column, Severity::error, message});
    };

    auto remember = [&](const Term& t) { kb.displays.try_emplace(t.id, t.display); };
    for (const auto& decl : source.declarations) {
        std::visit(
            [&](const auto& d) {
                using T = std::decay_t<decltype(d)>;
                if constexpr (std::is_same_v<T, EdgeDecl>) {
                    remember(d.child);
                    remember(d.parent);
                } else if constexpr (std::is_same_v<T, IsoDecl>) {
                    remember(d.verb);
                    remember(d.noun_class);
                } else if constexpr (std::is_same_v<T, SubjectDecl>) {
                    remember(d.subject);
                    remember(d.subject_class);
                } else if constexpr (std::is_same_v<T, MuDecl>) {
                    remember(d.subject_class);
                    remember(d.verb);
                    remember(d.noun);
                } else if constexpr (std::is_same_v<T, MassDecl>) {
                    remember(d.noun);
                } else {
                    for (const auto& a : d.statement.atoms()) {
                        remember(a.subject);
                        remember(a.verb);
                        if (a.object) remember(*a.object);
                        for (PlaceSlot s : all_place_slots)
                            if (const auto& p = a.places.get(s)) remember(*p);
                    }
                }
            },
            decl.body);
    }

    // Edges first so that facts and tables never depend on declaration order.
    for (const auto& decl : source.declarations) {
        const auto* e = std::get_if<EdgeDecl>(&decl.body);
        if (!e) continue;
        try {
            if (!kb.taxonomy.add_edge(e->kind, e->child, e->parent))
                result.diagnostics.push_back(
                    {decl.line, decl.column, Severity::warning, "duplicate edge"});
            if (e->individual) kb.lexicon.add_bare_noun(e->child.id);
        } catch (const Error& err) {
            report(decl, err.what());
        }
    }

    for (const auto& decl : source.declarations) {
        try {
            if (const auto* d = std::get_if<IsoDecl>(&decl.body))
                kb.fuzzy.add_isomorphism(d->verb, d->noun_class);
            else if (const auto* d = std::get_if<SubjectDecl>(&decl.body))
                kb.fuzzy.set_subject_class(d->subject, d->subject_class);
            else if (const auto* d = std::get_if<MuDecl>(&decl.body))
                kb.fuzzy.set_mu(d->subject_class, d->verb, d->noun, d->mu);
            else if (const auto* d = std::get_if<MassDecl>(&decl.body))
                kb.lexicon.add_bare_noun(d->noun.id);
            else if (const auto* d = std::get_if<FactDecl>(&decl.body))
                kb.facts.push_back(d->statement);
        } catch (const std::exception& err) {
            report(decl, err.what());
        }
    }
    return result;
}

BuildResult load_kb(std::string_view text) {
    ParseResult parsed = parse_kb(text);
    BuildResult built = build_kb(parsed.source);
    parsed.diagnostics.insert(parsed.diagnostics.end(), built.diagnostics.begin(),
                              built.diagnostics.end());
    std::stable_sort(parsed.diagnostics.begin(), parsed.diagnostics.end(),
                     [](const Diagnostic& a, const Diagnostic& b) { return a.line < b.line; });
    built.diagnostics = std::move(parsed.diagnostics);
    return built;
}

// ---------------------------------------------------------------------------
// REPL commands

ReplCommand parse_command(std::string_view line) {
    std::vector<Diagnostic> diags;
    auto tokens = tokenize(line, 1, diags);
    auto unknown = [&](int col) -> CommandError {
        std::string shown(line);
        while (!shown.empty() && std::isspace(static_cast<unsigned char>(shown.back()))) shown.pop_back();
        return CommandError({1, col, Severity::error,
                             "unknown command '" + shown + "'; accepted: " +
                                 std::string(accepted_commands)});
    };
    if (!diags.empty() || tokens.empty()) throw unknown(1);
    for (const auto& t : tokens)
        if (t.type != Token::Type::word) throw unknown(t.column);

    std::vector<std::string> words;
    for (const auto& t : tokens) words.push_back(lower(t.text));

    ReplCommand cmd;
    auto slot_arg = [&](std::size_t i) -> std::optional<PlaceSlot> {
        if (i >= words.size()) return std::nullopt;
        if (i + 1 != words.size()) throw unknown(tokens[i + 1].column);
        auto s = parse_place_slot(words[i]);
        if (!s) throw unknown(tokens[i].column);
        return s;
    };

    const std::string& w0 = words[0];
    if (w0 == "how" && words.size() == 1) {
        cmd.kind = ReplCommand::Kind::ask;
        cmd.op = QuestionOperator::how;
    } else if ((w0 == "which" && words.size() >= 2 && words[1] == "part") || w0 == "whichpart" ||
               w0 == "which_part") {
        cmd.kind = ReplCommand::Kind::ask;
        cmd.op = QuestionOperator::which_part;
        cmd.slot = slot_arg(w0 == "which" ? 2 : 1);
    } else if (((w0 == "which" || w0 == "what") && words.size() == 2 && words[1] == "kind") ||
               ((w0 == "whichkind" || w0 == "which_kind" || w0 == "whatkind" ||
                 w0 == "what_kind") && words.size() == 1)) {
        cmd.kind = ReplCommand::Kind::ask;
        cmd.op = QuestionOperator::which_kind;
    } else if (w0 == "conclusions" && words.size() == 1) {
        cmd.kind = ReplCommand::Kind::show_conclusions;
    } else if (w0 == "fact" && words.size() == 1) {
        cmd.kind = ReplCommand::Kind::show_fact;
    } else if (w0 == "annotate" && words.size() == 4) {
        cmd.kind = ReplCommand::Kind::annotate;
        cmd.subject = Term(tokens[1].text);
        cmd.verb = Term(tokens[2].text);
        cmd.noun = Term(tokens[3].text);
    } else if ((w0 == "quit" || w0 == "exit") && words.size() == 1) {
        cmd.kind = ReplCommand::Kind::quit;
    } else {
        throw unknown(tokens[0].column);
    }
    return cmd;
}

}  // namespace verblogic::dsl
