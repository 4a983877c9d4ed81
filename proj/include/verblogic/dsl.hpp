#pragma once

#include "verblogic/dialogue.hpp"
#include "verblogic/errors.hpp"
#include "verblogic/knowledge_base.hpp"
#include "verblogic/statement.hpp"
#include "verblogic/taxonomy.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace verblogic::dsl {

enum class Severity { error, warning };

struct Diagnostic {
    int line = 0;    // 1-based
    int column = 0;  // 1-based
    Severity severity = Severity::error;
    std::string message;
};

std::string_view to_string(Severity severity);
// "<file>:<line>:<col>: error: message"
std::string format(const Diagnostic& d, std::string_view file);
bool has_errors(const std::vector<Diagnostic>& diagnostics);

// `kind|part|way a < b` and `isa x : c`.
struct EdgeDecl {
    RelationKind kind;
    Term child;
    Term parent;
    bool individual = false;

    friend bool operator==(const EdgeDecl&, const EdgeDecl&) = default;
};

struct IsoDecl {
    Term verb;
    Term noun_class;
    friend bool operator==(const IsoDecl&, const IsoDecl&) = default;
};

struct SubjectDecl {
    Term subject;
    Term subject_class;
    friend bool operator==(const SubjectDecl&, const SubjectDecl&) = default;
};

struct MuDecl {
    Term subject_class;
    Term verb;
    Term noun;
    double mu = 0.0;
    friend bool operator==(const MuDecl&, const MuDecl&) = default;
};

struct MassDecl {
    Term noun;
    friend bool operator==(const MassDecl&, const MassDecl&) = default;
};

struct FactDecl {
    Compound statement;
    friend bool operator==(const FactDecl&, const FactDecl&) = default;
};

using DeclarationBody = std::variant<EdgeDecl, IsoDecl, SubjectDecl, MuDecl, MassDecl, FactDecl>;

struct Declaration {
    int line = 0;
    int column = 0;
    DeclarationBody body;
};

struct KBSource {
    std::vector<Declaration> declarations;

    std::size_t count_edges() const;
    std::size_t count_facts() const;
};

// Same declarations in the same order, ignoring source positions.
bool same_structure(const KBSource& a, const KBSource& b);

struct ParseResult {
    KBSource source;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return !has_errors(diagnostics); }
};

// Parses a whole file, collecting every diagnostic. Term display spelling
// is taken from a term's first occurrence.
ParseResult parse_kb(std::string_view text);

// One declaration per line; parse_kb(serialize(s)) has the same structure.
std::string serialize(const KBSource& source);
std::string fact_text(const Compound& fact);

struct BuildResult {
    KnowledgeBase kb;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return !has_errors(diagnostics); }
};

// Loads declarations into a KnowledgeBase (edges, then tables, then facts).
// Cycles and self-loops become positioned diagnostics.
BuildResult build_kb(const KBSource& source);

// parse_kb followed by build_kb; diagnostics from both stages.
BuildResult load_kb(std::string_view text);

struct ReplCommand {
    enum class Kind { ask, show_conclusions, show_fact, annotate, quit };

    Kind kind = Kind::quit;
    QuestionOperator op = QuestionOperator::how;
    std::optional<PlaceSlot> slot;
    Term subject;
    Term verb;
    Term noun;

    friend bool operator==(const ReplCommand&, const ReplCommand&) = default;
};

class CommandError : public Error {
public:
    explicit CommandError(Diagnostic d) : Error("unknown_command", d.message), diagnostic_(std::move(d)) {}
    const Diagnostic& diagnostic() const noexcept { return diagnostic_; }

private:
    Diagnostic diagnostic_;
};

inline constexpr std::string_view accepted_commands =
    "HOW | WHICH PART [in|from|to] | WHICHPART [slot] | WHICH KIND | WHAT KIND | "
    "conclusions | fact | annotate <subject> <verb> <noun> | quit";

// Throws CommandError listing the accepted forms.
ReplCommand parse_command(std::string_view line);

}  // namespace verblogic::dsl
