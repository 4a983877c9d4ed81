#pragma once

#include "verblogic/engine.hpp"
#include "verblogic/knowledge_base.hpp"
#include "verblogic/statement.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace verblogic {

// Question operators invert specificity by one step on one axis family:
// HOW on the verb, WHICH_PART on a place slot, WHICH_KIND on the object.
enum class QuestionOperator { how, which_part, which_kind };

std::string_view to_string(QuestionOperator op);
// Accepts HOW, WHICH_PART, WHICH_KIND and WHAT_KIND (any case, '_' or ' ').
std::optional<QuestionOperator> parse_operator(std::string_view text);

struct Refinement {
    QuestionOperator op;
    std::optional<PlaceSlot> slot;

    friend bool operator==(const Refinement&, const Refinement&) = default;
};

// A conversation about one positive fact. It opens on the most general
// statement derivable from the fact and each ask moves one axis one step
// back toward it. Not thread-safe; distinct sessions may share a KB.
class Session {
public:
    Session(const KnowledgeBase& kb, Atom fact, std::string id);

    const std::string& id() const noexcept { return id_; }
    const Atom& fact() const noexcept { return fact_; }

    // Current statement, rebuilt from the per-axis cursors.
    Atom utterance() const;
    // The opening is rendered in the generic register ("own property").
    std::string rendered() const;
    bool at_opening() const noexcept { return asks_ == 0; }

    // Terms from the fact's term (index 0) up to the opening term.
    // Empty for unoccupied axes.
    const std::vector<Term>& path(Axis axis) const { return paths_[index(axis)]; }
    std::size_t cursor(Axis axis) const { return cursors_[index(axis)]; }

    // Throws AxisEmptyError, AmbiguousSlotError or FullySpecificError.
    Atom ask(QuestionOperator op, std::optional<PlaceSlot> slot = std::nullopt);

    std::vector<Refinement> available_refinements() const;

private:
    static std::size_t index(Axis axis) { return static_cast<std::size_t>(axis); }
    Axis target_axis(QuestionOperator op, std::optional<PlaceSlot> slot) const;

    const KnowledgeBase* kb_;
    Atom fact_;
    std::string id_;
    std::array<std::vector<Term>, 5> paths_;
    std::array<std::size_t, 5> cursors_{};
    std::size_t asks_ = 0;
};

// Throws NegatedFactError for negated facts.
Session open_session(const KnowledgeBase& kb, const Atom& fact, std::string id = "");

inline Atom ask(Session& session, QuestionOperator op,
                std::optional<PlaceSlot> slot = std::nullopt) {
    return session.ask(op, slot);
}

inline std::vector<Refinement> available_refinements(const Session& session) {
    return session.available_refinements();
}

}  // namespace verblogic
