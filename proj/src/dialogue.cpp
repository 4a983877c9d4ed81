#include "verblogic/dialogue.hpp"

#include "verblogic/errors.hpp"

#include <cctype>

namespace verblogic {

std::string_view to_string(QuestionOperator op) {
    switch (op) {
    case QuestionOperator::how: return "HOW";
    case QuestionOperator::which_part: return "WHICH_PART";
    case QuestionOperator::which_kind: return "WHICH_KIND";
    }
    return "?";
}

std::optional<QuestionOperator> parse_operator(std::string_view text) {
    std::string norm;
    for (char c : text) {
        if (c == ' ' || c == '-') c = '_';
        norm.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    if (norm == "HOW") return QuestionOperator::how;
    if (norm == "WHICH_PART" || norm == "WHICHPART") return QuestionOperator::which_part;
    if (norm == "WHICH_KIND" || norm == "WHAT_KIND" || norm == "WHICHKIND" || norm == "WHATKIND")
        return QuestionOperator::which_kind;
    return std::nullopt;
}

Session::Session(const KnowledgeBase& kb, Atom fact, std::string id)
    : kb_(&kb), fact_(std::move(fact)), id_(std::move(id)) {
    if (fact_.negated)
        throw NegatedFactError("dialogue over negated facts is not supported");
    for (Axis axis : all_axes) {
        auto term = axis_term(fact_, axis);
        if (!term) continue;
        const RelationKind kind = relation_of(axis);
        Term top = kb.taxonomy.most_general(kind, *term);
        paths_[index(axis)] = kb.taxonomy.path_up(kind, *term, top);
        cursors_[index(axis)] = paths_[index(axis)].size() - 1;
    }
}

Atom Session::utterance() const {
    Atom out = fact_;
    for (Axis axis : all_axes) {
        const auto& p = paths_[index(axis)];
        if (!p.empty()) out = with_axis_term(std::move(out), axis, p[cursors_[index(axis)]]);
    }
    return out;
}

std::string Session::rendered() const {
    return render_text(utterance(), kb_->lexicon,
                       at_opening() ? RenderStyle::generic : RenderStyle::standard);
}

Axis Session::target_axis(QuestionOperator op, std::optional<PlaceSlot> slot) const {
    switch (op) {
    case QuestionOperator::how: return Axis::verb;
    case QuestionOperator::which_kind:
        if (!fact_.object) throw AxisEmptyError("the statement has no object to ask about");
        return Axis::object;
    case QuestionOperator::which_part:
        if (slot) {
            if (!fact_.places.get(*slot))
                throw AxisEmptyError("the statement has no '" + std::string(to_string(*slot)) +
                                     "' place");
            return place_axis(*slot);
        }
        if (fact_.places.empty()) throw AxisEmptyError("the statement has no place to ask about");
        if (fact_.places.occupied() > 1)
            throw AmbiguousSlotError("several places are given; name one of in, from, to");
        for (PlaceSlot s : all_place_slots)
            if (fact_.places.get(s)) return place_axis(s);
    }
    throw AxisEmptyError("no axis for operator");
}

Atom Session::ask(QuestionOperator op, std::optional<PlaceSlot> slot) {
    const Axis axis = target_axis(op, slot);
    auto& cursor = cursors_[index(axis)];
    if (cursor == 0)
        throw FullySpecificError((axis != Axis::verb && axis != Axis::object) ? "the '" + std::string(to_string(axis)) + "' place is already fully specific"
                                                   : "the " + std::string(to_string(axis)) + " is already fully specific");
    --cursor;
    ++asks_;
    return utterance();
}

std::vector<Refinement> Session::available_refinements() const {
    std::vector<Refinement> out;
    if (cursors_[index(Axis::verb)] > 0) out.push_back({QuestionOperator::how, std::nullopt});
    for (PlaceSlot s : all_place_slots)
        if (cursors_[index(place_axis(s))] > 0) out.push_back({QuestionOperator::which_part, s});
    if (cursors_[index(Axis::object)] > 0) out.push_back({QuestionOperator::which_kind, std::nullopt});
    return out;
}

Session open_session(const KnowledgeBase& kb, const Atom& fact, std::string id) {
    return Session(kb, fact, std::move(id));
}

}  // namespace verblogic
