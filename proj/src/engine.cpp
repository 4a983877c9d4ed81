#include "verblogic/engine.hpp"

#include "verblogic/errors.hpp"

#include <functional>
#include <vector>

namespace verblogic {

std::string_view to_string(Axis axis) {
    switch (axis) {
    case Axis::verb: return "verb";
    case Axis::object: return "object";
    case Axis::place_in: return "in";
    case Axis::place_from: return "from";
    case Axis::place_to: return "to";
    }
    return "?";
}

RelationKind relation_of(Axis axis) {
    switch (axis) {
    case Axis::verb: return RelationKind::way_of;
    case Axis::object: return RelationKind::kind_of;
    default: return RelationKind::part_of;
    }
}

Axis place_axis(PlaceSlot slot) {
    switch (slot) {
    case PlaceSlot::in: return Axis::place_in;
    case PlaceSlot::from: return Axis::place_from;
    case PlaceSlot::to: return Axis::place_to;
    }
    return Axis::place_in;
}

std::optional<PlaceSlot> place_slot_of(Axis axis) {
    switch (axis) {
    case Axis::place_in: return PlaceSlot::in;
    case Axis::place_from: return PlaceSlot::from;
    case Axis::place_to: return PlaceSlot::to;
    default: return std::nullopt;
    }
}

std::optional<Term> axis_term(const Atom& atom, Axis axis) {
    if (axis == Axis::verb) return atom.verb;
    if (axis == Axis::object) return atom.object;
    return atom.places.get(*place_slot_of(axis));
}

Atom with_axis_term(Atom atom, Axis axis, Term term) {
    if (axis == Axis::verb)
        atom.verb = std::move(term);
    else if (axis == Axis::object)
        atom.object = std::move(term);
    else
        atom.places.set(*place_slot_of(axis), std::move(term));
    return atom;
}

namespace {

enum class Direction { up, down };

ConclusionSet expand(const KnowledgeBase& kb, const Atom& fact, Direction dir) {
    // Per occupied axis: the term itself first, then every replacement.
    std::vector<std::pair<Axis, std::vector<Term>>> choices;
    for (Axis axis : all_axes) {
        auto term = axis_term(fact, axis);
        if (!term) continue;
        std::vector<Term> options{*term};
        TermSet more = dir == Direction::up
                           ? kb.taxonomy.strict_ancestors(relation_of(axis), *term)
                           : kb.taxonomy.strict_descendants(relation_of(axis), *term);
        options.insert(options.end(), more.begin(), more.end());
        choices.emplace_back(axis, std::move(options));
    }

    ConclusionSet out;
    std::function<void(std::size_t, const Atom&)> walk = [&](std::size_t i, const Atom& current) {
        if (i == choices.size()) {
            if (current != fact) out.insert(current);
            return;
        }
        const auto& [axis, options] = choices[i];
        for (const auto& t : options) walk(i + 1, with_axis_term(current, axis, t));
    };
    walk(0, fact);
    return out;
}

}  // namespace

ConclusionSet derive_conclusions(const KnowledgeBase& kb, const Atom& fact) {
    if (fact.negated)
        throw NegatedFactError("negated facts specialize downward; use specialize_negative");
    return expand(kb, fact, Direction::up);
}

ConclusionSet specialize_negative(const KnowledgeBase& kb, const Atom& fact) {
    if (!fact.negated)
        throw PositiveFactError("positive facts generalize upward; use derive_conclusions");
    return expand(kb, fact, Direction::down);
}

ConclusionSet conclusions_of(const KnowledgeBase& kb, const Atom& fact) {
    return fact.negated ? specialize_negative(kb, fact) : derive_conclusions(kb, fact);
}

namespace {

void collect_leaves(const Compound& c, std::vector<Atom>& leaves) {
    if (c.is_leaf()) {
        leaves.push_back(c.atom());
        return;
    }
    for (const auto& child : c.children()) collect_leaves(child, leaves);
}

Compound replace_leaves(const Compound& c, const std::vector<Atom>& replacement, std::size_t& next) {
    if (c.is_leaf()) return Compound::leaf(replacement[next++]);
    std::vector<Compound> children;
    for (const auto& child : c.children()) children.push_back(replace_leaves(child, replacement, next));
    return Compound::join(c.junction(), std::move(children));
}

}  // namespace

CompoundSet derive_all(const KnowledgeBase& kb, const Compound& fact) {
    const Compound canonical = canonical_form(fact);
    std::vector<Atom> leaves;
    collect_leaves(canonical, leaves);

    std::vector<std::vector<Atom>> options;
    for (const auto& leaf : leaves) {
        std::vector<Atom> o{leaf};
        for (const auto& c : conclusions_of(kb, leaf)) o.push_back(c);
        options.push_back(std::move(o));
    }

    const std::string original = serialize(canonical);
    CompoundSet out;
    std::vector<Atom> pick(leaves.size());
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (i == leaves.size()) {
            std::size_t next = 0;
            Compound result = canonical_form(replace_leaves(canonical, pick, next));
            if (serialize(result) != original) out.insert(std::move(result));
            return;
        }
        for (const auto& a : options[i]) {
            pick[i] = a;
            walk(i + 1);
        }
    };
    walk(0);
    return out;
}

bool entails(const KnowledgeBase& kb, const Compound& fact, const Compound& candidate) {
    const Compound target = canonical_form(candidate);
    if (serialize(target) == serialize(canonical_form(fact))) return true;
    return derive_all(kb, fact).contains(target);
}

}  // namespace verblogic
