#pragma once

#include "verblogic/knowledge_base.hpp"
#include "verblogic/statement.hpp"
#include "verblogic/taxonomy.hpp"

#include <array>
#include <optional>
#include <set>
#include <string_view>

namespace verblogic {

// A generalizable slot of an atom and the relation that governs it.
enum class Axis { verb, object, place_in, place_from, place_to };

inline constexpr std::array<Axis, 5> all_axes{Axis::verb, Axis::object, Axis::place_in,
                                              Axis::place_from, Axis::place_to};

std::string_view to_string(Axis axis);
RelationKind relation_of(Axis axis);
Axis place_axis(PlaceSlot slot);
std::optional<PlaceSlot> place_slot_of(Axis axis);

// Term in the axis slot, if occupied.
std::optional<Term> axis_term(const Atom& atom, Axis axis);
Atom with_axis_term(Atom atom, Axis axis, Term term);

using ConclusionSet = std::set<Atom>;

// All atoms reachable by replacing, on each occupied axis independently,
// the term with itself or any strict ancestor; the fact itself excluded.
// Throws NegatedFactError for a negated fact.
ConclusionSet derive_conclusions(const KnowledgeBase& kb, const Atom& fact);

// Contrapositive direction: replace with strict descendants. Throws
// PositiveFactError for a positive fact.
ConclusionSet specialize_negative(const KnowledgeBase& kb, const Atom& fact);

// derive_conclusions or specialize_negative, by the fact's polarity.
ConclusionSet conclusions_of(const KnowledgeBase& kb, const Atom& fact);

// Canonicalizes the fact, then replaces every leaf independently with
// itself or one of its conclusions. The canonical fact is excluded.
CompoundSet derive_all(const KnowledgeBase& kb, const Compound& fact);

bool entails(const KnowledgeBase& kb, const Compound& fact, const Compound& candidate);

}  // namespace verblogic
