#pragma once

#include "verblogic/term.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace verblogic {

enum class Tense { past, present, future };

enum class PlaceSlot { in, from, to };

inline constexpr std::array<PlaceSlot, 3> all_place_slots{PlaceSlot::in, PlaceSlot::from,
                                                          PlaceSlot::to};

// Ranked from most to least frequent.
enum class FrequencyAdverb { often, more_or_less, less_likely, rarely, never };

std::string_view to_string(Tense tense);
std::string_view to_string(PlaceSlot slot);
std::string_view to_string(FrequencyAdverb adverb);
std::optional<Tense> parse_tense(std::string_view text);
std::optional<PlaceSlot> parse_place_slot(std::string_view text);
std::optional<FrequencyAdverb> parse_adverb(std::string_view text);

// At most one term per place slot.
class Places {
public:
    Places() = default;
    Places(std::initializer_list<std::pair<PlaceSlot, Term>> init) {
        for (const auto& [slot, term] : init) set(slot, term);
    }

    const std::optional<Term>& get(PlaceSlot slot) const { return slots_[index(slot)]; }
    void set(PlaceSlot slot, Term term) { slots_[index(slot)] = std::move(term); }
    void clear(PlaceSlot slot) { slots_[index(slot)].reset(); }

    bool empty() const noexcept {
        return !slots_[0] && !slots_[1] && !slots_[2];
    }
    std::size_t occupied() const noexcept {
        return static_cast<std::size_t>(slots_[0].has_value()) + slots_[1].has_value() +
               slots_[2].has_value();
    }

    friend bool operator==(const Places&, const Places&) = default;
    friend auto operator<=>(const Places&, const Places&) = default;

private:
    static std::size_t index(PlaceSlot slot) { return static_cast<std::size_t>(slot); }
    std::array<std::optional<Term>, 3> slots_;
};

// One statement: `subject [not] verb * object [places]`, with tense,
// optional verbatim condition, optional frequency adverb and the `can`
// modality. Member order is the canonical field order.
struct Atom {
    Term subject;
    bool negated = false;
    Term verb;
    std::optional<Term> object;
    Places places;
    Tense tense = Tense::present;
    std::optional<std::string> condition;
    std::optional<FrequencyAdverb> adverb;
    bool can = false;

    friend bool operator==(const Atom&, const Atom&) = default;
    friend auto operator<=>(const Atom&, const Atom&) = default;
};

// Validating constructor. Throws EmptyFrameError when there is neither an
// object nor a place.
Atom make_atom(Term subject, Term verb, std::optional<Term> object, Places places, Tense tense,
               bool negated = false, std::optional<std::string> condition = std::nullopt,
               bool can = false);

// Flat `key=value;` record in canonical field order; total order key for atoms.
std::string serialize(const Atom& atom);

enum class Junction { all, any };  // And, Or

std::string_view to_string(Junction junction);
Junction flip(Junction junction);

// A junction of verbs or objects inside one atom, e.g. `(bake and eat)`.
struct TermList {
    Junction junction = Junction::all;
    std::vector<Term> terms;

    friend bool operator==(const TermList&, const TermList&) = default;
};

// And/Or tree of statements. A `factored` node is parser sugar: one atom
// whose verb and/or object is a TermList; `distribute` expands it.
class Compound {
public:
    enum class Kind { leaf, all, any, factored };

    static Compound leaf(Atom atom);
    // Collapses to the child when given exactly one; throws
    // std::invalid_argument on an empty list.
    static Compound join(Junction junction, std::vector<Compound> children);
    static Compound all_of(std::vector<Compound> children) { return join(Junction::all, std::move(children)); }
    static Compound any_of(std::vector<Compound> children) { return join(Junction::any, std::move(children)); }
    // `base` supplies every field except the listed slot(s); single-element
    // lists are folded into the base atom.
    static Compound factored(Atom base, std::optional<TermList> verbs,
                             std::optional<TermList> objects);

    Kind kind() const noexcept { return kind_; }
    bool is_leaf() const noexcept { return kind_ == Kind::leaf; }
    bool is_junction() const noexcept { return kind_ == Kind::all || kind_ == Kind::any; }
    Junction junction() const;

    // Leaf atom, or the base atom of a factored node.
    const Atom& atom() const { return atom_; }
    const std::vector<Compound>& children() const { return children_; }
    const std::optional<TermList>& verbs() const { return verbs_; }
    const std::optional<TermList>& objects() const { return objects_; }

    // Every atom mentioned, in tree order (factored nodes expand).
    std::vector<Atom> atoms() const;

    friend bool operator==(const Compound&, const Compound&) = default;

private:
    Kind kind_ = Kind::leaf;
    Atom atom_;
    std::vector<Compound> children_;
    std::optional<TermList> verbs_;
    std::optional<TermList> objects_;
};

std::string serialize(const Compound& compound);

// Atoms flip their flag; junctions follow De Morgan. An involution.
Atom negate(const Atom& atom);
Compound negate(const Compound& compound);

// Expands factored nodes by the four distributive laws; verb lists are the
// outer junction. The result contains only leaves and junctions.
Compound distribute(const Compound& compound);

// Inverse of distribute: folds a junction whose leaves differ only in the
// object (or only in the verb) back into a factored node.
Compound factor(const Compound& compound);

// distribute, then flatten nested equal junctions, sort children by
// serialization, drop duplicates and collapse single-child junctions.
Compound canonical_form(const Compound& compound);

struct CompoundLess {
    bool operator()(const Compound& a, const Compound& b) const {
        return serialize(a) < serialize(b);
    }
};
using CompoundSet = std::set<Compound, CompoundLess>;

// Verb forms for rendering, plus nouns rendered without an article (mass
// nouns and named individuals).
class Lexicon {
public:
    // Bundled irregular and common verbs.
    static Lexicon standard();

    void add_verb(std::string_view base, std::string past, std::string third_person);
    void add_bare_noun(std::string_view id) { bare_.insert(canonical_id(id)); }
    bool is_bare(const Term& noun) const { return bare_.contains(noun.id); }

    std::string past(std::string_view base) const;
    std::string third_person(std::string_view base) const;

private:
    std::map<std::string, std::pair<std::string, std::string>> verbs_;
    std::set<std::string> bare_;
};

// `generic` drops the object article, as in an opening conversational
// statement ("I will own property in U.S.").
enum class RenderStyle { standard, generic };

std::string render_text(const Atom& atom, const Lexicon& lexicon,
                        RenderStyle style = RenderStyle::standard);
std::string render_text(const Compound& compound, const Lexicon& lexicon);

}  // namespace verblogic
