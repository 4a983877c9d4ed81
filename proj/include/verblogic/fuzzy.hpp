#pragma once

#include "verblogic/statement.hpp"
#include "verblogic/term.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace verblogic {

struct KnowledgeBase;

// Subject class used when a subject has no declared class, and the
// fallback row of the membership table.
inline constexpr std::string_view default_subject_class = "any";

// A verb paired with the noun class it defines ("eat ~ food").
struct Isomorphism {
    Term verb;
    Term noun_class;
};

struct MembershipEntry {
    Term subject_class;
    Term verb;
    Term noun;
    double mu = 0.0;
};

// N-V isomorphisms, subject classes and characteristic values.
class FuzzyTables {
public:
    // Throws std::invalid_argument if the verb already has a different class.
    void add_isomorphism(const Term& verb, const Term& noun_class);
    std::optional<Term> noun_class(const Term& verb) const;

    void set_subject_class(const Term& subject, const Term& subject_class);
    // The declared class, or "any".
    Term subject_class(const Term& subject) const;

    // Throws RangeError unless 0 <= mu <= 1.
    void set_mu(const Term& subject_class, const Term& verb, const Term& noun, double mu);
    std::optional<double> mu(const Term& subject_class, const Term& verb, const Term& noun) const;

    std::vector<Isomorphism> isomorphisms() const;
    std::vector<std::pair<Term, Term>> subject_classes() const;
    std::vector<MembershipEntry> memberships() const;

private:
    using Key = std::tuple<std::string, std::string, std::string>;
    std::map<std::string, Isomorphism> isos_;
    std::map<std::string, std::pair<Term, Term>> subjects_;
    std::map<Key, MembershipEntry> mu_;
};

// Band mapping: often [0.7, 1], more_or_less [0.4, 0.7), less_likely
// [0.2, 0.4), rarely [0.05, 0.2), never [0, 0.05). Throws RangeError
// outside [0, 1] (and for NaN).
FrequencyAdverb adverb_for_mu(double mu);

// Higher is more frequent: often = 4 ... never = 0.
int rank(FrequencyAdverb adverb);

// mu for (class(subject), verb, noun), falling back to the "any" class,
// then to 0. Plain table lookup.
double membership(const KnowledgeBase& kb, const Term& subject, const Term& verb,
                  const Term& noun);

// Present-tense style statement "I often eat chicken". Throws
// NoIsomorphismError if the verb has no noun class and FrameMismatchError if
// the noun is not that class or below it.
Atom annotate(const KnowledgeBase& kb, const Term& subject, const Term& verb, const Term& noun,
              Tense tense);

// "subject can verb noun" is sound: noun lies under the verb's class and
// its adverb is not `never`.
bool is_sound_can(const KnowledgeBase& kb, const Term& subject, const Term& verb,
                  const Term& noun);

}  // namespace verblogic
