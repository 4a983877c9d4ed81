#include "verblogic/fuzzy.hpp"

#include "verblogic/errors.hpp"
#include "verblogic/knowledge_base.hpp"

#include <cmath>
#include <stdexcept>

namespace verblogic {

void FuzzyTables::add_isomorphism(const Term& verb, const Term& noun_class) {
    auto [it, inserted] = isos_.try_emplace(verb.id, Isomorphism{verb, noun_class});
    if (!inserted && it->second.noun_class != noun_class)
        throw std::invalid_argument("verb '" + verb.display + "' is already isomorphic to '" +
                                    it->second.noun_class.display + "'");
}

std::optional<Term> FuzzyTables::noun_class(const Term& verb) const {
    auto it = isos_.find(verb.id);
    if (it == isos_.end()) return std::nullopt;
    return it->second.noun_class;
}

void FuzzyTables::set_subject_class(const Term& subject, const Term& subject_class) {
    subjects_[subject.id] = {subject, subject_class};
}

Term FuzzyTables::subject_class(const Term& subject) const {
    auto it = subjects_.find(subject.id);
    if (it == subjects_.end()) return Term(default_subject_class);
    return it->second.second;
}

void FuzzyTables::set_mu(const Term& subject_class, const Term& verb, const Term& noun, double mu) {
    if (!(mu >= 0.0 && mu <= 1.0))
        throw RangeError("value " + std::to_string(mu) + " outside [0,1]");
    mu_[{subject_class.id, verb.id, noun.id}] = MembershipEntry{subject_class, verb, noun, mu};
}

std::optional<double> FuzzyTables::mu(const Term& subject_class, const Term& verb,
                                      const Term& noun) const {
    auto it = mu_.find({subject_class.id, verb.id, noun.id});
    if (it == mu_.end()) return std::nullopt;
    return it->second.mu;
}

std::vector<Isomorphism> FuzzyTables::isomorphisms() const {
    std::vector<Isomorphism> out;
    for (const auto& [id, iso] : isos_) out.push_back(iso);
    return out;
}

std::vector<std::pair<Term, Term>> FuzzyTables::subject_classes() const {
    std::vector<std::pair<Term, Term>> out;
    for (const auto& [id, entry] : subjects_) out.push_back(entry);
    return out;
}

std::vector<MembershipEntry> FuzzyTables::memberships() const {
    std::vector<MembershipEntry> out;
    for (const auto& [key, entry] : mu_) out.push_back(entry);
    return out;
}

FrequencyAdverb adverb_for_mu(double mu) {
    if (!(mu >= 0.0 && mu <= 1.0))
        throw RangeError("characteristic value " + std::to_string(mu) + " outside [0,1]");
    if (mu >= 0.7) return FrequencyAdverb::often;
    if (mu >= 0.4) return FrequencyAdverb::more_or_less;
    if (mu >= 0.2) return FrequencyAdverb::less_likely;
    if (mu >= 0.05) return FrequencyAdverb::rarely;
    return FrequencyAdverb::never;
}

int rank(FrequencyAdverb adverb) { return 4 - static_cast<int>(adverb); }

double membership(const KnowledgeBase& kb, const Term& subject, const Term& verb,
                  const Term& noun) {
    if (auto mu = kb.fuzzy.mu(kb.fuzzy.subject_class(subject), verb, noun)) return *mu;
    if (auto mu = kb.fuzzy.mu(Term(default_subject_class), verb, noun)) return *mu;
    return 0.0;
}

namespace {

bool under_class(const KnowledgeBase& kb, const Term& noun, const Term& cls) {
    return noun == cls || kb.taxonomy.is_strict_ancestor(RelationKind::kind_of, noun, cls);
}

}  // namespace

Atom annotate(const KnowledgeBase& kb, const Term& subject, const Term& verb, const Term& noun,
              Tense tense) {
    auto cls = kb.fuzzy.noun_class(verb);
    if (!cls) throw NoIsomorphismError("verb '" + verb.display + "' has no noun class");
    if (!under_class(kb, noun, *cls))
        throw FrameMismatchError("'" + noun.display + "' is not a kind of '" + cls->display + "'");
    Atom a = make_atom(subject, verb, noun, {}, tense);
    a.adverb = adverb_for_mu(membership(kb, subject, verb, noun));
    return a;
}

bool is_sound_can(const KnowledgeBase& kb, const Term& subject, const Term& verb,
                  const Term& noun) {
    auto cls = kb.fuzzy.noun_class(verb);
    if (!cls || !under_class(kb, noun, *cls)) return false;
    return adverb_for_mu(membership(kb, subject, verb, noun)) != FrequencyAdverb::never;
}

}  // namespace verblogic
