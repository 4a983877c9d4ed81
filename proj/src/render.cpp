#include "verblogic/statement.hpp"

#include <cctype>

namespace verblogic {

Lexicon Lexicon::standard() {
    Lexicon lex;
    lex.add_verb("fly", "flew", "flies");
    lex.add_verb("eat", "ate", "eats");
    lex.add_verb("buy", "bought", "buys");
    lex.add_verb("drive", "drove", "drives");
    lex.add_verb("run", "ran", "runs");
    lex.add_verb("hit", "hit", "hits");
    lex.add_verb("punch", "punched", "punches");
    lex.add_verb("wipe", "wiped", "wipes");
    lex.add_verb("bake", "baked", "bakes");
    lex.add_verb("cook", "cooked", "cooks");
    lex.add_verb("own", "owned", "owns");
    lex.add_verb("travel", "traveled", "travels");
    lex.add_verb("move", "moved", "moves");
    lex.add_verb("clean", "cleaned", "cleans");
    lex.add_verb("drink", "drank", "drinks");
    lex.add_verb("ride", "rode", "rides");
    lex.add_verb("draw", "drew", "draws");
    lex.add_verb("sing", "sang", "sings");
    lex.add_verb("walk", "walked", "walks");
    lex.add_verb("get", "got", "gets");
    return lex;
}

void Lexicon::add_verb(std::string_view base, std::string past, std::string third_person) {
    verbs_[canonical_id(base)] = {std::move(past), std::move(third_person)};
}

namespace {

bool is_vowel(char c) {
    switch (std::tolower(static_cast<unsigned char>(c))) {
    case 'a': case 'e': case 'i': case 'o': case 'u': return true;
    default: return false;
    }
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::string Lexicon::past(std::string_view base) const {
    if (auto it = verbs_.find(canonical_id(base)); it != verbs_.end()) return it->second.first;
    std::string out(base);
    if (ends_with(out, "e")) return out + "d";
    return out + "ed";
}

std::string Lexicon::third_person(std::string_view base) const {
    if (auto it = verbs_.find(canonical_id(base)); it != verbs_.end()) return it->second.second;
    std::string out(base);
    if (out.size() >= 2 && out.back() == 'y' && !is_vowel(out[out.size() - 2]))
        return out.substr(0, out.size() - 1) + "ies";
    if (ends_with(out, "s") || ends_with(out, "sh") || ends_with(out, "ch") || ends_with(out, "x"))
        return out + "es";
    return out + "s";
}

namespace {

enum class Person { first_or_plural, third };

Person person_of(const Term& subject) {
    const auto& id = subject.id;
    if (id == "i" || id == "you" || id == "we" || id == "they") return Person::first_or_plural;
    return Person::third;
}

std::string to_be(Tense tense, const Term& subject) {
    switch (tense) {
    case Tense::past: return person_of(subject) == Person::third || subject.id == "i" ? "was" : "were";
    case Tense::present:
        if (subject.id == "i") return "am";
        return person_of(subject) == Person::third ? "is" : "are";
    case Tense::future: return "will be";
    }
    return "is";
}

// "wipe_with_a_duster" inflects only its head word.
std::pair<std::string, std::string> split_head(const Term& verb) {
    std::string spoken = verb.spoken();
    auto space = spoken.find(' ');
    if (space == std::string::npos) return {spoken, ""};
    return {spoken.substr(0, space), spoken.substr(space)};
}

enum class VerbForm { base, past, third };

std::string inflect(const Term& verb, VerbForm form, const Lexicon& lex) {
    auto [head, rest] = split_head(verb);
    switch (form) {
    case VerbForm::base: break;
    case VerbForm::past: head = lex.past(head); break;
    case VerbForm::third: head = lex.third_person(head); break;
    }
    return head + rest;
}

// Auxiliary words placed before the main verb, and the main verb's form.
struct VerbShape {
    std::string aux;
    VerbForm form = VerbForm::base;
};

VerbShape shape_of(const Atom& a) {
    VerbShape s;
    auto add = [&](std::string_view w) {
        if (!s.aux.empty()) s.aux += ' ';
        s.aux += w;
    };
    if (a.adverb == FrequencyAdverb::less_likely) {
        add(to_be(a.tense, a.subject));
        if (a.negated) add("not");
        add("less likely to");
        if (a.can) add("be able to");
        return s;
    }
    if (a.can) {
        add(a.negated ? "cannot" : "can");
        if (a.adverb) add(std::string(to_string(*a.adverb)));
        return s;
    }
    switch (a.tense) {
    case Tense::future: add(a.negated ? "will not" : "will"); break;
    case Tense::past:
        if (a.negated) add("did not");
        else s.form = VerbForm::past;
        break;
    case Tense::present:
        if (a.negated) add(person_of(a.subject) == Person::third ? "does not" : "do not");
        else if (person_of(a.subject) == Person::third) s.form = VerbForm::third;
        break;
    }
    if (a.adverb) {
        std::string word(to_string(*a.adverb));
        for (char& c : word)
            if (c == '_') c = ' ';
        add(word);
    }
    return s;
}

std::string noun_phrase(const Term& noun, const Lexicon& lex, RenderStyle style) {
    std::string spoken = noun.spoken();
    if (style == RenderStyle::generic || lex.is_bare(noun) || spoken.empty()) return spoken;
    return (is_vowel(spoken.front()) ? "an " : "a ") + spoken;
}

std::string join_terms(const std::vector<std::string>& words, Junction j) {
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) out += i + 1 == words.size() ? std::string(" ") + std::string(to_string(j)) + " " : ", ";
        out += words[i];
    }
    return out;
}

std::string render_frame(const Atom& a, const std::optional<TermList>& verbs,
                         const std::optional<TermList>& objects, const Lexicon& lex,
                         RenderStyle style) {
    std::string out;
    if (a.condition) out += "If " + *a.condition + ", ";
    out += a.subject.spoken();

    VerbShape shape = shape_of(a);
    if (!shape.aux.empty()) out += " " + shape.aux;
    if (verbs) {
        std::vector<std::string> forms;
        for (const auto& v : verbs->terms) forms.push_back(inflect(v, shape.form, lex));
        out += " " + join_terms(forms, verbs->junction);
    } else {
        out += " " + inflect(a.verb, shape.form, lex);
    }

    if (objects) {
        std::vector<std::string> nouns;
        for (const auto& o : objects->terms) nouns.push_back(noun_phrase(o, lex, style));
        out += " " + join_terms(nouns, objects->junction);
    } else if (a.object) {
        out += " " + noun_phrase(*a.object, lex, style);
    }
    for (PlaceSlot slot : all_place_slots)
        if (const auto& p = a.places.get(slot))
            out += " " + std::string(to_string(slot)) + " " + p->spoken();
    return out;
}

std::string render_node(const Compound& c, const Lexicon& lex, bool nested) {
    switch (c.kind()) {
    case Compound::Kind::leaf: return render_frame(c.atom(), {}, {}, lex, RenderStyle::standard);
    case Compound::Kind::factored:
        return render_frame(c.atom(), c.verbs(), c.objects(), lex, RenderStyle::standard);
    default: {
        std::string out;
        const std::string sep = std::string(" ") + std::string(to_string(c.junction())) + " ";
        for (std::size_t i = 0; i < c.children().size(); ++i) {
            if (i) out += sep;
            out += render_node(c.children()[i], lex, true);
        }
        return nested ? "(" + out + ")" : out;
    }
    }
}

}  // namespace

std::string render_text(const Atom& atom, const Lexicon& lexicon, RenderStyle style) {
    return render_frame(atom, {}, {}, lexicon, style);
}

std::string render_text(const Compound& compound, const Lexicon& lexicon) {
    return render_node(factor(canonical_form(compound)), lexicon, false);
}

}  // namespace verblogic
