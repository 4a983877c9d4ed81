#include "verblogic/statement.hpp"

#include "verblogic/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace verblogic {

std::string_view to_string(Tense tense) {
    switch (tense) {
    case Tense::past: return "past";
    case Tense::present: return "present";
    case Tense::future: return "future";
    }
    return "?";
}

std::string_view to_string(PlaceSlot slot) {
    switch (slot) {
    case PlaceSlot::in: return "in";
    case PlaceSlot::from: return "from";
    case PlaceSlot::to: return "to";
    }
    return "?";
}

std::string_view to_string(FrequencyAdverb adverb) {
    switch (adverb) {
    case FrequencyAdverb::often: return "often";
    case FrequencyAdverb::more_or_less: return "more_or_less";
    case FrequencyAdverb::less_likely: return "less_likely";
    case FrequencyAdverb::rarely: return "rarely";
    case FrequencyAdverb::never: return "never";
    }
    return "?";
}

std::optional<Tense> parse_tense(std::string_view text) {
    for (Tense t : {Tense::past, Tense::present, Tense::future})
        if (to_string(t) == text) return t;
    return std::nullopt;
}

std::optional<PlaceSlot> parse_place_slot(std::string_view text) {
    for (PlaceSlot s : all_place_slots)
        if (to_string(s) == text) return s;
    return std::nullopt;
}

std::optional<FrequencyAdverb> parse_adverb(std::string_view text) {
    for (FrequencyAdverb a : {FrequencyAdverb::often, FrequencyAdverb::more_or_less,
                              FrequencyAdverb::less_likely, FrequencyAdverb::rarely,
                              FrequencyAdverb::never})
        if (to_string(a) == text) return a;
    return std::nullopt;
}

Atom make_atom(Term subject, Term verb, std::optional<Term> object, Places places, Tense tense,
               bool negated, std::optional<std::string> condition, bool can) {
    if (subject.empty()) throw std::invalid_argument("atom without a subject");
    if (verb.empty()) throw std::invalid_argument("atom without a verb");
    if ((!object || object->empty()) && places.empty())
        throw EmptyFrameError("statement '" + subject.display + " " + verb.display +
                              "' has neither an object nor a place");
    Atom a;
    a.subject = std::move(subject);
    a.negated = negated;
    a.verb = std::move(verb);
    if (object && !object->empty()) a.object = std::move(object);
    a.places = std::move(places);
    a.tense = tense;
    a.condition = std::move(condition);
    a.can = can;
    return a;
}

namespace {

void quote_into(std::string& out, std::string_view text) {
    out.push_back('"');
    for (char c : text) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
}

}  // namespace

std::string serialize(const Atom& a) {
    std::string out;
    auto field = [&](std::string_view key, std::string_view value) {
        out.append(key).push_back('=');
        out.append(value).push_back(';');
    };
    auto opt_term = [](const std::optional<Term>& t) { return t ? t->id : std::string("-"); };
    field("subject", a.subject.id);
    field("negated", a.negated ? "1" : "0");
    field("verb", a.verb.id);
    field("object", opt_term(a.object));
    for (PlaceSlot s : all_place_slots) field(to_string(s), opt_term(a.places.get(s)));
    field("tense", to_string(a.tense));
    if (a.condition) {
        std::string q;
        quote_into(q, *a.condition);
        field("condition", q);
    } else {
        field("condition", "-");
    }
    field("adverb", a.adverb ? to_string(*a.adverb) : "-");
    field("can", a.can ? "1" : "0");
    return out;
}

std::string_view to_string(Junction junction) { return junction == Junction::all ? "and" : "or"; }

Junction flip(Junction junction) {
    return junction == Junction::all ? Junction::any : Junction::all;
}

// ---------------------------------------------------------------------------
// Compound

Compound Compound::leaf(Atom atom) {
    Compound c;
    c.kind_ = Kind::leaf;
    c.atom_ = std::move(atom);
    return c;
}

Compound Compound::join(Junction junction, std::vector<Compound> children) {
    if (children.empty()) throw std::invalid_argument("junction without children");
    if (children.size() == 1) return std::move(children.front());
    Compound c;
    c.kind_ = junction == Junction::all ? Kind::all : Kind::any;
    c.children_ = std::move(children);
    return c;
}

Compound Compound::factored(Atom base, std::optional<TermList> verbs,
                            std::optional<TermList> objects) {
    auto fold = [](std::optional<TermList>& list, auto&& assign) {
        if (!list) return;
        if (list->terms.empty()) throw std::invalid_argument("empty term list");
        if (list->terms.size() == 1) {
            assign(list->terms.front());
            list.reset();
        }
    };
    fold(verbs, [&](const Term& t) { base.verb = t; });
    fold(objects, [&](const Term& t) { base.object = t; });
    if (!verbs && !objects) return leaf(std::move(base));

    Compound c;
    c.kind_ = Kind::factored;
    if (verbs) base.verb = verbs->terms.front();
    if (objects) base.object = objects->terms.front();
    c.atom_ = std::move(base);
    c.verbs_ = std::move(verbs);
    c.objects_ = std::move(objects);
    return c;
}

Junction Compound::junction() const {
    if (kind_ == Kind::all) return Junction::all;
    if (kind_ == Kind::any) return Junction::any;
    throw std::logic_error("not a junction node");
}

std::vector<Atom> Compound::atoms() const {
    std::vector<Atom> out;
    switch (kind_) {
    case Kind::leaf: out.push_back(atom_); break;
    case Kind::factored:
        for (const auto& a : distribute(*this).atoms()) out.push_back(a);
        break;
    default:
        for (const auto& child : children_) {
            auto sub = child.atoms();
            out.insert(out.end(), sub.begin(), sub.end());
        }
    }
    return out;
}

std::string serialize(const Compound& c) {
    switch (c.kind()) {
    case Compound::Kind::leaf: return "[" + serialize(c.atom()) + "]";
    case Compound::Kind::factored: {
        std::string out = "factored[" + serialize(c.atom());
        auto list = [&](const char* name, const std::optional<TermList>& l) {
            if (!l) return;
            out += std::string(" ") + name + "=" + std::string(to_string(l->junction)) + "(";
            for (std::size_t i = 0; i < l->terms.size(); ++i) {
                if (i) out += ",";
                out += l->terms[i].id;
            }
            out += ")";
        };
        list("verbs", c.verbs());
        list("objects", c.objects());
        return out + "]";
    }
    default: {
        std::string out(to_string(c.junction()));
        out += "(";
        for (std::size_t i = 0; i < c.children().size(); ++i) {
            if (i) out += ",";
            out += serialize(c.children()[i]);
        }
        return out + ")";
    }
    }
}

Atom negate(const Atom& atom) {
    Atom out = atom;
    out.negated = !out.negated;
    return out;
}

Compound negate(const Compound& c) {
    switch (c.kind()) {
    case Compound::Kind::leaf: return Compound::leaf(negate(c.atom()));
    case Compound::Kind::factored: {
        // not(A*(E and G)) = not A*E or not A*G = (not A)*(E or G)
        auto flipped = [](std::optional<TermList> l) {
            if (l) l->junction = flip(l->junction);
            return l;
        };
        return Compound::factored(negate(c.atom()), flipped(c.verbs()), flipped(c.objects()));
    }
    default: {
        std::vector<Compound> children;
        children.reserve(c.children().size());
        for (const auto& child : c.children()) children.push_back(negate(child));
        return Compound::join(flip(c.junction()), std::move(children));
    }
    }
}

namespace {

Compound expand_objects(const Atom& base, const std::optional<TermList>& objects) {
    if (!objects) return Compound::leaf(base);
    std::vector<Compound> leaves;
    for (const auto& obj : objects->terms) {
        Atom a = base;
        a.object = obj;
        leaves.push_back(Compound::leaf(std::move(a)));
    }
    return Compound::join(objects->junction, std::move(leaves));
}

}  // namespace

Compound distribute(const Compound& c) {
    switch (c.kind()) {
    case Compound::Kind::leaf: return c;
    case Compound::Kind::factored: {
        if (!c.verbs()) return expand_objects(c.atom(), c.objects());
        std::vector<Compound> per_verb;
        for (const auto& verb : c.verbs()->terms) {
            Atom a = c.atom();
            a.verb = verb;
            per_verb.push_back(expand_objects(a, c.objects()));
        }
        return Compound::join(c.verbs()->junction, std::move(per_verb));
    }
    default: {
        std::vector<Compound> children;
        for (const auto& child : c.children()) children.push_back(distribute(child));
        return Compound::join(c.junction(), std::move(children));
    }
    }
}

namespace {

// A node viewed as base atom + verb spec + object spec.
struct Frame {
    Atom base;  // verb and object cleared
    std::optional<TermList> verbs;
    Term verb;
    std::optional<TermList> objects;
    std::optional<Term> object;
};

std::optional<Frame> frame_of(const Compound& c) {
    if (c.is_junction()) return std::nullopt;
    Frame f;
    f.base = c.atom();
    f.verb = f.base.verb;
    f.object = f.base.object;
    f.verbs = c.verbs();
    f.objects = c.objects();
    f.base.verb = Term{};
    f.base.object.reset();
    return f;
}

}  // namespace

Compound factor(const Compound& c) {
    if (!c.is_junction()) return c;

    std::vector<Compound> children;
    for (const auto& child : c.children()) children.push_back(factor(child));

    std::vector<Frame> frames;
    for (const auto& child : children) {
        auto f = frame_of(child);
        if (!f) return Compound::join(c.junction(), std::move(children));
        frames.push_back(std::move(*f));
    }
    const Frame& first = frames.front();
    bool same_base = std::all_of(frames.begin(), frames.end(),
                                 [&](const Frame& f) { return f.base == first.base; });
    if (!same_base) return Compound::join(c.junction(), std::move(children));

    // Left laws: same single verb, single distinct objects.
    bool object_law = std::all_of(frames.begin(), frames.end(), [&](const Frame& f) {
        return !f.verbs && f.verb == first.verb && !f.objects && f.object;
    });
    if (object_law) {
        TermList objects{c.junction(), {}};
        for (const auto& f : frames) objects.terms.push_back(*f.object);
        Atom base = first.base;
        base.verb = first.verb;
        return Compound::factored(std::move(base), std::nullopt, std::move(objects));
    }

    // Right laws: single verbs, identical object spec.
    bool verb_law = std::all_of(frames.begin(), frames.end(), [&](const Frame& f) {
        return !f.verbs && f.objects == first.objects && f.object == first.object;
    });
    if (verb_law) {
        TermList verbs{c.junction(), {}};
        for (const auto& f : frames) verbs.terms.push_back(f.verb);
        Atom base = first.base;
        base.object = first.object;
        return Compound::factored(std::move(base), std::move(verbs), first.objects);
    }
    return Compound::join(c.junction(), std::move(children));
}

namespace {

Compound canonicalize(const Compound& c) {
    if (!c.is_junction()) return c;
    const Junction j = c.junction();
    std::vector<Compound> flat;
    for (const auto& child : c.children()) {
        Compound k = canonicalize(child);
        if (k.is_junction() && k.junction() == j)
            flat.insert(flat.end(), k.children().begin(), k.children().end());
        else
            flat.push_back(std::move(k));
    }
    std::vector<std::pair<std::string, Compound>> keyed;
    keyed.reserve(flat.size());
    for (auto& k : flat) keyed.emplace_back(serialize(k), std::move(k));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    keyed.erase(std::unique(keyed.begin(), keyed.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first; }),
                keyed.end());
    std::vector<Compound> children;
    for (auto& [key, k] : keyed) children.push_back(std::move(k));
    return Compound::join(j, std::move(children));
}

}  // namespace

Compound canonical_form(const Compound& c) { return canonicalize(distribute(c)); }

}  // namespace verblogic
