#include "verblogic/app/json_format.hpp"

namespace verblogic::app {

using nlohmann::json;

namespace {

json term_or_null(const std::optional<Term>& t) { return t ? json(t->display) : json(nullptr); }

}  // namespace

json to_json(const Atom& a, const Lexicon& lexicon, RenderStyle style) {
    json places = json::object();
    for (PlaceSlot s : all_place_slots) places[std::string(to_string(s))] = term_or_null(a.places.get(s));
    return json{
        {"subject", a.subject.display},
        {"negated", a.negated},
        {"verb", a.verb.display},
        {"object", term_or_null(a.object)},
        {"places", std::move(places)},
        {"tense", std::string(to_string(a.tense))},
        {"condition", a.condition ? json(*a.condition) : json(nullptr)},
        {"adverb", a.adverb ? json(std::string(to_string(*a.adverb))) : json(nullptr)},
        {"can", a.can},
        {"rendered", render_text(a, lexicon, style)},
    };
}

json to_json(const Compound& c, const Lexicon& lexicon) {
    if (c.is_leaf()) return to_json(c.atom(), lexicon);
    if (!c.is_junction()) return to_json(distribute(c), lexicon);
    json children = json::array();
    for (const auto& child : c.children()) children.push_back(to_json(child, lexicon));
    return json{
        {"junction", std::string(to_string(c.junction()))},
        {"children", std::move(children)},
        {"rendered", render_text(c, lexicon)},
    };
}

json to_json(const Refinement& r) {
    return json{{"operator", std::string(to_string(r.op))},
                {"slot", r.slot ? json(std::string(to_string(*r.slot))) : json(nullptr)}};
}

}  // namespace verblogic::app
