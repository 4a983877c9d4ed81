#pragma once

#include "verblogic/dialogue.hpp"
#include "verblogic/statement.hpp"

#include <json.hpp>

namespace verblogic::app {

// {subject, negated, verb, object, places{in,from,to}, tense, condition,
//  adverb, can, rendered}; absent values are null.
nlohmann::json to_json(const Atom& atom, const Lexicon& lexicon,
                       RenderStyle style = RenderStyle::standard);

// Leaves render as atoms; junctions as {junction, children, rendered}.
nlohmann::json to_json(const Compound& compound, const Lexicon& lexicon);

nlohmann::json to_json(const Refinement& refinement);

}  // namespace verblogic::app
