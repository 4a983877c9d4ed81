#pragma once

#include "verblogic/knowledge_base.hpp"

#include <iosfwd>
#include <string>

namespace verblogic::app {

// "I often eat chicken" for a noun under the verb's class; a noun outside
// it is rendered with "never" ("I never eat a book"). Throws
// NoIsomorphismError when the verb has no class.
std::string annotation_text(const KnowledgeBase& kb, const Term& subject, const Term& verb,
                            const Term& noun);

// Dialogue over one fact. Engine lines are prefixed "A: ", the user prompt
// is "B> "; with `echo` each command read is written after the prompt, so
// the output is a complete transcript. Returns 0, or 1 if the fact cannot
// be discussed (negated or compound).
int run_repl(const KnowledgeBase& kb, std::size_t fact_index, std::istream& in, std::ostream& out,
             bool echo);

}  // namespace verblogic::app
