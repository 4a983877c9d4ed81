#pragma once

#include "verblogic/fuzzy.hpp"
#include "verblogic/statement.hpp"
#include "verblogic/taxonomy.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace verblogic {

// A loaded knowledge base. Built once (see dsl.hpp) and then only read;
// const access is safe from any number of threads.
struct KnowledgeBase {
    EdgeStore taxonomy;
    FuzzyTables fuzzy;
    Lexicon lexicon = Lexicon::standard();
    std::vector<Compound> facts;
    std::map<std::string, std::string> displays;  // id -> spelling in the source

    // Term for user-typed text, spelled as in the knowledge base when known.
    Term resolve(std::string_view text) const {
        Term t(text);
        if (auto it = displays.find(t.id); it != displays.end()) t.display = it->second;
        return t;
    }
};

}  // namespace verblogic
