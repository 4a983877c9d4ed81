#include "verblogic/term.hpp"

#include <cctype>

namespace verblogic {

std::string canonical_id(std::string_view text) {
    std::string id;
    id.reserve(text.size());
    for (char c : text) {
        if (c == ' ' || c == '\t')
            id.push_back('_');
        else
            id.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return id;
}

Term::Term(std::string_view text) : id(canonical_id(text)), display(text) {}

std::string Term::spoken() const {
    std::string out = display.empty() ? id : display;
    for (char& c : out)
        if (c == '_') c = ' ';
    return out;
}

}  // namespace verblogic
