#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace verblogic {

// Canonical form of a symbol: lowercase ASCII, spaces joined by '_'.
std::string canonical_id(std::string_view text);

// An interned noun, verb, place or subject symbol. Identity is the
// canonical id; `display` keeps the spelling the author used.
struct Term {
    std::string id;
    std::string display;

    Term() = default;
    explicit Term(std::string_view text);
    Term(std::string id_, std::string display_)
        : id(std::move(id_)), display(std::move(display_)) {}

    bool empty() const noexcept { return id.empty(); }

    // Display with underscores turned back into spaces.
    std::string spoken() const;

    friend bool operator==(const Term& a, const Term& b) noexcept { return a.id == b.id; }
    friend std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept {
        return a.id <=> b.id;
    }
};

}  // namespace verblogic
