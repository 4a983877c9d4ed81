#pragma once

// Random taxonomies over three axes with an independent DFS oracle.

#include "support.hpp"

#include "verblogic/engine.hpp"

#include <random>

namespace verblogic::testing {

struct RandomKb {
    KnowledgeBase kb;
    // One oracle and node list per axis: verb, object, place(in).
    std::array<ReachabilityOracle, 3> oracle;
    std::array<std::vector<std::string>, 3> nodes;

    static constexpr std::array<Axis, 3> axes{Axis::verb, Axis::object, Axis::place_in};

    RandomKb(std::mt19937& rng, int max_nodes) {
        const std::array<const char*, 3> prefix{"v", "n", "p"};
        for (std::size_t k = 0; k < 3; ++k) {
            const int n = 1 + static_cast<int>(rng() % max_nodes);
            for (int i = 0; i < n; ++i) nodes[k].push_back(prefix[k] + std::to_string(i));
            // Edges only from lower to higher index keep the graph acyclic.
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (rng() % 3 == 0) {
                        kb.taxonomy.add_edge(relation_of(axes[k]), Term(nodes[k][i]), Term(nodes[k][j]));
                        oracle[k].add(nodes[k][i], nodes[k][j]);
                    }
        }
    }

    Atom atom(std::size_t verb, std::size_t object, std::size_t place) const {
        return make_atom(Term("I"), Term(nodes[0][verb]), Term(nodes[1][object]),
                         {{PlaceSlot::in, Term(nodes[2][place])}}, Tense::past);
    }

    std::vector<Atom> all_atoms() const {
        std::vector<Atom> out;
        for (std::size_t v = 0; v < nodes[0].size(); ++v)
            for (std::size_t o = 0; o < nodes[1].size(); ++o)
                for (std::size_t p = 0; p < nodes[2].size(); ++p) out.push_back(atom(v, o, p));
        return out;
    }

    // Brute force: every combination of (term or oracle-reachable ancestor).
    std::set<std::string> expected_conclusions(const Atom& fact) const {
        std::array<std::vector<std::string>, 3> options;
        for (std::size_t k = 0; k < 3; ++k) {
            const std::string id = axis_term(fact, axes[k])->id;
            options[k].push_back(id);
            for (const auto& a : oracle[k].above(id)) options[k].push_back(a);
        }
        std::set<std::string> out;
        for (const auto& v : options[0])
            for (const auto& o : options[1])
                for (const auto& p : options[2]) {
                    Atom a = fact;
                    a.verb = Term(v);
                    a.object = Term(o);
                    a.places.set(PlaceSlot::in, Term(p));
                    if (a != fact) out.insert(serialize(a));
                }
        return out;
    }
};

inline std::set<std::string> serialized(const ConclusionSet& set) {
    std::set<std::string> out;
    for (const auto& a : set) out.insert(serialize(a));
    return out;
}

}  // namespace verblogic::testing
