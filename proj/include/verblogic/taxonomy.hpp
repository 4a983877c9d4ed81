#pragma once

#include "verblogic/term.hpp"

#include <array>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace verblogic {

// Which specificity chain an edge belongs to. Individuals declared with
// `isa` are stored as kind_of edges.
enum class RelationKind { kind_of, part_of, way_of };

inline constexpr std::array<RelationKind, 3> all_relation_kinds{
    RelationKind::kind_of, RelationKind::part_of, RelationKind::way_of};

std::string_view to_string(RelationKind kind);

using TermSet = std::set<Term>;

// Strict specificity edges (child < parent) per relation kind, with the
// transitive closure maintained incrementally in both directions.
//
// Mutated only while loading a knowledge base; all const members are safe
// for concurrent readers afterwards.
class EdgeStore {
public:
    // Throws SelfLoopError if child == parent, CycleError if parent is
    // already below child. The store is unchanged when it throws.
    // Returns false if the edge was already present.
    bool add_edge(RelationKind kind, const Term& child, const Term& parent);

    bool has_edge(RelationKind kind, const Term& child, const Term& parent) const;

    TermSet strict_ancestors(RelationKind kind, const Term& t) const;
    TermSet strict_descendants(RelationKind kind, const Term& t) const;
    TermSet parents(RelationKind kind, const Term& t) const;
    TermSet children(RelationKind kind, const Term& t) const;

    bool is_strict_ancestor(RelationKind kind, const Term& lower, const Term& upper) const;

    // Maximal elements of strict_ancestors(t); the smallest id wins ties.
    // Returns t itself when it has no ancestors.
    Term most_general(RelationKind kind, const Term& t) const;

    // Upward path from `from` to `to`, both inclusive. At each step the
    // lexicographically smallest parent that still reaches `to` is taken.
    // Throws NoPathError if `to` is neither `from` nor above it.
    std::vector<Term> path_up(RelationKind kind, const Term& from, const Term& to) const;

    // Declared edges of one kind, sorted by (child, parent).
    std::vector<std::pair<Term, Term>> edges(RelationKind kind) const;

    std::size_t edge_count() const noexcept;

private:
    using IdSet = std::set<std::string>;
    using Adjacency = std::map<std::string, IdSet>;

    struct Graph {
        Adjacency parents;
        Adjacency children;
        Adjacency ancestors;
        Adjacency descendants;
    };

    const Graph& graph(RelationKind kind) const { return graphs_[static_cast<int>(kind)]; }
    Graph& graph(RelationKind kind) { return graphs_[static_cast<int>(kind)]; }

    TermSet to_terms(const Adjacency& adjacency, const Term& t) const;
    const Term& term(const std::string& id) const;

    std::array<Graph, 3> graphs_;
    std::map<std::string, Term> terms_;
};

}  // namespace verblogic
