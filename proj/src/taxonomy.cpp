#include "verblogic/taxonomy.hpp"

#include "verblogic/errors.hpp"

namespace verblogic {

std::string_view to_string(RelationKind kind) {
    switch (kind) {
    case RelationKind::kind_of: return "kind_of";
    case RelationKind::part_of: return "part_of";
    case RelationKind::way_of: return "way_of";
    }
    return "?";
}

bool EdgeStore::add_edge(RelationKind kind, const Term& child, const Term& parent) {
    if (child == parent)
        throw SelfLoopError(std::string(to_string(kind)) + " edge from '" + child.display +
                            "' to itself");

    Graph& g = graph(kind);
    if (g.parents.contains(child.id) && g.parents[child.id].contains(parent.id)) return false;
    if (is_strict_ancestor(kind, parent, child))
        throw CycleError(std::string(to_string(kind)) + " edge '" + child.display + " < " +
                         parent.display + "' would create a cycle");

    terms_.try_emplace(child.id, child);
    terms_.try_emplace(parent.id, parent);

    g.parents[child.id].insert(parent.id);
    g.children[parent.id].insert(child.id);

    // Everything at or below child gains everything at or above parent.
    IdSet lower = g.descendants[child.id];
    lower.insert(child.id);
    IdSet upper = g.ancestors[parent.id];
    upper.insert(parent.id);
    for (const auto& d : lower) g.ancestors[d].insert(upper.begin(), upper.end());
    for (const auto& a : upper) g.descendants[a].insert(lower.begin(), lower.end());
    return true;
}

bool EdgeStore::has_edge(RelationKind kind, const Term& child, const Term& parent) const {
    const auto& p = graph(kind).parents;
    auto it = p.find(child.id);
    return it != p.end() && it->second.contains(parent.id);
}

const Term& EdgeStore::term(const std::string& id) const { return terms_.at(id); }

TermSet EdgeStore::to_terms(const Adjacency& adjacency, const Term& t) const {
    TermSet out;
    auto it = adjacency.find(t.id);
    if (it == adjacency.end()) return out;
    for (const auto& id : it->second) out.insert(term(id));
    return out;
}

TermSet EdgeStore::strict_ancestors(RelationKind kind, const Term& t) const {
    return to_terms(graph(kind).ancestors, t);
}

TermSet EdgeStore::strict_descendants(RelationKind kind, const Term& t) const {
    return to_terms(graph(kind).descendants, t);
}

TermSet EdgeStore::parents(RelationKind kind, const Term& t) const {
    return to_terms(graph(kind).parents, t);
}

TermSet EdgeStore::children(RelationKind kind, const Term& t) const {
    return to_terms(graph(kind).children, t);
}

bool EdgeStore::is_strict_ancestor(RelationKind kind, const Term& lower, const Term& upper) const {
    const auto& anc = graph(kind).ancestors;
    auto it = anc.find(lower.id);
    return it != anc.end() && it->second.contains(upper.id);
}

Term EdgeStore::most_general(RelationKind kind, const Term& t) const {
    const Graph& g = graph(kind);
    auto it = g.ancestors.find(t.id);
    if (it == g.ancestors.end() || it->second.empty()) return t;
    // Ids are visited in sorted order, so the first maximal one is the tie-break winner.
    for (const auto& id : it->second) {
        auto p = g.parents.find(id);
        if (p == g.parents.end() || p->second.empty()) return term(id);
    }
    return t;  // unreachable for an acyclic graph
}

std::vector<Term> EdgeStore::path_up(RelationKind kind, const Term& from, const Term& to) const {
    if (from == to) return {from};
    if (!is_strict_ancestor(kind, from, to))
        throw NoPathError("'" + to.display + "' is not above '" + from.display + "' (" +
                          std::string(to_string(kind)) + ")");

    const Graph& g = graph(kind);
    std::vector<Term> path{term(from.id)};
    std::string current = from.id;
    while (current != to.id) {
        for (const auto& p : g.parents.at(current)) {
            if (p == to.id || is_strict_ancestor(kind, term(p), to)) {
                current = p;
                break;
            }
        }
        path.push_back(term(current));
    }
    return path;
}

std::vector<std::pair<Term, Term>> EdgeStore::edges(RelationKind kind) const {
    std::vector<std::pair<Term, Term>> out;
    for (const auto& [child, parents] : graph(kind).parents)
        for (const auto& parent : parents) out.emplace_back(term(child), term(parent));
    return out;
}

std::size_t EdgeStore::edge_count() const noexcept {
    std::size_t n = 0;
    for (const auto& g : graphs_)
        for (const auto& [child, parents] : g.parents) n += parents.size();
    return n;
}

}  // namespace verblogic
