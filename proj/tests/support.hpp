#pragma once

#include "verblogic/dsl.hpp"
#include "verblogic/knowledge_base.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace verblogic::testing {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline std::string kb_path(const std::string& name) { return std::string(VERBLOGIC_KB_DIR) + "/" + name; }

// Loads DSL text, throwing on any error diagnostic.
inline KnowledgeBase kb_from(std::string_view text) {
    auto built = dsl::load_kb(text);
    if (!built.ok()) {
        std::string msg = "knowledge base did not load:";
        for (const auto& d : built.diagnostics) msg += "\n  " + dsl::format(d, "<text>");
        throw std::runtime_error(msg);
    }
    return std::move(built.kb);
}

inline KnowledgeBase kb_file(const std::string& name) { return kb_from(read_file(kb_path(name))); }

inline Term t(std::string_view s) { return Term(s); }

// Independent reachability: DFS over the declared edge list only.
struct ReachabilityOracle {
    std::map<std::string, std::vector<std::string>> up;

    void add(const std::string& child, const std::string& parent) { up[child].push_back(parent); }

    std::set<std::string> above(const std::string& start) const {
        std::set<std::string> seen;
        std::vector<std::string> stack{start};
        while (!stack.empty()) {
            std::string n = stack.back();
            stack.pop_back();
            auto it = up.find(n);
            if (it == up.end()) continue;
            for (const auto& p : it->second)
                if (seen.insert(p).second) stack.push_back(p);
        }
        return seen;
    }

    // Every upward path from `from` to `to`.
    std::vector<std::vector<std::string>> paths(const std::string& from, const std::string& to) const {
        std::vector<std::vector<std::string>> out;
        std::vector<std::string> current{from};
        walk(from, to, current, out);
        return out;
    }

private:
    void walk(const std::string& at, const std::string& to, std::vector<std::string>& current,
              std::vector<std::vector<std::string>>& out) const {
        if (at == to) {
            out.push_back(current);
            return;
        }
        auto it = up.find(at);
        if (it == up.end()) return;
        for (const auto& p : it->second) {
            current.push_back(p);
            walk(p, to, current, out);
            current.pop_back();
        }
    }
};

}  // namespace verblogic::testing
