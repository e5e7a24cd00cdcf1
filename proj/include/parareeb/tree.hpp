#pragma once

// Abstract finite trees: canonical codes (AHU at the center), degree-2
// smoothing, parsing, and exhaustive enumeration of non-isomorphic trees.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "parareeb/rational.hpp"

namespace parareeb {

struct Tree {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(static_cast<size_t>(n));
        for (auto [u, v] : edges) {
            adj[static_cast<size_t>(u)].push_back(v);
            adj[static_cast<size_t>(v)].push_back(u);
        }
        return adj;
    }

    static Tree path(int n) {
        Tree t;
        t.n = n;
        for (int i = 0; i + 1 < n; ++i) t.edges.push_back({i, i + 1});
        return t;
    }
    static Tree star(int leaves) {
        Tree t;
        t.n = leaves + 1;
        for (int i = 1; i <= leaves; ++i) t.edges.push_back({0, i});
        return t;
    }
};

inline bool tree_is_valid(const Tree& t) {
    if (t.n <= 0) return false;
    if (static_cast<int>(t.edges.size()) != t.n - 1) return false;
    // connectivity
    auto adj = t.adjacency();
    std::vector<bool> seen(static_cast<size_t>(t.n), false);
    std::vector<int> stack = {0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<size_t>(v)])
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == t.n;
}

namespace detail {

inline std::string rooted_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::string> child;
    for (int w : adj[static_cast<size_t>(v)])
        if (w != parent) child.push_back(rooted_code(adj, w, v));
    std::sort(child.begin(), child.end());
    std::string s = "(";
    for (const auto& c : child) s += c;
    s += ")";
    return s;
}

inline std::vector<int> tree_centers(const Tree& t) {
    if (t.n == 1) return {0};
    auto adj = t.adjacency();
    std::vector<int> deg(static_cast<size_t>(t.n));
    std::vector<int> layer;
    for (int v = 0; v < t.n; ++v) {
        deg[static_cast<size_t>(v)] = static_cast<int>(adj[static_cast<size_t>(v)].size());
        if (deg[static_cast<size_t>(v)] <= 1) layer.push_back(v);
    }
    int remaining = t.n;
    while (remaining > 2) {
        std::vector<int> next;
        remaining -= static_cast<int>(layer.size());
        for (int v : layer)
            for (int w : adj[static_cast<size_t>(v)])
                if (--deg[static_cast<size_t>(w)] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

}  // namespace detail

/// Equal strings iff the trees are isomorphic.
inline std::string canonical_code(const Tree& t) {
    if (!tree_is_valid(t)) throw std::invalid_argument("canonical_code: not a tree");
    auto adj = t.adjacency();
    auto centers = detail::tree_centers(t);
    if (centers.size() == 1) return detail::rooted_code(adj, centers[0], -1);
    std::string a = detail::rooted_code(adj, centers[0], centers[1]);
    std::string b = detail::rooted_code(adj, centers[1], centers[0]);
    if (b < a) std::swap(a, b);
    return "[" + a + b + "]";
}

/// Core tree after suppressing all degree-2 vertices, with per-core-edge
/// counts of suppressed vertices. Resubdividing edge i of `core` with
/// counts[i] vertices recovers the input up to isomorphism.
struct SmoothedTree {
    Tree core;
    std::vector<int> counts;            // parallel to core.edges
    std::vector<int> core_vertex_orig;  // core vertex -> original vertex id
};

inline SmoothedTree smooth_tree(const Tree& t) {
    if (!tree_is_valid(t) || t.n < 2) throw std::invalid_argument("smooth_tree: need a tree, n >= 2");
    auto adj = t.adjacency();
    std::vector<int> keep;  // original ids with degree != 2
    std::vector<int> core_id(static_cast<size_t>(t.n), -1);
    for (int v = 0; v < t.n; ++v)
        if (adj[static_cast<size_t>(v)].size() != 2) {
            core_id[static_cast<size_t>(v)] = static_cast<int>(keep.size());
            keep.push_back(v);
        }
    SmoothedTree out;
    out.core.n = static_cast<int>(keep.size());
    out.core_vertex_orig = keep;
    // walk maximal chains between kept vertices
    std::set<std::pair<int, int>> used;  // directed half-edges consumed
    for (int v : keep) {
        for (int w0 : adj[static_cast<size_t>(v)]) {
            if (used.count({v, w0})) continue;
            int prev = v, cur = w0, suppressed = 0;
            used.insert({v, w0});
            while (core_id[static_cast<size_t>(cur)] < 0) {
                ++suppressed;
                const auto& nb = adj[static_cast<size_t>(cur)];
                int nxt = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = nxt;
            }
            used.insert({cur, prev});
            int a = core_id[static_cast<size_t>(v)], b = core_id[static_cast<size_t>(cur)];
            if (a <= b) {  // one record per chain; self-chains impossible in a tree
                out.core.edges.push_back({a, b});
                out.counts.push_back(suppressed);
            } else {
                out.core.edges.push_back({b, a});
                out.counts.push_back(suppressed);
            }
        }
    }
    return out;
}

/// Parse "1-2,2-3,2-4" (labels arbitrary integers/strings) into a Tree.
inline Tree parse_tree_edges(const std::string& text) {
    Tree t;
    std::map<std::string, int> ids;
    auto intern = [&](const std::string& s) {
        auto it = ids.find(s);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(ids.size());
        ids[s] = id;
        return id;
    };
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos) throw std::invalid_argument("bad edge: " + item);
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t"));
            s.erase(s.find_last_not_of(" \t") + 1);
            return s;
        };
        std::string a = trim(item.substr(0, dash)), b = trim(item.substr(dash + 1));
        if (a.empty() || b.empty()) throw std::invalid_argument("bad edge: " + item);
        t.edges.push_back({intern(a), intern(b)});
    }
    t.n = static_cast<int>(ids.size());
    if (!tree_is_valid(t)) throw std::invalid_argument("edge list is not a tree");
    return t;
}

/// All non-isomorphic trees on n >= 2 vertices (via Prüfer enumeration and
/// canonical-code dedup). Counts: 1,1,2,3,6,11,23 for n = 2..8.
inline std::vector<Tree> all_trees(int n) {
    std::vector<Tree> out;
    if (n < 2) return out;
    if (n == 2) {
        out.push_back(Tree::path(2));
        return out;
    }
    std::map<std::string, Tree> seen;
    std::vector<int> pruefer(static_cast<size_t>(n - 2), 0);
    for (;;) {
        // decode
        Tree t;
        t.n = n;
        std::vector<int> deg(static_cast<size_t>(n), 1);
        for (int x : pruefer) ++deg[static_cast<size_t>(x)];
        std::set<int> leaves;
        for (int v = 0; v < n; ++v)
            if (deg[static_cast<size_t>(v)] == 1) leaves.insert(v);
        std::vector<int> seq = pruefer;
        for (int x : seq) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            t.edges.push_back({leaf, x});
            if (--deg[static_cast<size_t>(x)] == 1) leaves.insert(x);
        }
        int u = *leaves.begin();
        int v = *std::next(leaves.begin());
        t.edges.push_back({u, v});
        std::string code = canonical_code(t);
        if (!seen.count(code)) seen[code] = t;
        // next sequence
        int i = n - 3;
        while (i >= 0 && pruefer[static_cast<size_t>(i)] == n - 1) {
            pruefer[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++pruefer[static_cast<size_t>(i)];
    }
    for (auto& [code, t] : seen) out.push_back(std::move(t));
    return out;
}

}  // namespace parareeb
