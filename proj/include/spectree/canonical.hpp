#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spectree/graph.hpp"

namespace spectree {

struct CanonicalForm {
    std::string bytes;             // deterministic certificate; equal iff isomorphic
    unsigned long long aut_count;  // order of the automorphism group

    bool operator==(const CanonicalForm& o) const { return bytes == o.bytes; }
    bool operator<(const CanonicalForm& o) const { return bytes < o.bytes; }
};

namespace detail {

// ---- tree canonicalization (centroid rooting + level-sequence codes) ----

// Centroid(s): vertices minimizing the largest component of G - v.  A tree
// has one or two of them.
inline std::vector<int> tree_centroids(const Graph& g) {
    int n = g.order();
    std::vector<int> sub(n, 1), order, parent(n, -1);
    order.reserve(n);
    // iterative DFS from 0
    std::vector<int> stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        g.for_neighbors(v, [&](int u) {
            if (!seen[u]) {
                seen[u] = 1;
                parent[u] = v;
                stack.push_back(u);
            }
        });
    }
    for (int i = n - 1; i > 0; --i) sub[parent[order[i]]] += sub[order[i]];
    std::vector<int> cents;
    int best = n + 1;
    for (int v = 0; v < n; ++v) {
        int big = n - sub[v];
        g.for_neighbors(v, [&](int u) {
            if (parent[u] == v) big = std::max(big, sub[u]);
        });
        if (big < best) {
            best = big;
            cents.assign(1, v);
        } else if (big == best) {
            cents.push_back(v);
        }
    }
    return cents;
}

// Canonical level sequence of the subtree at v (relative depth `depth`),
// children ordered by descending subtree sequence.  Also multiplies the
// rooted automorphism count into `aut`.
inline std::vector<int> tree_canon_seq(const Graph& g, int v, int parent, int depth,
                                       unsigned long long& aut) {
    std::vector<std::vector<int>> kids;
    g.for_neighbors(v, [&](int u) {
        if (u != parent) kids.push_back(tree_canon_seq(g, u, v, depth + 1, aut));
    });
    std::sort(kids.begin(), kids.end(), std::greater<>());
    for (std::size_t i = 0; i < kids.size();) {
        std::size_t j = i;
        while (j < kids.size() && kids[j] == kids[i]) ++j;
        for (std::size_t k = 2; k <= j - i; ++k) aut *= k;
        i = j;
    }
    std::vector<int> seq{depth};
    for (auto& k : kids) seq.insert(seq.end(), k.begin(), k.end());
    return seq;
}

struct TreeCanon {
    std::vector<int> seq;  // canonical level sequence, root depth 1
    unsigned long long aut;
};

inline TreeCanon tree_canonical(const Graph& g) {
    auto cents = tree_centroids(g);
    if (cents.size() == 1) {
        unsigned long long aut = 1;
        auto seq = tree_canon_seq(g, cents[0], -1, 1, aut);
        return {seq, aut};
    }
    // bicentroidal: every automorphism fixes or swaps the two centroids;
    // the swap exists iff the two halves are isomorphic rooted trees
    int c1 = cents[0], c2 = cents[1];
    unsigned long long ah1 = 1, ah2 = 1;
    auto half1 = tree_canon_seq(g, c1, c2, 1, ah1);
    auto half2 = tree_canon_seq(g, c2, c1, 1, ah2);
    unsigned long long a1 = 1, a2 = 1;
    auto full1 = tree_canon_seq(g, c1, -1, 1, a1);
    auto full2 = tree_canon_seq(g, c2, -1, 1, a2);
    unsigned long long aut = a1 * (half1 == half2 ? 2 : 1);
    return {std::max(full1, full2), aut};
}

// Rebuild a tree from a level sequence (root depth 1).
inline Graph tree_from_level_seq(const std::vector<int>& seq) {
    Graph g(int(seq.size()));
    std::vector<int> at_depth(seq.size() + 2, -1);
    for (int i = 0; i < int(seq.size()); ++i) {
        int d = seq[i];
        at_depth[d] = i;
        if (d > 1) g.add_edge(at_depth[d - 1], i);
    }
    return g;
}

inline std::string tree_cert(const TreeCanon& tc, int n) {
    std::string s = "T" + std::to_string(n) + ":";
    for (int d : tc.seq) s.push_back(char(d));
    return s;
}

// ---- general graphs: color refinement + backtracking search ----

// 1-dimensional Weisfeiler-Leman refinement; returns colors 0..k-1 ordered
// canonically by signature.
inline std::vector<int> wl_colors(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n);
    {
        std::vector<int> degs = g.degree_sequence(), sorted = degs;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            color[v] = int(std::lower_bound(sorted.begin(), sorted.end(), degs[v]) - sorted.begin());
    }
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<int> nb;
            g.for_neighbors(v, [&](int u) { nb.push_back(color[u]); });
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::vector<std::vector<int>> uniq(sig.begin(), sig.end());
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v)
            next[v] = int(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
        if (next == color) break;
        color = next;
    }
    return color;
}

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> pos_color;           // required color at each position
    std::vector<std::vector<int>> cells;  // vertices per color
    std::vector<std::uint64_t> best, cur; // adjacency row bits per position
    std::vector<int> lab, best_lab;       // position -> vertex
    std::vector<char> used;
    unsigned long long aut = 0;
    bool have_best = false;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {
        if (n > 64) throw capacity_error("canonical_form: order > 64 unsupported for non-trees");
        auto color = wl_colors(g);
        int k = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
        cells.resize(k);
        for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
        for (int c = 0; c < k; ++c)
            for (std::size_t i = 0; i < cells[c].size(); ++i) pos_color.push_back(c);
        best.assign(n, 0);
        cur.assign(n, 0);
        lab.assign(n, -1);
        best_lab.assign(n, -1);
        used.assign(n, 0);
    }

    std::uint64_t row_bits(int v, int p) const {
        std::uint64_t bits = 0;
        for (int i = 0; i < p; ++i)
            if (g.has_edge(v, lab[i])) bits |= std::uint64_t(1) << i;
        return bits;
    }

    void rec(int p, bool tight) {
        if (p == n) {
            if (tight && have_best) {
                ++aut;
                return;
            }
            // full compare against best
            if (!have_best || cur > best) {
                best = cur;
                best_lab = lab;
                have_best = true;
                aut = 1;
            } else if (cur == best) {
                ++aut;
            }
            return;
        }
        for (int v : cells[pos_color[p]]) {
            if (used[v]) continue;
            std::uint64_t bits = row_bits(v, p);
            bool t = tight;
            if (tight && have_best) {
                if (bits < best[p]) continue;
                if (bits > best[p]) t = false;
            }
            used[v] = 1;
            lab[p] = v;
            cur[p] = bits;
            rec(p + 1, t);
            used[v] = 0;
        }
        lab[p] = -1;
    }

    void run() { rec(0, true); }
};

inline std::string general_cert(int n, const std::vector<std::uint64_t>& rows) {
    std::string s = "G" + std::to_string(n) + ":";
    for (std::uint64_t w : rows)
        for (int b = 0; b < 8; ++b) s.push_back(char((w >> (8 * b)) & 0xff));
    return s;
}

} // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
    if (g.order() == 0) return {"G0:", 1};
    if (g.is_tree()) {
        auto tc = detail::tree_canonical(g);
        return {detail::tree_cert(tc, g.order()), tc.aut};
    }
    detail::CanonSearch s(g);
    s.run();
    return {detail::general_cert(s.n, s.best), s.aut};
}

// Canonically relabeled copy: isomorphic inputs produce identical graphs.
inline Graph canonical_graph(const Graph& g) {
    if (g.order() == 0) return g;
    if (g.is_tree()) return detail::tree_from_level_seq(detail::tree_canonical(g).seq);
    detail::CanonSearch s(g);
    s.run();
    std::vector<int> perm(g.order());
    for (int p = 0; p < g.order(); ++p) perm[s.best_lab[p]] = p;
    return g.relabeled(perm);
}

namespace detail {

// Pairwise isomorphism backtracking (cheaper than canonicalizing large
// symmetric graphs such as dense line graphs).
inline bool iso_map_search(const Graph& a, const Graph& b, const std::vector<int>& ca,
                           const std::vector<int>& cb) {
    int n = a.order();
    std::vector<int> order(n), map(n, -1);
    std::vector<char> used(n, 0);
    // most-constrained-first: rare colors, then high degree
    std::vector<int> rarity(n);
    {
        std::map<int, int> freq;
        for (int c : ca) ++freq[c];
        for (int v = 0; v < n; ++v) rarity[v] = freq[ca[v]];
    }
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (rarity[x] != rarity[y]) return rarity[x] < rarity[y];
        return a.degree(x) > a.degree(y);
    });
    auto rec = [&](auto&& self, int idx) -> bool {
        if (idx == n) return true;
        int v = order[idx];
        for (int w = 0; w < n; ++w) {
            if (used[w] || cb[w] != ca[v]) continue;
            bool ok = true;
            for (int j = 0; j < idx && ok; ++j) {
                int v2 = order[j];
                if (a.has_edge(v, v2) != b.has_edge(w, map[v2])) ok = false;
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (self(self, idx + 1)) return true;
            used[w] = 0;
            map[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

} // namespace detail

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    auto da = a.degree_sequence(), db = b.degree_sequence();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    bool ta = a.is_tree(), tb = b.is_tree();
    if (ta != tb) return false;
    if (ta) return detail::tree_canonical(a).seq == detail::tree_canonical(b).seq;
    auto ca = detail::wl_colors(a), cb = detail::wl_colors(b);
    {
        // color class size profiles must match
        std::map<int, int> fa, fb;
        for (int c : ca) ++fa[c];
        for (int c : cb) ++fb[c];
        if (fa != fb) return false;
    }
    return detail::iso_map_search(a, b, ca, cb);
}

} // namespace spectree
