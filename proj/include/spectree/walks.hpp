#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "spectree/canonical.hpp"
#include "spectree/charpoly.hpp"
#include "spectree/graph.hpp"
#include "spectree/graph6.hpp"

namespace spectree {

// Exact number of closed walks of length k: trace of A^k.
inline mpz_class closed_walks(const Graph& g, int k) {
    if (k < 0) throw parameter_error("closed_walks requires k >= 0");
    int n = g.order();
    if (k == 0) return n;
    detail::ZMat a = detail::matrix_of(g, MatrixKind::adjacency);
    detail::ZMat m = a;
    for (int i = 1; i < k; ++i) m = detail::mat_mul(m, a);
    mpz_class tr = 0;
    for (int i = 0; i < n; ++i) tr += m[i][i];
    return tr;
}

namespace detail {

// Injective embeddings of `pattern` into g (adjacency-preserving, edges of
// the pattern map onto edges of g; extra edges in g are allowed).
inline long count_embeddings(const Graph& g, const Graph& pattern) {
    int np = pattern.order(), ng = g.order();
    if (np > ng) return 0;
    if (ng > 64) throw capacity_error("count_embeddings: host order > 64");
    // order pattern vertices so each has a previously-placed neighbor
    std::vector<int> order;
    std::vector<char> placed(np, 0);
    {
        int start = 0;
        for (int v = 1; v < np; ++v)
            if (pattern.degree(v) > pattern.degree(start)) start = v;
        order.push_back(start);
        placed[start] = 1;
        while (int(order.size()) < np) {
            int best = -1, best_links = -1;
            for (int v = 0; v < np; ++v) {
                if (placed[v]) continue;
                int links = 0;
                pattern.for_neighbors(v, [&](int u) { links += placed[u]; });
                if (links > best_links) {
                    best_links = links;
                    best = v;
                }
            }
            order.push_back(best);
            placed[best] = 1;
        }
    }
    std::vector<std::uint64_t> host_nb(ng);
    for (int v = 0; v < ng; ++v) host_nb[v] = g.row_word(v);
    std::vector<int> map(np, -1);
    std::uint64_t used = 0;
    long count = 0;
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == np) {
            ++count;
            return;
        }
        int pv = order[idx];
        // candidates: adjacent to all already-mapped pattern neighbors
        std::uint64_t cand = ~used & ((ng == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << ng) - 1));
        pattern.for_neighbors(pv, [&](int pu) {
            if (map[pu] >= 0) cand &= host_nb[map[pu]];
        });
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            map[pv] = w;
            used |= std::uint64_t(1) << w;
            self(self, idx + 1);
            used &= ~(std::uint64_t(1) << w);
            map[pv] = -1;
        }
    };
    rec(rec, 0);
    return count;
}

} // namespace detail

// Number of (not necessarily induced) subgraphs of g isomorphic to pattern.
inline long count_subgraph_copies(const Graph& g, const Graph& pattern) {
    if (pattern.order() == 0 || !pattern.is_connected())
        throw parameter_error("count_subgraph_copies requires a connected, nonempty pattern");
    long emb = detail::count_embeddings(g, pattern);
    auto aut = canonical_form(pattern).aut_count;
    return emb / long(aut);
}

struct WalkIdentity {
    int length;
    // (pattern, coefficient), patterns canonically labeled & ordered
    std::vector<std::pair<Graph, long>> terms;
};

inline constexpr int kWalkCensusBound = 8;

namespace detail {

// Closed k-walks on `pattern` (any start vertex) that traverse every edge at
// least once: DP over (step, current vertex, covered-edge mask).
inline long covering_closed_walks(const Graph& pattern, int k) {
    int n = pattern.order();
    auto es = pattern.edges();
    int e = int(es.size());
    if (e > k) return 0;
    std::map<std::pair<int, int>, int> eid;
    for (int i = 0; i < e; ++i) {
        eid[es[i]] = i;
        eid[{es[i].second, es[i].first}] = i;
    }
    long total = 0;
    int full = (1 << e) - 1;
    std::vector<long> cur(std::size_t(n) << e, 0), next;
    for (int s = 0; s < n; ++s) {
        std::fill(cur.begin(), cur.end(), 0);
        cur[(std::size_t(s) << e)] = 1;
        for (int step = 0; step < k; ++step) {
            next.assign(cur.size(), 0);
            for (int v = 0; v < n; ++v)
                for (int mask = 0; mask <= full; ++mask) {
                    long ways = cur[(std::size_t(v) << e) | mask];
                    if (!ways) continue;
                    pattern.for_neighbors(v, [&](int u) {
                        int id = eid[{v, u}];
                        next[(std::size_t(u) << e) | (mask | (1 << id))] += ways;
                    });
                }
            cur.swap(next);
        }
        total += cur[(std::size_t(s) << e) | full];
    }
    return total;
}

} // namespace detail

// All graphs on exactly n vertices (including disconnected), one per
// isomorphism class, built by vertex augmentation with canonical dedup.
inline std::vector<Graph> all_graphs(int n) {
    if (n > kWalkCensusBound) throw capacity_error("all_graphs: census bound exceeded");
    std::vector<Graph> level{Graph(0)};
    for (int sz = 1; sz <= n; ++sz) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        for (const Graph& g : level)
            for (std::uint64_t nb = 0; nb < (std::uint64_t(1) << (sz - 1)); ++nb) {
                Graph h{sz};
                for (auto [u, v] : g.edges()) h.add_edge(u, v);
                for (int v = 0; v < sz - 1; ++v)
                    if ((nb >> v) & 1) h.add_edge(v, sz - 1);
                if (seen.insert(canonical_form(h).bytes).second) next.push_back(h);
            }
        level = std::move(next);
    }
    return level;
}

// Reconstructs the decomposition of closed k-walk counts into subgraph-copy
// counts by brute force: enumerates candidate connected patterns and gives
// each the number of closed k-walks on it covering all of its edges.
inline WalkIdentity derive_walk_identity(int k) {
    if (k < 2 || k > kWalkCensusBound) throw capacity_error("derive_walk_identity: k out of range");
    std::vector<std::pair<Graph, long>> terms;
    for (int v = 2; v <= k; ++v)
        for (const Graph& g : all_graphs(v)) {
            if (!g.is_connected() || g.size() > k) continue;
            long coeff = detail::covering_closed_walks(g, k);
            if (coeff != 0) terms.emplace_back(canonical_graph(g), coeff);
        }
    // deterministic order: vertex count, edge count, certificate
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        auto ka = std::tuple(a.first.order(), a.first.size(), canonical_form(a.first).bytes);
        auto kb = std::tuple(b.first.order(), b.first.size(), canonical_form(b.first).bytes);
        return ka < kb;
    });
    return {k, std::move(terms)};
}

struct PatternEntry {
    std::string name;
    Graph graph;
    unsigned long long aut_count;
};

// Named small graphs used by the walk identities.  G1 is the triangle with
// a pendant edge; G2..G8 are the remaining k=7 patterns in canonical order.
inline std::vector<PatternEntry> build_pattern_catalog() {
    std::vector<PatternEntry> cat;
    auto add = [&](const std::string& name, const Graph& g) {
        cat.push_back({name, canonical_graph(g), canonical_form(g).aut_count});
    };
    {
        Graph k3{3};
        k3.add_edge(0, 1);
        k3.add_edge(1, 2);
        k3.add_edge(0, 2);
        add("K3", k3);
        Graph p3{3};
        p3.add_edge(0, 1);
        p3.add_edge(1, 2);
        add("P3", p3);
        Graph c4{4}, c5{5}, c7{7};
        for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
        for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
        for (int i = 0; i < 7; ++i) c7.add_edge(i, (i + 1) % 7);
        add("C4", c4);
        add("C5", c5);
        add("C7", c7);
        Graph g1{4};
        g1.add_edge(0, 1);
        g1.add_edge(1, 2);
        g1.add_edge(0, 2);
        g1.add_edge(2, 3);
        add("G1", g1);
    }
    // derive G2..G8 from the k=7 identity
    auto id7 = derive_walk_identity(7);
    std::set<std::string> named;
    for (const auto& p : cat) named.insert(canonical_form(p.graph).bytes);
    int next_g = 2;
    for (const auto& [g, coeff] : id7.terms) {
        if (named.count(canonical_form(g).bytes)) continue;
        add("G" + std::to_string(next_g++), g);
    }
    return cat;
}

// "name<TAB>graph6" lines
inline std::string catalog_to_text(const std::vector<PatternEntry>& cat) {
    std::string out;
    for (const auto& p : cat) out += p.name + "\t" + graph6_encode(p.graph) + "\n";
    return out;
}

inline std::vector<PatternEntry> catalog_from_text(const std::string& text) {
    std::vector<PatternEntry> cat;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        std::string line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (line.empty()) continue;
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos) throw parse_error("catalog: missing tab", pos);
        Graph g = graph6_decode(line.substr(tab + 1));
        cat.push_back({line.substr(0, tab), g, canonical_form(g).aut_count});
    }
    return cat;
}

struct WalkViolation {
    Graph graph;
    int length;
    mpz_class walks, decomposed;
};

struct WalkCensusReport {
    long graphs_checked = 0;
    std::vector<WalkViolation> violations;
};

// Checks every derived identity k in {2,3,4,5,7} on every graph with at
// most census_max_n vertices.
inline WalkCensusReport verify_walk_identities(int census_max_n) {
    if (census_max_n > kWalkCensusBound)
        throw capacity_error("verify_walk_identities: census bound exceeded");
    std::vector<int> ks{2, 3, 4, 5, 7};
    std::vector<WalkIdentity> ids;
    std::vector<std::vector<unsigned long long>> auts;
    for (int k : ks) {
        ids.push_back(derive_walk_identity(k));
        std::vector<unsigned long long> a;
        for (const auto& [pat, c] : ids.back().terms) a.push_back(canonical_form(pat).aut_count);
        auts.push_back(a);
    }
    WalkCensusReport report;
    for (int n = 1; n <= census_max_n; ++n)
        for (const Graph& g : all_graphs(n)) {
            ++report.graphs_checked;
            for (std::size_t i = 0; i < ks.size(); ++i) {
                mpz_class lhs = closed_walks(g, ks[i]);
                mpz_class rhs = 0;
                for (std::size_t t = 0; t < ids[i].terms.size(); ++t) {
                    const auto& [pat, coeff] = ids[i].terms[t];
                    if (pat.order() > n) continue;
                    long emb = detail::count_embeddings(g, pat);
                    rhs += mpz_class(coeff) * (emb / long(auts[i][t]));
                }
                if (lhs != rhs) report.violations.push_back({g, ks[i], lhs, rhs});
            }
        }
    return report;
}

} // namespace spectree
