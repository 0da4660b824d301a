#pragma once

#include "spectree/graph.hpp"

namespace spectree {

// Line graph: vertices are the edges of g in lexicographic (u, v) order,
// adjacent iff the underlying edges share an endpoint.
inline Graph line_graph(const Graph& g) {
    auto es = g.edges();
    Graph l(int(es.size()));
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) l.add_edge(int(i), int(j));
        }
    return l;
}

inline Graph complement(const Graph& g) {
    int n = g.order();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

// Replace edge uv by a new vertex w with edges uw, wv.
inline Graph subdivide_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw missing_edge_error("subdivide_edge: uv is not an edge");
    int n = g.order();
    Graph h(n + 1);
    for (auto [a, b] : g.edges())
        if (!((a == u && b == v) || (a == v && b == u))) h.add_edge(a, b);
    h.add_edge(u, n);
    h.add_edge(n, v);
    return h;
}

inline long triangle_count(const Graph& g) {
    long t = 0;
    int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!g.has_edge(u, v)) continue;
            for (int w = v + 1; w < n; ++w)
                if (g.has_edge(u, w) && g.has_edge(v, w)) ++t;
        }
    return t;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(u + a.order(), v + a.order());
    return g;
}

} // namespace spectree
