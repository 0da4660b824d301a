#pragma once

#include <string>
#include <vector>

#include "spectree/graph.hpp"

namespace spectree {

enum class FamilyKind { T4, Path, Cycle, Star, CompleteBipartite, Centipede, WGraph, Complete };

struct FamilySpec {
    FamilyKind kind;
    std::vector<int> params;
};

namespace detail {

// T4(p,q,r): a center vertex, three legs of p, q, r path vertices, and two
// pendant leaves on the far end of each leg.
inline Graph build_t4(int p, int q, int r) {
    if (p < 1 || p > q || q > r) throw parameter_error("T4 requires 1 <= p <= q <= r");
    int n = p + q + r + 7;
    Graph g(n);
    int next = 1;  // vertex 0 is the center
    for (int len : {p, q, r}) {
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, next++);  // two pendant leaves at the leg tip
        g.add_edge(prev, next++);
    }
    return g;
}

inline Graph build_path(int k) {
    if (k < 1) throw parameter_error("Path requires k >= 1");
    Graph g(k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph build_cycle(int k) {
    if (k < 3) throw parameter_error("Cycle requires k >= 3");
    Graph g(k);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
}

inline Graph build_complete(int k) {
    if (k < 1) throw parameter_error("Complete requires k >= 1");
    Graph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    return g;
}

inline Graph build_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw parameter_error("CompleteBipartite requires a, b >= 1");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

// Centipede on n = 2k-2 vertices: path with k vertices plus a pendant leaf
// at each of its k-2 internal (degree-2) vertices.
inline Graph build_centipede(int n) {
    if (n < 6 || n % 2 != 0) throw parameter_error("Centipede requires even n >= 6");
    int k = (n + 2) / 2;
    Graph g(n);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    int next = k;
    for (int i = 1; i + 1 < k; ++i) g.add_edge(i, next++);
    return g;
}

// W_n: path P_{n-2} (vertices 0..n-3 in natural order) plus pendant edges
// at the second and second-to-last path vertices.
inline Graph build_w_graph(int n) {
    if (n < 6) throw parameter_error("WGraph requires n >= 6");
    Graph g(n);
    for (int i = 0; i + 1 < n - 2; ++i) g.add_edge(i, i + 1);
    g.add_edge(1, n - 2);
    g.add_edge(n - 4, n - 1);
    return g;
}

} // namespace detail

inline Graph build_family(const FamilySpec& spec) {
    auto need = [&](std::size_t k) {
        if (spec.params.size() != k)
            throw parameter_error("family expects " + std::to_string(k) + " parameter(s)");
    };
    switch (spec.kind) {
        case FamilyKind::T4:
            need(3);
            return detail::build_t4(spec.params[0], spec.params[1], spec.params[2]);
        case FamilyKind::Path:
            need(1);
            return detail::build_path(spec.params[0]);
        case FamilyKind::Cycle:
            need(1);
            return detail::build_cycle(spec.params[0]);
        case FamilyKind::Star:
            need(1);
            return detail::build_complete_bipartite(1, spec.params[0]);
        case FamilyKind::CompleteBipartite:
            need(2);
            return detail::build_complete_bipartite(spec.params[0], spec.params[1]);
        case FamilyKind::Centipede:
            need(1);
            return detail::build_centipede(spec.params[0]);
        case FamilyKind::WGraph:
            need(1);
            return detail::build_w_graph(spec.params[0]);
        case FamilyKind::Complete:
            need(1);
            return detail::build_complete(spec.params[0]);
    }
    throw parameter_error("unknown family kind");
}

inline Graph t4(int p, int q, int r) { return detail::build_t4(p, q, r); }
inline Graph path_graph(int k) { return detail::build_path(k); }
inline Graph cycle_graph(int k) { return detail::build_cycle(k); }
inline Graph star_graph(int leaves) { return detail::build_complete_bipartite(1, leaves); }
inline Graph complete_graph(int k) { return detail::build_complete(k); }
inline Graph centipede(int n) { return detail::build_centipede(n); }
inline Graph w_graph(int n) { return detail::build_w_graph(n); }

} // namespace spectree
