#pragma once

#include <vector>

#include "spectree/canonical.hpp"
#include "spectree/graph.hpp"

namespace spectree {

inline constexpr int kTreeEnumLimit = 18;

// Streams exactly one representative per isomorphism class of free trees on
// n vertices.  Rooted trees are generated as canonical level sequences
// (Beyer-Hedetniemi successor rule); a rooted tree is kept iff its sequence
// equals the centroid-rooted canonical sequence of its underlying free tree.
template <class F>
void enumerate_trees(int n, F&& emit, int limit = kTreeEnumLimit) {
    if (n < 1) throw parameter_error("enumerate_trees requires n >= 1");
    if (n > limit) throw capacity_error("enumerate_trees: n exceeds the configured limit");
    if (n == 1) {
        emit(Graph(1));
        return;
    }
    std::vector<int> seq(n);
    for (int i = 0; i < n; ++i) seq[i] = i + 1;  // the path: lexicographically greatest sequence
    while (true) {
        Graph g = detail::tree_from_level_seq(seq);
        if (detail::tree_canonical(g).seq == seq) emit(g);
        // successor: find rightmost entry > 2, truncate, and repeat the block
        int p = n - 1;
        while (p >= 0 && seq[p] <= 2) --p;
        if (p < 0) break;
        int q = p - 1;
        while (seq[q] != seq[p] - 1) --q;
        for (int i = p; i < n; ++i) seq[i] = seq[i - (p - q)];
    }
}

inline long count_trees(int n, int limit = kTreeEnumLimit) {
    long c = 0;
    enumerate_trees(n, [&](const Graph&) { ++c; }, limit);
    return c;
}

} // namespace spectree
