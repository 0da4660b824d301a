#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "spectree/errors.hpp"

namespace spectree {

// Undirected simple graph with per-vertex bitset rows.  Rows use as many
// 64-bit words as the order requires, so n > 64 works transparently.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), words_((n + 63) / 64), bits_(std::size_t(n) * words_, 0) {
        if (n < 0) throw parameter_error("graph order must be nonnegative");
    }

    int order() const noexcept { return n_; }

    int size() const {
        int m = 0;
        for (int v = 0; v < n_; ++v) m += degree(v);
        return m / 2;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw parameter_error("self-loops are not allowed");
        row(u)[v >> 6] |= std::uint64_t(1) << (v & 63);
        row(v)[u >> 6] |= std::uint64_t(1) << (u & 63);
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        row(u)[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
        row(v)[u >> 6] &= ~(std::uint64_t(1) << (u & 63));
    }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        const std::uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
        return d;
    }

    template <class F>
    void for_neighbors(int v, F&& f) const {
        const std::uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = r[w];
            while (bits) {
                int u = (w << 6) + std::countr_zero(bits);
                bits &= bits - 1;
                f(u);
            }
        }
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for_neighbors(v, [&](int u) { out.push_back(u); });
        return out;
    }

    // Edges as (u, v) with u < v, lexicographically ordered.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for_neighbors(u, [&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    std::vector<int> degree_sequence() const {
        std::vector<int> d(n_);
        for (int v = 0; v < n_; ++v) d[v] = degree(v);
        return d;
    }

    bool is_connected() const {
        if (n_ == 0) return true;
        std::vector<char> seen(n_, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int visited = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for_neighbors(v, [&](int u) {
                if (!seen[u]) {
                    seen[u] = 1;
                    ++visited;
                    stack.push_back(u);
                }
            });
        }
        return visited == n_;
    }

    int component_count() const {
        std::vector<char> seen(n_, 0);
        int comps = 0;
        for (int s = 0; s < n_; ++s) {
            if (seen[s]) continue;
            ++comps;
            std::vector<int> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for_neighbors(v, [&](int u) {
                    if (!seen[u]) {
                        seen[u] = 1;
                        stack.push_back(u);
                    }
                });
            }
        }
        return comps;
    }

    bool is_tree() const { return n_ >= 1 && size() == n_ - 1 && is_connected(); }

    bool is_bipartite() const {
        std::vector<int> color(n_, -1);
        for (int s = 0; s < n_; ++s) {
            if (color[s] >= 0) continue;
            color[s] = 0;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                bool ok = true;
                for_neighbors(v, [&](int u) {
                    if (color[u] < 0) {
                        color[u] = 1 - color[v];
                        stack.push_back(u);
                    } else if (color[u] == color[v]) {
                        ok = false;
                    }
                });
                if (!ok) return false;
            }
        }
        return true;
    }

    // Subgraph induced on `keep` (result vertex i = keep[i]).
    Graph induced(const std::vector<int>& keep) const {
        Graph h(int(keep.size()));
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = i + 1; j < keep.size(); ++j)
                if (has_edge(keep[i], keep[j])) h.add_edge(int(i), int(j));
        return h;
    }

    Graph without_vertices(const std::vector<int>& removed) const {
        std::vector<char> gone(n_, 0);
        for (int v : removed) {
            check_vertex(v);
            gone[v] = 1;
        }
        std::vector<int> keep;
        for (int v = 0; v < n_; ++v)
            if (!gone[v]) keep.push_back(v);
        return induced(keep);
    }

    Graph relabeled(const std::vector<int>& perm) const {
        // perm[old] = new label
        Graph h(n_);
        for (auto [u, v] : edges()) h.add_edge(perm[u], perm[v]);
        return h;
    }

    // Adjacency between u and the first 64 vertices, as a word (valid for n <= 64).
    std::uint64_t row_word(int v) const {
        check_vertex(v);
        return row(v)[0];
    }

    bool operator==(const Graph& o) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw parameter_error("vertex index out of range");
    }
    std::uint64_t* row(int v) { return bits_.data() + std::size_t(v) * words_; }
    const std::uint64_t* row(int v) const { return bits_.data() + std::size_t(v) * words_; }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// "n m\nu v\n..." edge-list text format.
inline Graph parse_edge_list(const std::string& text) {
    std::size_t pos = 0;
    auto next_int = [&]() -> long {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\n' || text[pos] == '\t' || text[pos] == '\r')) ++pos;
        if (pos >= text.size()) throw parse_error("unexpected end of edge list", pos);
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) throw parse_error("expected integer", pos);
        return std::stol(text.substr(start, pos - start));
    };
    long n = next_int(), m = next_int();
    if (n < 0 || m < 0) throw parse_error("negative count", 0);
    Graph g{int(n)};
    for (long i = 0; i < m; ++i) {
        long u = next_int(), v = next_int();
        if (u >= n || v >= n) throw parse_error("vertex out of range", pos);
        g.add_edge(int(u), int(v));
    }
    return g;
}

inline std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

} // namespace spectree
