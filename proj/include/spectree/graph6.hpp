#pragma once

#include <string>

#include "spectree/graph.hpp"

namespace spectree {

// Standard graph6 encoding: 6-bit groups of the upper triangle in
// column-major order, each group offset by 63.
inline std::string graph6_encode(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    } else {
        throw capacity_error("graph6: order too large");
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(char(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(char((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph graph6_decode(const std::string& line) {
    std::size_t pos = 0;
    auto byte = [&]() -> int {
        if (pos >= line.size()) throw parse_error("graph6: truncated input", pos);
        int c = (unsigned char)line[pos];
        if (c < 63 || c > 126) throw parse_error("graph6: byte out of range", pos);
        ++pos;
        return c - 63;
    };
    long n;
    if (!line.empty() && (unsigned char)line[0] == 126) {
        ++pos;
        if (pos + 3 > line.size()) throw parse_error("graph6: truncated order field", pos);
        long a = byte(), b = byte(), c = byte();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = byte();
    }
    Graph g{int(n)};
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = byte();
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) g.add_edge(i, j);
            --nbits;
        }
    if (pos != line.size()) throw parse_error("graph6: trailing bytes", pos);
    return g;
}

} // namespace spectree
