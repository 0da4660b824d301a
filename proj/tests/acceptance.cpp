// Acceptance suite: one verdict line per criterion, PASS or FAIL, each
// backed by an exact computation.  Criteria 1 and 14 state claims that are
// false as printed; they are implemented faithfully, reported FAIL, and the
// verdict lines carry the counterexamples.  The process exit code is 0 when
// every criterion's verdict matches the audited expectation (12 PASS, 2
// documented FAIL) so that the findings themselves are regression-checked.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include <spectree/charpoly.hpp>
#include <spectree/closed_forms.hpp>
#include <spectree/ds_verify.hpp>
#include <spectree/families.hpp>
#include <spectree/graph6.hpp>
#include <spectree/graph_ops.hpp>
#include <spectree/invariants.hpp>
#include <spectree/laurent.hpp>
#include <spectree/sturm.hpp>
#include <spectree/trees.hpp>
#include <spectree/walks.hpp>

using namespace spectree;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::map<std::string, long> identity_map(int k) {
    std::map<std::string, long> m;
    for (const auto& [g, c] : derive_walk_identity(k).terms)
        m[graph6_encode(canonical_graph(g))] = c;
    return m;
}

// ---- criterion 1: walk identities from first principles ----------------
bool criterion1(std::string& note) {
    auto id2 = identity_map(2), id3 = identity_map(3), id4 = identity_map(4),
         id5 = identity_map(5);
    std::string p2 = graph6_encode(canonical_graph(path_graph(2)));
    std::string p3 = graph6_encode(canonical_graph(path_graph(3)));
    std::string k3 = graph6_encode(canonical_graph(cycle_graph(3)));
    std::string c4 = graph6_encode(canonical_graph(cycle_graph(4)));
    std::string c5 = graph6_encode(canonical_graph(cycle_graph(5)));
    bool small_ok = id2.size() == 1 && id2.at(p2) == 2 && id3.size() == 1 &&
                    id3.at(k3) == 6 && id4.size() == 3 && id4.at(p2) == 2 &&
                    id4.at(p3) == 4 && id4.at(c4) == 8 && id5.size() == 3 &&
                    id5.at(k3) == 30 && id5.at(c5) == 10 && id5.at("CN") == 10;
    auto id7 = identity_map(7);
    std::vector<long> coeffs;
    for (const auto& [g6, c] : id7) coeffs.push_back(c);
    std::sort(coeffs.begin(), coeffs.end());
    std::vector<long> printed{14, 14, 14, 14, 28, 28, 42, 70, 84, 112, 126};
    bool k7_as_printed = id7.size() == 11 && coeffs == printed;
    if (small_ok && !k7_as_printed) {
        note = "lengths 2-5 match; length 7 requires 12 terms, not 11: the derived "
               "identity carries the two-triangles-sharing-an-edge pattern (graph6 DF{) "
               "with coefficient " +
               std::to_string(id7.count("DF{") ? id7.at("DF{") : 0) +
               ", which the 11-term list omits";
    }
    return small_ok && k7_as_printed;
}

// ---- criterion 2: identity census over all graphs with <= 8 vertices ----
bool criterion2(std::string& note) {
    WalkCensusReport rep = verify_walk_identities(8);
    note = std::to_string(rep.graphs_checked) + " graphs, " +
           std::to_string(rep.violations.size()) + " violations";
    return rep.graphs_checked == 13598 && rep.violations.empty();
}

// ---- criterion 3: path polynomial values and Laurent closed form --------
bool criterion3(std::string& note) {
    for (int r = 1; r <= 50; ++r)
        if (path_poly(r).eval(mpz_class(2)) != r + 1) return false;
    for (int r = 0; r <= 30; ++r) {
        LaurentPoly pre = LaurentPoly::monomial(1, r + 2) - LaurentPoly::monomial(1, r);
        LaurentPoly rhs = LaurentPoly::monomial(1, 2 * r + 2) - LaurentPoly::monomial(1, 0);
        if (!(to_laurent(path_poly(r), pre) == rhs)) return false;
    }
    note = "p_r(2) = r+1 for r <= 50; Laurent form exact for r <= 30";
    return true;
}

// ---- criterion 4: deletion recurrence vs determinant --------------------
bool criterion4(std::string& note) {
    long checked = 0;
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : all_graphs(n)) {
            IntPoly direct = charpoly(g, MatrixKind::adjacency);
            for (int v = 0; v < n; ++v) {
                if (deletion_charpoly(g, v) != direct) return false;
                ++checked;
            }
        }
    note = std::to_string(checked) + " vertex deletions checked";
    return true;
}

// ---- criterion 5: line-graph correspondence for trees n <= 9 ------------
bool criterion5(std::string& note) {
    CorrespondenceReport rep = verify_line_correspondence(9);
    note = std::to_string(rep.trees_checked) + " trees, " +
           std::to_string(rep.pairs_checked) + " pairs, " +
           std::to_string(rep.shift_violations + rep.equivalence_violations) +
           " violations";
    return rep.shift_violations == 0 && rep.equivalence_violations == 0;
}

// ---- criterion 6: degree recovery on all certified trees n <= 12 --------
bool criterion6(std::string& note) {
    long recovered = 0;
    bool ok = true;
    for (int n = 2; n <= 12 && ok; ++n)
        enumerate_trees(n, [&](const Graph& t) {
            if (!ok) return;
            IntPoly lap = charpoly(t, MatrixKind::laplacian);
            if (SturmChain(lap).count_roots_above(mpq_class(5)) != 0) return;
            std::array<long, 4> truth{};
            for (int v = 0; v < n; ++v) ++truth[std::size_t(t.degree(v) - 1)];
            if (degree_recovery(laplacian_facts(lap), true).counts != truth) ok = false;
            ++recovered;
        });
    note = std::to_string(recovered) + " certified trees recovered";
    return ok && recovered > 0;
}

// ---- criterion 7: line-graph degree census solution families ------------
bool criterion7(std::string& note) {
    auto solutions = [](int p, int q, int r) {
        Graph lg = line_graph(t4(p, q, r));
        return linegraph_degree_census(lg.order(), lg.size(), adjacent_edge_pairs(lg));
    };
    for (auto [p, q, r] : std::vector<std::array<int, 3>>{{2, 2, 2}, {2, 3, 4}, {3, 3, 3}}) {
        long m = long(p + q + r) + 6;
        auto sols = solutions(p, q, r);
        if (sols.size() != 1 || sols[0] != std::array<long, 4>{0, m - 6, 6, 0}) return false;
    }
    for (auto [p, q, r] : std::vector<std::array<int, 3>>{{1, 2, 2}, {1, 2, 5}, {1, 3, 4}}) {
        long m = long(p + q + r) + 6;
        auto sols = solutions(p, q, r);
        if (sols.size() != 2 || sols[0] != std::array<long, 4>{1, m - 8, 7, 0} ||
            sols[1] != std::array<long, 4>{0, m - 5, 4, 1})
            return false;
    }
    for (auto [p, q, r] : std::vector<std::array<int, 3>>{{1, 1, 2}, {1, 1, 6}}) {
        long m = long(p + q + r) + 6;
        auto sols = solutions(p, q, r);
        if (sols.size() != 3 || sols[0] != std::array<long, 4>{2, m - 10, 8, 0} ||
            sols[1] != std::array<long, 4>{1, m - 7, 5, 1} ||
            sols[2] != std::array<long, 4>{0, m - 4, 2, 2})
            return false;
    }
    note = "unique / two-branch / three-branch solution families reproduced";
    return true;
}

// ---- criterion 8: tailed-triangle count separation ----------------------
bool criterion8(std::string& note) {
    FamilyScanReport rep = family_collision_scan(MatrixKind::laplacian, 12, 12);
    long at_111 = -1;
    for (auto [p, q, r, c] : rep.g1_counts)
        if (p == 1 && q == 1 && r == 1) at_111 = c;
    note = "6/8/10 verified on the three stated subfamilies for p+q+r <= 12; the "
           "triple (1,1,1) sits outside the stated hypotheses (its count is " +
           std::to_string(at_111) + ")";
    return rep.g1_separation_ok && at_111 == 12;
}

// ---- criterion 9: closed-form audit ledger ------------------------------
bool criterion9(std::string& note) {
    long pass_count = 0, documented = 0;
    for (int s = 3; s <= 15; ++s)
        for (int p = 1; 3 * p <= s; ++p)
            for (int q = p; p + 2 * q <= s; ++q) {
                int r = s - p - q;
                if (p >= 2) {
                    // first display: printed pre-factor exponent is one too
                    // high, so verbatim MISMATCH everywhere is the documented
                    // shape; the repaired variant must pass
                    if (verify_identity("eq31", p, q, r).pass) return false;
                    if (!verify_identity("eq31", p, q, r, true).pass) return false;
                    ++documented;
                    if (!verify_identity("eq41", p, q, r).pass) return false;
                    ++pass_count;
                } else if (q >= 2) {
                    if (!verify_identity("eq32", p, q, r).pass) return false;
                    ++pass_count;
                    // fourth-section display for p = 1: documented MISMATCH
                    if (verify_identity("eq41", p, q, r).pass) return false;
                    if (!verify_table_provenance(p, q, r).pass) return false;
                    ++documented;
                } else if (r >= 2) {
                    if (verify_identity("eq41", p, q, r).pass) return false;
                    if (!verify_table_provenance(p, q, r).pass) return false;
                    ++documented;
                }
            }
    note = std::to_string(pass_count) + " PASS, " + std::to_string(documented) +
           " documented MISMATCH, 0 undocumented";
    return true;
}

// ---- criterion 10: injectivity of table instantiations ------------------
bool criterion10(std::string& note) {
    long checked = 0;
    for (const char* table : {"W", "U", "W1", "U1"}) {
        InjectivityReport rep = injectivity_scan(table, 24);
        if (!rep.collisions.empty()) return false;
        checked += rep.triples_checked;
    }
    note = std::to_string(checked) + " instantiations, all pairwise distinct";
    return true;
}

// ---- criterion 11: exhaustive no-mate check at orders 10..16 ------------
bool criterion11(std::string& note) {
    const std::map<int, long> oracle{{10, 106},  {11, 235},  {12, 551},  {13, 1301},
                                     {14, 3159}, {15, 7741}, {16, 19320}};
    long trees = 0, triples = 0;
    for (int n = 10; n <= 16; ++n) {
        DsCheckReport rep = ds_check_t4(n);
        if (rep.total_mates != 0) return false;
        if (rep.trees_on_n != oracle.at(n)) return false;
        trees += rep.trees_on_n;
        triples += long(rep.triples.size());
    }
    note = std::to_string(triples) + " family members vs " + std::to_string(trees) +
           " trees, zero mates";
    return true;
}

// ---- criterion 12: adjacency keys pairwise distinct ----------------------
bool criterion12(std::string& note) {
    FamilyScanReport rep = family_collision_scan(MatrixKind::adjacency, 24, 0);
    note = std::to_string(rep.members) + " members, " +
           std::to_string(rep.collisions.size()) + " collisions";
    return rep.collisions.empty();
}

// ---- criterion 13: centipedes have no Laplacian tree mates --------------
bool criterion13(std::string& note) {
    for (int n : {6, 8, 10, 12})
        if (!cospectral_mate_search(centipede(n), MatrixKind::laplacian,
                                    SearchSpace::trees_same_n)
                 .empty())
            return false;
    note = "orders 6, 8, 10, 12: zero mates";
    return true;
}

// ---- criterion 14: eigenvalue bounds ------------------------------------
bool criterion14(std::string& note) {
    for (int n = 2; n <= 10; ++n) {
        bool ok = true;
        enumerate_trees(n, [&](const Graph& t) { ok = ok && mu1_bounds_check(t).pass(); });
        if (!ok) {
            note = "two-sided bound failed on a tree";
            return false;
        }
    }
    std::vector<std::array<int, 3>> below49_failures;
    bool le5_everywhere = true;
    for (int s = 3; s <= 12; ++s)
        for (int p = 1; 3 * p <= s; ++p)
            for (int q = p; p + 2 * q <= s; ++q) {
                int r = s - p - q;
                SturmChain chain(charpoly(t4(p, q, r), MatrixKind::laplacian));
                if (chain.count_roots_above(mpq_class(49, 10)) > 0)
                    below49_failures.push_back({p, q, r});
                if (chain.count_roots_above(mpq_class(5)) > 0) le5_everywhere = false;
            }
    // subdivision monotonicity on 100 internal-path edges + exceptional-graph rejection
    long sampled = 0;
    std::vector<Graph> pool;
    for (int s = 3; s <= 9; ++s)
        for (int p = 1; 3 * p <= s; ++p)
            for (int q = p; p + 2 * q <= s; ++q) pool.push_back(t4(p, q, s - p - q));
    for (int n = 6; n <= 9; ++n) enumerate_trees(n, [&](const Graph& t) { pool.push_back(t); });
    for (const Graph& g : pool) {
        for (auto [u, v] : g.edges()) {
            if (sampled >= 100) break;
            if (!is_internal_path_edge(g, u, v)) continue;
            if (!subdivision_check(g, u, v).non_increasing) {
                note = "subdivision increased the spectral radius";
                return false;
            }
            ++sampled;
        }
    }
    bool wn_rejected = false;
    try {
        subdivision_check(w_graph(8), 0, 1);
    } catch (const structural_hypothesis_error&) {
        wn_rejected = true;
    } catch (const hypothesis_error&) {
        // rejected before the edge test; re-try demands the structural error
    }
    if (sampled < 100 || !wn_rejected) {
        note = "sampled " + std::to_string(sampled) + " subdivisions; exceptional graph " +
               (wn_rejected ? "rejected" : "NOT rejected");
        return false;
    }
    if (!below49_failures.empty()) {
        std::string list;
        for (auto [p, q, r] : below49_failures)
            list += " (" + std::to_string(p) + "," + std::to_string(q) + "," +
                    std::to_string(r) + ")";
        note = "two-sided bounds hold on all trees n <= 10 and the subdivision/rejection "
               "checks pass, but the strict bound mu1 < 4.9 is false at" + list +
               ": mu1 equals 5 exactly at (1,1,1) and exceeds 4.9 at (1,1,2); the weaker "
               "bound mu1 <= 5 " + (le5_everywhere ? "does hold" : "ALSO fails") +
               " for every member with p+q+r <= 12";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    struct Entry {
        int number;
        bool expected;  // the audited verdict this build is expected to reproduce
        bool (*run)(std::string&);
    };
    const Entry entries[] = {
        {1, false, criterion1}, {2, true, criterion2},   {3, true, criterion3},
        {4, true, criterion4},  {5, true, criterion5},   {6, true, criterion6},
        {7, true, criterion7},  {8, true, criterion8},   {9, true, criterion9},
        {10, true, criterion10}, {11, true, criterion11}, {12, true, criterion12},
        {13, true, criterion13}, {14, false, criterion14},
    };
    bool as_expected = true;
    int passed = 0;
    for (const Entry& e : entries) {
        auto t0 = std::chrono::steady_clock::now();
        std::string note;
        bool ok = false;
        try {
            ok = e.run(note);
        } catch (const std::exception& ex) {
            note = std::string("exception: ") + ex.what();
        }
        std::printf("criterion %2d: %s (%.1fs)%s%s\n", e.number, ok ? "PASS" : "FAIL",
                    seconds_since(t0), note.empty() ? "" : " -- ", note.c_str());
        std::fflush(stdout);
        passed += ok;
        if (ok != e.expected) as_expected = false;
    }
    std::printf("%d/14 criteria PASS; criteria 1 and 14 state claims that are false as "
                "printed and are expected to FAIL with the counterexamples above\n",
                passed);
    std::printf("verdicts %s the audited expectations\n",
                as_expected ? "match" : "DO NOT match");
    return as_expected ? 0 : 1;
}
