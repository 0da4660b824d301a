#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <map>
#include <random>
#include <vector>

#include <spectree/charpoly.hpp>
#include <spectree/families.hpp>
#include <spectree/graph_ops.hpp>
#include <spectree/invariants.hpp>
#include <spectree/sturm.hpp>
#include <spectree/trees.hpp>

using namespace spectree;

TEST_CASE("laplacian facts recovered from the polynomial alone") {
    for (const Graph& g : {path_graph(6), star_graph(5), t4(1, 2, 3), cycle_graph(7)}) {
        LaplacianFacts facts = laplacian_facts(charpoly(g, MatrixKind::laplacian));
        CHECK(facts.n == g.order());
        CHECK(facts.m == g.size());
        CHECK(facts.components == 1);
        mpz_class d2 = 0;
        for (int v = 0; v < g.order(); ++v) d2 += mpz_class(g.degree(v)) * g.degree(v);
        CHECK(facts.sum_deg_sq == d2);
    }
    // disconnected input: component count from the multiplicity of root 0
    Graph two = disjoint_union(path_graph(3), path_graph(4));
    CHECK(laplacian_facts(charpoly(two, MatrixKind::laplacian)).components == 2);
}

TEST_CASE("spanning tree count from the Laplacian coefficients") {
    LaplacianFacts facts = laplacian_facts(charpoly(cycle_graph(6), MatrixKind::laplacian));
    CHECK(facts.spanning_trees == 6);
}

TEST_CASE("cube moment is certified only for trees") {
    LaplacianFacts tree_facts = laplacian_facts(charpoly(t4(1, 1, 2), MatrixKind::laplacian));
    CHECK(tree_facts.sum_deg_cube_valid);
    mpz_class d3 = 0;
    Graph g = t4(1, 1, 2);
    for (int v = 0; v < g.order(); ++v)
        d3 += mpz_class(g.degree(v)) * g.degree(v) * g.degree(v);
    CHECK(tree_facts.sum_deg_cube == d3);
    LaplacianFacts cyc_facts = laplacian_facts(charpoly(cycle_graph(5), MatrixKind::laplacian));
    CHECK_FALSE(cyc_facts.sum_deg_cube_valid);
}

TEST_CASE("degree census recovery on every tree with at most 12 vertices") {
    for (int n = 2; n <= 12; ++n)
        enumerate_trees(n, [&](const Graph& t) {
            IntPoly lap = charpoly(t, MatrixKind::laplacian);
            if (SturmChain(lap).count_roots_above(mpq_class(5)) != 0) return;
            std::array<long, 4> truth{};
            for (int v = 0; v < n; ++v) {
                REQUIRE(t.degree(v) <= 4);
                ++truth[std::size_t(t.degree(v) - 1)];
            }
            DegreeCensus census = degree_recovery(laplacian_facts(lap), true);
            CHECK(census.counts == truth);
        });
}

TEST_CASE("degree recovery refuses inputs without the certificate or tree facts") {
    LaplacianFacts facts = laplacian_facts(charpoly(path_graph(5), MatrixKind::laplacian));
    CHECK_THROWS_AS(degree_recovery(facts, false), hypothesis_error);
    LaplacianFacts cyc = laplacian_facts(charpoly(cycle_graph(4), MatrixKind::laplacian));
    CHECK_THROWS_AS(degree_recovery(cyc, true), hypothesis_error);
}

TEST_CASE("line-graph degree census systems match the printed solution families") {
    auto pairs_of = [](const Graph& g) { return adjacent_edge_pairs(line_graph(g)); };
    auto edges_of = [](const Graph& g) { return long(line_graph(g).size()); };

    SECTION("all legs at least 2: unique solution (0, m-6, 6, 0)") {
        for (auto [p, q, r] : std::vector<std::array<int, 3>>{{2, 2, 2}, {2, 3, 4}, {3, 3, 3}}) {
            Graph member = t4(p, q, r);
            long m = member.size();
            long n_L = m;  // line graph of a tree on n vertices has n-1 vertices
            auto sols = linegraph_degree_census(n_L, edges_of(member), pairs_of(member));
            REQUIRE(sols.size() == 1);
            CHECK(sols[0] == std::array<long, 4>{0, m - 6, 6, 0});
        }
    }
    SECTION("exactly one leg of length 1: two solution branches") {
        for (auto [p, q, r] : std::vector<std::array<int, 3>>{{1, 2, 2}, {1, 2, 4}, {1, 3, 3}}) {
            Graph member = t4(p, q, r);
            long m = member.size();
            auto sols = linegraph_degree_census(m, edges_of(member), pairs_of(member));
            REQUIRE(sols.size() == 2);
            CHECK(sols[0] == std::array<long, 4>{1, m - 8, 7, 0});
            CHECK(sols[1] == std::array<long, 4>{0, m - 5, 4, 1});
        }
    }
    SECTION("two legs of length 1: three solution branches") {
        for (auto [p, q, r] : std::vector<std::array<int, 3>>{{1, 1, 2}, {1, 1, 4}}) {
            Graph member = t4(p, q, r);
            long m = member.size();
            auto sols = linegraph_degree_census(m, edges_of(member), pairs_of(member));
            REQUIRE(sols.size() == 3);
            CHECK(sols[0] == std::array<long, 4>{2, m - 10, 8, 0});
            CHECK(sols[1] == std::array<long, 4>{1, m - 7, 5, 1});
            CHECK(sols[2] == std::array<long, 4>{0, m - 4, 2, 2});
        }
    }
    SECTION("true census of the actual line graph is always among the solutions") {
        for (auto [p, q, r] : std::vector<std::array<int, 3>>{{1, 1, 1}, {1, 2, 3}, {2, 2, 5}}) {
            Graph lg = line_graph(t4(p, q, r));
            std::array<long, 4> truth{};
            for (int v = 0; v < lg.order(); ++v) {
                REQUIRE(lg.degree(v) <= 4);
                ++truth[std::size_t(lg.degree(v) - 1)];
            }
            auto sols = linegraph_degree_census(lg.order(), lg.size(),
                                                adjacent_edge_pairs(lg));
            CHECK(std::find(sols.begin(), sols.end(), truth) != sols.end());
        }
    }
}

TEST_CASE("largest Laplacian eigenvalue bounds hold on all trees up to 10 vertices") {
    for (int n = 2; n <= 10; ++n)
        enumerate_trees(n, [&](const Graph& t) {
            Mu1BoundsReport rep = mu1_bounds_check(t);
            CHECK(rep.pass());
            CHECK(rep.mu1.hi - rep.mu1.lo <= mpq_class(1, 1000000000));
        });
}

TEST_CASE("largest Laplacian eigenvalue of T4 members stays at most 5") {
    for (int s = 3; s <= 12; ++s)
        for (int p = 1; 3 * p <= s; ++p)
            for (int q = p; p + 2 * q <= s; ++q) {
                IntPoly lap = charpoly(t4(p, q, s - p - q), MatrixKind::laplacian);
                CHECK(SturmChain(lap).count_roots_above(mpq_class(5)) == 0);
            }
    // ... and 5 is attained: it is exactly a root for the smallest member
    CHECK(SturmChain(charpoly(t4(1, 1, 1), MatrixKind::laplacian)).is_root(mpq_class(5)));
}

TEST_CASE("subdividing an internal-path edge never increases the spectral radius") {
    std::mt19937 rng(7);
    int sampled = 0;
    std::vector<Graph> pool;
    for (int s = 3; s <= 8; ++s)
        for (int p = 1; 3 * p <= s; ++p)
            for (int q = p; p + 2 * q <= s; ++q) pool.push_back(t4(p, q, s - p - q));
    for (int n = 6; n <= 9; ++n) enumerate_trees(n, [&](const Graph& t) { pool.push_back(t); });
    pool.push_back(cycle_graph(8));
    std::shuffle(pool.begin(), pool.end(), rng);
    for (const Graph& g : pool) {
        for (auto [u, v] : g.edges()) {
            if (!is_internal_path_edge(g, u, v)) {
                bool all_deg2 = true;
                for (int w = 0; w < g.order(); ++w) all_deg2 &= g.degree(w) == 2;
                if (!all_deg2) continue;
            }
            SubdivisionReport rep = subdivision_check(g, u, v);
            CHECK(rep.non_increasing);
            if (++sampled >= 100) return;
        }
    }
    FAIL("fewer than 100 internal-path edges sampled");
}

TEST_CASE("the exceptional even tree W_n is rejected by the subdivision check") {
    Graph wn = w_graph(8);
    bool found = false;
    for (auto [u, v] : wn.edges()) {
        if (!is_internal_path_edge(wn, u, v)) continue;
        found = true;
        CHECK_THROWS_AS(subdivision_check(wn, u, v), structural_hypothesis_error);
    }
    CHECK(found);
}

TEST_CASE("non-internal edges are rejected by the subdivision check") {
    Graph g = star_graph(3);  // every edge is pendant
    CHECK_THROWS_AS(subdivision_check(g, 0, 1), hypothesis_error);
}

TEST_CASE("complement Laplacian spectrum from the original polynomial") {
    for (const Graph& g : {path_graph(5), star_graph(3), cycle_graph(6), t4(1, 1, 1)}) {
        IntPoly lap = charpoly(g, MatrixKind::laplacian);
        IntPoly expected = charpoly(complement(g), MatrixKind::laplacian);
        CHECK(complement_laplacian(lap, g.order()) == expected);
    }
}
