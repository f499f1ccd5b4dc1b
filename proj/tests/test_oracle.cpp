#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hamdec/classic.hpp"
#include "hamdec/generators.hpp"
#include "hamdec/oracle.hpp"
#include "testutil.hpp"

using namespace hamdec;
using namespace hamdec::oracle;

TEST_CASE("verify_decomposition accepts a hand-built K4 factorization") {
    Graph k4 = gen_complete(4);
    Decomposition d;
    d.host = k4;
    d.matchings = {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
    d.complete = true;
    CHECK(verify_decomposition(k4, d).ok);
    CHECK(verify_decomposition(k4, d).text() == "OK");
}

TEST_CASE("verify_decomposition flags duplicated edges") {
    Graph k4 = gen_complete(4);
    Decomposition d;
    d.host = k4;
    d.matchings = {{{0, 1}, {2, 3}}, {{0, 1}, {2, 3}}};
    d.complete = false;
    auto c = verify_decomposition(k4, d);
    CHECK_FALSE(c.ok);
    CHECK(c.rule == "disjointness");
}

TEST_CASE("verify_decomposition flags a wrong completeness claim") {
    Graph g = gen_g_crit(9);
    Decomposition d;
    d.host = g;
    d.complete = true;  // nothing covered
    auto c = verify_decomposition(g, d);
    CHECK_FALSE(c.ok);
    CHECK(c.rule == "completeness");
}

TEST_CASE("brute_one_factorization on K4") {
    auto d = brute_one_factorization(gen_complete(4));
    REQUIRE(d.has_value());
    CHECK(d->matchings.size() == 3);
    CHECK(verify_decomposition(gen_complete(4), *d).ok);
}

TEST_CASE("Petersen graph has no 1-factorization") {
    auto d = brute_one_factorization(testutil::petersen());
    CHECK_FALSE(d.has_value());
}

TEST_CASE("two_cliques(8) reaches the 1-factorization boundary") {
    // D = 3 = 2*ceil(8/4) - 1
    auto g = gen_two_cliques(8);
    auto d = brute_one_factorization(g);
    REQUIRE(d.has_value());
    CHECK(verify_decomposition(g, *d).ok);
}

TEST_CASE("brute_ham_decomposition") {
    SUBCASE("K5 decomposes into two cycles") {
        auto d = brute_ham_decomposition(gen_complete(5));
        REQUIRE(d.has_value());
        CHECK(d->cycles.size() == 2);
        CHECK(verify_decomposition(gen_complete(5), *d).ok);
    }
    SUBCASE("C6 is its own decomposition") {
        Graph c6(6);
        for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
        auto d = brute_ham_decomposition(c6);
        REQUIRE(d.has_value());
        CHECK(d->cycles.size() == 1);
    }
    SUBCASE("two cliques have no Hamilton cycle at all") {
        CHECK_FALSE(brute_ham_decomposition(gen_two_cliques(8)).has_value());
    }
}

TEST_CASE("max_ham_packing of babai(1) is (n-2)/8 = 1") {
    auto g = gen_babai(1);
    REQUIRE(g.n() == 10);
    auto p = max_ham_packing(g);
    CHECK(p.count == 1);
    CHECK(is_hamilton_cycle(g, p.cycles[0]));
}

TEST_CASE("max_ham_packing small sanity") {
    Graph c6(6);
    for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    CHECK(max_ham_packing(c6).count == 1);
    CHECK(max_ham_packing(gen_complete(5)).count == 2);
}

TEST_CASE("brute_degree_capped_max basics") {
    SUBCASE("matching of 4 edges, cap 1") {
        Graph g(8);
        for (int i = 0; i < 4; ++i) g.add_edge(2 * i, 2 * i + 1);
        CHECK(brute_degree_capped_max_serial(g, 1) == 4);
    }
    SUBCASE("K33 with cap 1 is a maximum matching") {
        CHECK(brute_degree_capped_max_serial(gen_complete_bipartite(3, 3), 1) == 3);
    }
    SUBCASE("g_crit(9) cross graph with cap 1") {
        auto g = gen_g_crit(9);
        Graph cross(g.n());
        // A' = A ∪ {a} = {0..3, 8}, B' = {4..7}
        std::vector<char> ap_mask(g.n(), 0);
        for (int v : {0, 1, 2, 3, 8}) ap_mask[v] = 1;
        for (auto [u, v] : g.edges())
            if (ap_mask[u] != ap_mask[v]) cross.add_edge(u, v);
        CHECK(cross.m() == 4);
        // two of the four cross edges share the special vertex, so a
        // degree-1-capped subgraph keeps at most 3 of them
        CHECK(brute_degree_capped_max_serial(cross, 1) == 3);
    }
}

TEST_CASE("parallel and serial capped max agree on seeded graphs") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        auto g = testutil::random_graph(9, 0.45, 1000 + seed);
        if (g.m() > 26) continue;
        for (int b = 1; b <= 3; ++b)
            CHECK(brute_degree_capped_max_serial(g, b) == brute_degree_capped_max_parallel(g, b));
    }
}

TEST_CASE("reg_even_oracle fixed points") {
    CHECK(reg_even_oracle(gen_babai(1)) == 2);  // (n-2)/4 with n = 10
    CHECK(reg_even_oracle(gen_complete(5)) == 4);
    Graph c7(7);
    for (int i = 0; i < 7; ++i) c7.add_edge(i, (i + 1) % 7);
    CHECK(reg_even_oracle(c7) == 2);
    Graph c6(6);
    for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    CHECK(reg_even_oracle(c6) == 2);
}

TEST_CASE("oracle caps raise resource errors") {
    CHECK_THROWS_AS(brute_one_factorization(gen_complete(16)), resource_error);
    CHECK_THROWS_AS(max_ham_packing(gen_complete(12)), resource_error);
}
