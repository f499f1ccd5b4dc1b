#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "hamdec/generators.hpp"
#include "hamdec/io.hpp"
#include "testutil.hpp"

using namespace hamdec;

TEST_CASE("degree_threshold matches the mod-4 case split") {
    CHECK(degree_threshold(12) == 5);   // n/2 - 1
    CHECK(degree_threshold(13) == 6);   // (n-1)/2
    CHECK(degree_threshold(14) == 7);   // n/2
    CHECK(degree_threshold(15) == 8);   // (n+1)/2
    CHECK_THROWS_AS(degree_threshold(2), domain_error);
    for (int n = 4; n <= 64; ++n) {
        int expect = n % 4 == 0 ? n / 2 - 1 : n % 4 == 1 ? (n - 1) / 2 : n % 4 == 2 ? n / 2 : (n + 1) / 2;
        CHECK(degree_threshold(n) == expect);
    }
}

TEST_CASE("graph basics") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(g.m() == 2);
    g.add_edge(0, 1);  // duplicate ignored
    CHECK(g.m() == 2);
    CHECK_THROWS_AS(g.add_edge(2, 2), domain_error);
    CHECK_THROWS_AS(g.add_edge(0, 7), domain_error);
    CHECK(g.degree(1) == 2);
    CHECK(g.has_edge(2, 1));
}

TEST_CASE("edges_between") {
    Graph k4 = gen_complete(4);
    CHECK(edges_between(k4, {0, 1}, {2, 3}) == 4);
    CHECK(edges_between(k4, {}, {0, 1, 2, 3}) == 0);
    CHECK(edges_between(k4, {0, 1, 2, 3}, {0, 1, 2, 3}) == 6);  // X = Y counts e(X)
    CHECK_THROWS_AS(edges_between(k4, {9}, {0}), domain_error);

    auto babai = gen_babai(1);
    std::vector<int> a, b;
    for (int v = 0; v < 4; ++v) a.push_back(v);
    for (int v = 4; v < 10; ++v) b.push_back(v);
    CHECK(edges_between(babai, a, b) == 4 * 6);  // complete between the classes
}

TEST_CASE("is_D_balanced") {
    SUBCASE("regular graph with |A| = |B|") {
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            auto g = testutil::random_regular(10, 4, seed);
            auto p = testutil::random_bipartition(10, 5, seed);
            CHECK(is_D_balanced(g, p, 4));
        }
    }
    SUBCASE("empty graph, D = 0") {
        Graph g(4);
        BiPartition p;
        p.A = {0, 1};
        p.B = {2, 3};
        CHECK(is_D_balanced(g, p, 0));
    }
    SUBCASE("K4 with a lopsided split") {
        BiPartition p;
        p.A = {0, 1, 2};
        p.B = {3};
        CHECK(is_D_balanced(gen_complete(4), p, 3));  // e(A')=3, e(B')=0, (3-1)*3/2 = 3
    }
}

TEST_CASE("cut_parity_check") {
    BiPartition p;
    p.A = {0, 1};
    p.B = {2, 3};
    CHECK(cut_parity_check(gen_complete(4), p, 3));

    BiPartition q = testutil::random_bipartition(10, 5, 7);
    CHECK(cut_parity_check(testutil::petersen(), q, 3));

    BiPartition r;
    r.A = {0, 2};
    r.B = {1, 3, 4};
    CHECK(cut_parity_check(gen_complete(5), r, 4));

    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    BiPartition s;
    s.A = {0};
    s.B = {1, 2};
    CHECK_THROWS_AS(cut_parity_check(path, s, 1), contract_error);
}

TEST_CASE("parity law on seeded regular graphs") {
    int done = 0;
    for (std::uint64_t seed = 0; done < 40 && seed < 200; ++seed) {
        int n = 8 + 2 * static_cast<int>(seed % 4);
        int d = 3 + static_cast<int>(seed % 5);
        if ((n * d) % 2 != 0) continue;
        Graph g;
        try {
            g = testutil::random_regular(n, d, seed);
        } catch (const infeasible_error&) {
            continue;
        }
        auto p = testutil::random_bipartition(n, 1 + static_cast<int>(seed % (n - 1)), seed * 31 + 1);
        CHECK(cut_parity_check(g, p, d));
        ++done;
    }
    CHECK(done == 40);
}

TEST_CASE("generators") {
    SUBCASE("babai") {
        auto g = gen_babai(1);
        CHECK(g.n() == 10);
        CHECK(g.min_degree() == 5);
        for (int k = 1; k <= 4; ++k) CHECK(gen_babai(k).min_degree() == (8 * k + 2) / 2);
    }
    SUBCASE("two_cliques") {
        auto g = gen_two_cliques(8);
        int d = 0;
        CHECK(g.is_regular(&d));
        CHECK(d == 3);
        CHECK(edges_between(g, {0, 1, 2, 3}, {4, 5, 6, 7}) == 0);  // disconnected
    }
    SUBCASE("g_crit") {
        auto g = gen_g_crit(9);
        int d = 0;
        REQUIRE(g.is_regular(&d));
        CHECK(d == 4);
        auto p = natural_partition("g_crit", g, 9);
        CHECK(edges_between(g, p.a_prime(), p.b_prime()) == 4);
        CHECK_THROWS_AS(gen_g_crit(10), domain_error);
        CHECK_THROWS_AS(gen_g_crit(11), domain_error);
        int d13 = 0;
        CHECK(gen_g_crit(13).is_regular(&d13));
        CHECK(d13 == 6);
    }
    SUBCASE("bestposs is disconnected and regular for 6 <= n <= 30") {
        for (int n = 6; n <= 30; ++n) {
            auto g = gen_bestposs(n);
            int dstar = n / 2 - 1;
            int expect = (n % 2 == 1 && dstar % 2 == 1) ? dstar - 1 : dstar;
            int d = 0;
            CHECK(g.is_regular(&d));
            CHECK(d == expect);
            auto p = natural_partition("bestposs", g, n);
            CHECK(edges_between(g, p.A, p.B) == 0);
        }
    }
    SUBCASE("two_cliques_minus_ham is regular exactly when n = 0 mod 4") {
        auto g = gen_two_cliques_minus_ham(12);
        int d = 0;
        CHECK(g.is_regular(&d));
        CHECK(d == 4);  // n/2 - 2
        CHECK_FALSE(gen_two_cliques_minus_ham(14).is_regular());
    }
}

TEST_CASE("graph io round trip") {
    SUBCASE("P3 from text") {
        std::istringstream in("3 2\n0 1\n1 2\n");
        auto g = read_graph(in);
        CHECK(g.n() == 3);
        CHECK(g.has_edge(0, 1));
        CHECK(g.has_edge(1, 2));
        CHECK_FALSE(g.has_edge(0, 2));
    }
    SUBCASE("empty graph") {
        std::istringstream in("0 0\n");
        CHECK(read_graph(in).n() == 0);
    }
    SUBCASE("write-read is the identity on K5") {
        auto k5 = gen_complete(5);
        auto text = to_string(k5);
        std::istringstream in(text);
        CHECK(to_string(read_graph(in)) == text);
    }
    SUBCASE("parse errors carry line numbers") {
        std::istringstream in("3 2\n0 1\nnonsense\n");
        CHECK_THROWS_AS(read_graph(in), parse_error);
    }
}

TEST_CASE("bipartition io") {
    BiPartition p;
    p.A = {0, 1};
    p.A0 = {4};
    p.B = {2, 3};
    p.B0 = {5};
    std::ostringstream out;
    write_bipartition(out, p);
    std::istringstream in(out.str());
    auto q = read_bipartition(in);
    CHECK(q.A == p.A);
    CHECK(q.A0 == p.A0);
    CHECK(q.B == p.B);
    CHECK(q.B0 == p.B0);
    q.validate(6);
}

TEST_CASE("decomposition io and canonical form") {
    Graph k4 = gen_complete(4);
    Decomposition d;
    d.host = k4;
    d.cycles = {{2, 3, 0, 1}};
    d.matchings = {{{3, 1}, {2, 0}}};
    d.complete = false;
    auto text = to_string(d);
    std::istringstream in(text);
    auto e = read_decomposition(in, k4);
    CHECK(to_string(e) == text);
    CHECK(e.cycles[0][0] == 0);  // canonical start
}

TEST_CASE("degree lower bound on the cut (min-degree form)") {
    // e(A',B') >= (D - |B'| + 1) |B'| whenever delta(G) >= D
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = testutil::random_graph(11, 0.6, seed);
        int D = g.min_degree();
        auto p = testutil::random_bipartition(11, 1 + static_cast<int>(seed % 10), seed);
        long long cut = edges_between(g, p.A, p.B);
        long long bp = static_cast<long long>(p.B.size());
        CHECK(cut >= (D - bp + 1) * bp);
    }
}
