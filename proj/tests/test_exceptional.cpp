#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <numeric>
#include <set>

#include "hamdec/exceptional.hpp"
#include "hamdec/generators.hpp"
#include "hamdec/oracle.hpp"
#include "splice_util.hpp"
#include "testutil.hpp"

using namespace hamdec;
using namespace hamdec::exceptional;

namespace {

BiPartition small_partition() {
    // A = {0..3}, A0 = {8}, B = {4..7}, B0 = {9}
    BiPartition p;
    p.A = {0, 1, 2, 3};
    p.A0 = {8};
    p.B = {4, 5, 6, 7};
    p.B0 = {9};
    return p;
}

std::vector<int> trace_cycle(const Graph& g, int start) {
    std::vector<int> seq = {start};
    int prev = -1, cur = start;
    while (true) {
        int nxt = -1;
        for (int w : g.neighbors(cur))
            if (w != prev) {
                nxt = w;
                break;
            }
        if (nxt == start || nxt < 0) break;
        seq.push_back(nxt);
        prev = cur;
        cur = nxt;
    }
    return seq;
}

}  // namespace

TEST_CASE("validate_es") {
    SUBCASE("two disjoint A'B'-edges with empty V0 form an HES") {
        BiPartition p;
        p.A = {0, 1, 2};
        p.B = {3, 4, 5};
        EdgeList j = {{0, 3}, {1, 4}};
        auto d = validate_es(j, p, 6, 1.0);
        CHECK(d.ok);
        CHECK(d.kind == ESKind::HES);
        CHECK(d.ab_paths == 2);
    }
    SUBCASE("same-side paths through the exceptional vertices form an MES") {
        auto p = small_partition();
        EdgeList j = {{0, 8}, {1, 8}, {4, 9}, {5, 9}};
        auto d = validate_es(j, p, 10, 1.0);
        CHECK(d.ok);
        CHECK(d.kind == ESKind::MES);
    }
    SUBCASE("a single AB-path is invalid (odd connection count)") {
        BiPartition p;
        p.A = {0, 1, 2};
        p.B = {3, 4, 5};
        auto d = validate_es({{0, 3}}, p, 6, 1.0);
        CHECK_FALSE(d.ok);
        CHECK_FALSE(d.kind.has_value());
    }
    SUBCASE("uncovered exceptional vertex is flagged") {
        auto p = small_partition();
        CHECK_FALSE(validate_es({}, p, 10, 1.0).ok);
    }
}

TEST_CASE("fictive construction") {
    SUBCASE("HES with one through-path and one direct edge (l = 1)") {
        BiPartition q;
        q.A = {0, 1, 2};
        q.A0 = {3};
        q.B = {4, 5, 6, 7};
        ExceptionalSystem j;
        j.n = 8;
        j.eps0 = 1.0;
        j.kind = ESKind::HES;
        j.edges = {{0, 3}, {3, 4}, {1, 5}};  // AB-paths 0-3-4 and 1-5
        REQUIRE(validate_es(j.edges, q, 8, 1.0).ok);
        auto f = fictive(j, q);
        CHECK(f.jstar_ab == EdgeList{{0, 4}, {1, 5}});
        REQUIRE(f.jstar_a.size() == 1);
        CHECK(make_edge(f.jstar_a[0].first, f.jstar_a[0].second) == Edge{0, 1});
        REQUIRE(f.jstar_b.size() == 1);
        CHECK(make_edge(f.jstar_b[0].first, f.jstar_b[0].second) == Edge{4, 5});
        CHECK(f.visit_a == std::vector<int>{0, 1});
        CHECK(f.visit_b == std::vector<int>{5, 4});
    }
    SUBCASE("MES fictive edges stay inside the sides") {
        auto p = small_partition();
        ExceptionalSystem j;
        j.n = 10;
        j.eps0 = 1.0;
        j.kind = ESKind::MES;
        j.edges = {{0, 8}, {1, 8}, {4, 9}, {5, 9}};
        auto f = fictive(j, p);
        REQUIRE(f.jstar_a.size() == 1);
        REQUIRE(f.jstar_b.size() == 1);
        CHECK(make_edge(f.jstar_a[0].first, f.jstar_a[0].second) == Edge{0, 1});
        CHECK(make_edge(f.jstar_b[0].first, f.jstar_b[0].second) == Edge{4, 5});
        CHECK(f.visit_a.empty());
        CHECK(f.visit_b.empty());
    }
    SUBCASE("fictive edge count obeys e(J*) <= |V0| + e_J(A',B')") {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            auto ins = testutil::make_splice_instance(seed, seed % 2 == 0);
            auto f = fictive(ins.j, ins.p);
            long long cross = 0;
            auto am = ins.p.mask_a_prime(ins.n);
            for (auto [u, v] : ins.j.edges) cross += am[u] != am[v];
            long long v0 = static_cast<long long>(ins.p.A0.size() + ins.p.B0.size());
            CHECK(static_cast<long long>(f.jstar_ab.size()) <= v0 + cross);
        }
    }
    SUBCASE("covered A-vertices agree between J and J*_AB") {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            auto ins = testutil::make_splice_instance(seed * 3 + 1, seed % 2 == 0);
            auto f = fictive(ins.j, ins.p);
            std::set<int> covered_j, covered_star;
            std::vector<char> in_a(ins.n, 0);
            for (int v : ins.p.A) in_a[v] = 1;
            for (auto [u, v] : ins.j.edges) {
                if (in_a[u]) covered_j.insert(u);
                if (in_a[v]) covered_j.insert(v);
            }
            for (auto [u, v] : f.jstar_ab) {
                if (in_a[u]) covered_star.insert(u);
                if (in_a[v]) covered_star.insert(v);
            }
            CHECK(covered_j == covered_star);
        }
    }
}

TEST_CASE("is_consistent") {
    FictiveSystem f;
    f.jstar_a = {{0, 1}, {2, 3}};
    f.visit_a = {0, 1, 2, 3};
    SUBCASE("pairs traversed in order") {
        CHECK(is_consistent({0, 1, 2, 3, 4, 5}, f, 'A'));
        CHECK(is_consistent({5, 4, 3, 2, 1, 0}, f, 'A'));  // reversed orientation
    }
    SUBCASE("pairs out of order") {
        CHECK_FALSE(is_consistent({0, 1, 5, 3, 2, 4}, f, 'A'));
        CHECK(is_consistent({0, 1, 5, 2, 3, 4}, f, 'A'));
    }
    SUBCASE("missing fictive edge") {
        CHECK_FALSE(is_consistent({0, 2, 1, 3, 4, 5}, f, 'A'));
    }
    SUBCASE("containment alone suffices when no order is imposed") {
        FictiveSystem g;
        g.jstar_a = {{0, 1}};
        CHECK(is_consistent({2, 0, 1, 4, 3}, g, 'A'));
    }
}

TEST_CASE("splice") {
    SUBCASE("empty MES is the disjoint union of the side cycles") {
        BiPartition p;
        p.A = {0, 1, 2};
        p.B = {3, 4, 5};
        ExceptionalSystem j;
        j.n = 6;
        j.kind = ESKind::MES;
        j.eps0 = 1.0;
        auto out = splice({0, 1, 2}, {3, 4, 5}, j, p);
        CHECK(out.m() == 6);
        CHECK(out.degree(0) == 2);
    }
    SUBCASE("hand instance with one V0 vertex and two AB-paths") {
        BiPartition q;
        q.A = {0, 1, 2};
        q.A0 = {3};
        q.B = {4, 5, 6};
        ExceptionalSystem j;
        j.n = 7;
        j.kind = ESKind::HES;
        j.eps0 = 1.0;
        j.edges = {{0, 3}, {3, 4}, {1, 5}};
        auto out = splice({0, 1, 2}, {4, 5, 6}, j, q);
        auto seq = trace_cycle(out, 0);
        CHECK(seq.size() == 7);
        CHECK(is_hamilton_cycle(gen_complete(7), seq));
    }
    SUBCASE("inconsistent side cycle is rejected") {
        BiPartition q;
        q.A = {0, 1, 2, 3};
        q.B = {4, 5, 6, 7};
        ExceptionalSystem j;
        j.n = 8;
        j.kind = ESKind::HES;
        j.eps0 = 1.0;
        j.edges = {{0, 4}, {1, 5}};
        CHECK_THROWS_AS(splice({0, 2, 1, 3}, {4, 5, 6, 7}, j, q), contract_error);
    }
    SUBCASE("seeded HES instances always splice to Hamilton cycles") {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            auto ins = testutil::make_splice_instance(seed, true);
            auto out = splice(ins.c_a, ins.c_b, ins.j, ins.p);
            REQUIRE(out.n() == ins.n);
            int d = 0;
            REQUIRE(out.is_regular(&d));
            REQUIRE(d == 2);
            auto seq = trace_cycle(out, 0);
            REQUIRE(static_cast<int>(seq.size()) == ins.n);
            CHECK(is_hamilton_cycle(ins.host, seq));
        }
    }
    SUBCASE("seeded MES instances splice to two perfect matchings") {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            auto ins = testutil::make_splice_instance(seed, false);
            if ((ins.p.A.size() + ins.p.A0.size()) % 2 != 0) continue;
            auto out = splice(ins.c_a, ins.c_b, ins.j, ins.p);
            auto [m1, m2] = mes_matchings(out, ins.p);
            CHECK(is_perfect_matching(ins.host, m1));
            CHECK(is_perfect_matching(ins.host, m2));
            std::set<Edge> s1(m1.begin(), m1.end());
            for (auto e : m2) CHECK_FALSE(s1.count(e));
        }
    }
}

TEST_CASE("splice_bipartite (balanced exceptional systems)") {
    BiPartition p;
    p.A = {0, 1, 2, 3};
    p.A0 = {8};
    p.B = {4, 5, 6, 7};
    p.B0 = {9};
    // J covers vertex 8 via two A-edges and 9 via two B-edges: balanced
    EdgeList j = {{0, 8}, {1, 8}, {4, 9}, {5, 9}};
    auto f = fictive_balanced(j, p);
    REQUIRE(f.jstar.size() == 2);  // one fictive A-pair matched to one B-pair
    // fictive edges are {x1 y1, x2 y2} with {x1,x2} = {0,1}, {y1,y2} = {4,5}
    std::vector<int> cyc = {0, 4, 1, 5, 2, 6, 3, 7};
    bool c1 = is_consistent_bipartite(cyc, f);
    std::vector<int> cyc2 = {0, 4, 2, 6, 1, 5, 3, 7};
    bool c2 = is_consistent_bipartite(cyc2, f);
    REQUIRE((c1 || c2));
    auto out = splice_bipartite(c1 ? cyc : cyc2, j, p);
    int d = 0;
    CHECK(out.is_regular(&d));
    CHECK(d == 2);
    auto seq = trace_cycle(out, 0);
    CHECK(seq.size() == 10);
}

TEST_CASE("extend_candidate") {
    auto p = small_partition();
    auto host = gen_complete(10);
    SUBCASE("already complete candidate comes back unchanged") {
        EdgeList f = {{0, 8}, {8, 4}, {1, 9}, {5, 9}};  // two AB-paths through V0
        auto j = extend_candidate(f, host, p, 1.0);
        CHECK(j.kind == ESKind::HES);
        EdgeList sorted = f;
        std::sort(sorted.begin(), sorted.end());
        EdgeList got = j.edges;
        std::sort(got.begin(), got.end());
        CHECK(got == sorted);
    }
    SUBCASE("degree-0 exceptional vertices get two fresh same-side edges") {
        EdgeList f = {{0, 4}, {1, 5}};  // HESC with b(F) = 2
        auto j = extend_candidate(f, host, p, 1.0);
        CHECK(j.kind == ESKind::HES);
        CHECK(j.edges.size() == f.size() + 4);
        CHECK(validate_es(j.edges, p, 10, 1.0).ok);
    }
    SUBCASE("MESC extends to an MES") {
        auto j = extend_candidate({}, host, p, 1.0);
        CHECK(j.kind == ESKind::MES);
        CHECK(validate_es(j.edges, p, 10, 1.0).ok);
    }
    SUBCASE("starved neighbourhood raises infeasible") {
        Graph thin(10);
        thin.add_edge(8, 0);
        thin.add_edge(9, 4);
        thin.add_edge(9, 5);
        CHECK_THROWS_AS(extend_candidate({}, thin, p, 1.0), infeasible_error);
    }
}

TEST_CASE("the two 2-balancedness checkers agree") {
    // constructive A0B0-path systems: each exceptional vertex gets two
    // endpoints on randomly chosen sides, plus an optional extra direct edge
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        std::mt19937_64 rng(seed);
        BiPartition p;
        p.A = {0, 1, 2, 3};
        p.A0 = {8};
        p.B = {4, 5, 6, 7};
        p.B0 = {9};
        std::vector<int> pool = {0, 1, 2, 3, 4, 5, 6, 7};
        std::shuffle(pool.begin(), pool.end(), rng);
        EdgeList q = {make_edge(8, pool[0]), make_edge(8, pool[1]), make_edge(9, pool[2]),
                      make_edge(9, pool[3])};
        if (rng() % 2 == 0) q.push_back(make_edge(pool[4], pool[5]));
        CHECK(two_balanced_by_counts(q, p, 10) == two_balanced_by_endpoints(q, p, 10));
    }
}

TEST_CASE("hamilton_through") {
    SUBCASE("forced path is traversed") {
        auto g = gen_complete(8);
        EdgeList forced = {{0, 1}, {1, 2}};
        auto cyc = hamilton_through(g, forced, 0, 100000);
        REQUIRE(cyc.has_value());
        CHECK(is_hamilton_cycle(g, *cyc));
        auto ce = cycle_edges(*cyc);
        for (auto e : forced) CHECK(std::binary_search(ce.begin(), ce.end(), e));
    }
    SUBCASE("graph without any Hamilton cycle comes back empty") {
        Graph g(4);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        CHECK_FALSE(hamilton_through(g, {}, 0, 100000).has_value());
    }
}

TEST_CASE("cover_a0b0") {
    auto make_instance = [&](std::vector<std::pair<int, int>> a0b0_edges, int na, int v0a,
                             int v0b) {
        int n = 2 * na + v0a + v0b;
        structure::Framework wf;
        wf.kind = structure::FrameworkKind::WF;
        for (int v = 0; v < na; ++v) wf.partition.A.push_back(v);
        for (int v = na; v < 2 * na; ++v) wf.partition.B.push_back(v);
        for (int v = 2 * na; v < 2 * na + v0a; ++v) wf.partition.A0.push_back(v);
        for (int v = 2 * na + v0a; v < n; ++v) wf.partition.B0.push_back(v);
        Graph g(n);
        for (int u = 0; u < na; ++u)
            for (int v = na; v < 2 * na; ++v) g.add_edge(u, v);
        for (int v0 : wf.partition.A0)
            for (int u = na; u < 2 * na; ++u) g.add_edge(v0, u);
        for (int v0 : wf.partition.B0)
            for (int u = 0; u < na; ++u) g.add_edge(v0, u);
        for (auto [u, v] : a0b0_edges) g.add_edge(u, v);
        return std::pair{g, wf};
    };
    SUBCASE("no exceptional cross edges: nothing to do") {
        auto [g, wf] = make_instance({}, 6, 1, 1);
        auto res = cover_a0b0(g, g, wf, ToleranceConfig{}, 0);
        CHECK(res.cycles.empty());
        CHECK(res.residual_g.m() == g.m());
    }
    SUBCASE("single A0B0-edge is covered by one verified Hamilton cycle") {
        auto [g, wf] = make_instance({{12, 13}}, 6, 1, 1);
        auto res = cover_a0b0(g, g, wf, ToleranceConfig{}, 0);
        REQUIRE(res.cycles.size() == 1);
        CHECK(is_hamilton_cycle(g, res.cycles[0]));
        auto ce = cycle_edges(res.cycles[0]);
        CHECK(std::binary_search(ce.begin(), ce.end(), Edge{12, 13}));
        CHECK(res.residual_g.m() == g.m() - g.n());
    }
    SUBCASE("two independent A0B0-edges are covered together") {
        auto [g, wf] = make_instance({{12, 14}, {13, 15}}, 6, 2, 2);
        auto res = cover_a0b0(g, g, wf, ToleranceConfig{}, 0);
        REQUIRE(res.cycles.size() >= 1);
        std::set<Edge> covered;
        for (const auto& cyc : res.cycles) {
            CHECK(is_hamilton_cycle(g, cyc));
            for (auto e : cycle_edges(cyc)) CHECK(covered.insert(e).second);
        }
        CHECK(covered.count({12, 14}));
        CHECK(covered.count({13, 15}));
    }
}

namespace {

// independent feasibility oracle: per-column DP over remaining row sums
bool assignment_exists(const std::vector<int>& a, const std::vector<int>& c, int eta_r) {
    int q = static_cast<int>(a.size());
    int r = static_cast<int>(c.size());
    std::set<std::vector<int>> states = {a};
    for (int j = 0; j < r; ++j) {
        int target = (j < eta_r ? 4 : 2) - c[j];
        std::set<std::vector<int>> next;
        for (const auto& st : states) {
            std::vector<int> entry(q, 0);
            std::function<void(int, int, int)> rec = [&](int i, int sum, int units) {
                if (i == q) {
                    if (sum == target && units >= 2 - c[j]) {
                        auto ns = st;
                        bool ok = true;
                        for (int t = 0; t < q; ++t) {
                            ns[t] -= entry[t];
                            if (ns[t] < 0) ok = false;
                        }
                        if (ok) next.insert(ns);
                    }
                    return;
                }
                for (int val = 0; val <= 2; ++val) {
                    if (sum + val > target) break;
                    entry[i] = val;
                    rec(i + 1, sum + val, units + (val == 1));
                }
                entry[i] = 0;
            };
            rec(0, 0, 0);
        }
        states = std::move(next);
        if (states.empty()) return false;
    }
    return states.count(std::vector<int>(q, 0)) > 0;
}

}  // namespace

TEST_CASE("assign_degrees") {
    SUBCASE("q=1 forced unit row") {
        std::vector<int> c(60, 1);
        auto m = assign_degrees({60}, c, 0.0);
        for (int j = 0; j < 60; ++j) CHECK(m[0][j] == 1);
    }
    SUBCASE("q=2 with eta = 1/6") {
        std::vector<int> c(60, 1);
        auto m = assign_degrees({40, 40}, c, 1.0 / 6.0);
        for (int j = 0; j < 60; ++j) {
            int col = c[j] + m[0][j] + m[1][j];
            CHECK(col == (j < 10 ? 4 : 2));
        }
    }
    SUBCASE("c spread above 1 is rejected") {
        std::vector<int> c = {2, 1, 0};
        CHECK_THROWS_AS(assign_degrees({3}, c, 0.0), domain_error);
    }
    SUBCASE("matches the exhaustive feasibility oracle for small r") {
        int built = 0;
        for (std::uint64_t seed = 0; built < 25 && seed < 800; ++seed) {
            std::mt19937_64 rng(seed);
            int r = 6 + static_cast<int>(rng() % 7);  // 6..12
            int q = 1 + static_cast<int>(rng() % 3);
            int eta_r = static_cast<int>(rng() % (r / 3 + 1));
            int c0 = static_cast<int>(rng() % 2);
            int split = static_cast<int>(rng() % (r + 1));
            std::vector<int> c(r, c0);
            for (int j = 0; j < split; ++j) c[j] = c0 + 1;
            std::sort(c.begin(), c.end(), std::greater<int>());
            long long need = 2LL * (r + eta_r) - std::accumulate(c.begin(), c.end(), 0LL);
            double lf = 0.2;
            std::vector<int> a(q, 0);
            bool ok = true;
            long long rest = need;
            for (int i = 0; i < q; ++i) {
                long long hi = (i < 2 ? r : static_cast<long long>(2 * lf * r));
                long long lo = static_cast<long long>(lf * r) + 1;
                long long remaining_lo = 0;
                for (int t = i + 1; t < q; ++t) remaining_lo += static_cast<long long>(lf * r) + 1;
                long long take = std::min(hi, rest - remaining_lo);
                if (take < lo) {
                    ok = false;
                    break;
                }
                a[i] = static_cast<int>(take);
                rest -= take;
            }
            if (!ok || rest != 0) continue;
            ++built;
            auto m = assign_degrees(a, c, static_cast<double>(eta_r) / r, lf);
            CHECK(assignment_exists(a, c, eta_r));
            (void)m;
        }
        CHECK(built == 25);
    }
}
