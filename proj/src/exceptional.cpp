#include "hamdec/exceptional.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "hamdec/classic.hpp"

namespace hamdec {
namespace exceptional {

std::vector<std::vector<int>> path_components(int n, const EdgeList& edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        if (adj[v].size() > 2) throw domain_error("not a path system: degree above 2");
        std::sort(adj[v].begin(), adj[v].end());
    }
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> paths;
    for (int s = 0; s < n; ++s) {
        if (seen[s] || adj[s].size() != 1) continue;
        std::vector<int> path = {s};
        seen[s] = 1;
        int prev = -1, cur = s;
        for (;;) {
            int nxt = -1;
            for (int w : adj[cur])
                if (w != prev) nxt = w;
            if (nxt < 0) break;
            if (seen[nxt]) throw domain_error("not a path system: repeated vertex");
            path.push_back(nxt);
            seen[nxt] = 1;
            prev = cur;
            cur = nxt;
        }
        paths.push_back(std::move(path));
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v] && adj[v].size() == 2)
            throw domain_error("not a path system: contains a cycle");
    return paths;
}

namespace {

struct SideInfo {
    std::vector<char> in_a, in_a0, in_b, in_b0, in_ap, in_bp, in_v0;
};

SideInfo side_info(const BiPartition& p, int n) {
    SideInfo s;
    s.in_a.assign(n, 0);
    s.in_a0.assign(n, 0);
    s.in_b.assign(n, 0);
    s.in_b0.assign(n, 0);
    for (int v : p.A) s.in_a[v] = 1;
    for (int v : p.A0) s.in_a0[v] = 1;
    for (int v : p.B) s.in_b[v] = 1;
    for (int v : p.B0) s.in_b0[v] = 1;
    s.in_ap = s.in_a;
    s.in_bp = s.in_b;
    s.in_v0.assign(n, 0);
    for (int v : p.A0) {
        s.in_ap[v] = 1;
        s.in_v0[v] = 1;
    }
    for (int v : p.B0) {
        s.in_bp[v] = 1;
        s.in_v0[v] = 1;
    }
    return s;
}

int count_ab_paths(const std::vector<std::vector<int>>& paths, const SideInfo& s) {
    int cnt = 0;
    for (const auto& path : paths)
        if (path.size() >= 2) {
            bool fa = s.in_a[path.front()], ba = s.in_a[path.back()];
            bool fb = s.in_b[path.front()], bb = s.in_b[path.back()];
            if ((fa && bb) || (fb && ba)) ++cnt;
        }
    return cnt;
}

}  // namespace

Diagnostics validate_es(const EdgeList& j, const BiPartition& p, int n, double eps0) {
    Diagnostics d;
    p.validate(n);
    auto s = side_info(p, n);
    std::vector<std::vector<int>> paths;
    try {
        paths = path_components(n, j);
    } catch (const domain_error& e) {
        d.ok = false;
        d.violations.push_back(std::string("EC1: ") + e.what());
        return d;
    }
    std::vector<int> deg(n, 0);
    long long e_a = 0, e_b = 0, e_cross = 0;
    for (auto [u, v] : j) {
        ++deg[u];
        ++deg[v];
        if (s.in_a[u] && s.in_a[v]) ++e_a;
        if (s.in_b[u] && s.in_b[v]) ++e_b;
        if (s.in_ap[u] != s.in_ap[v]) ++e_cross;
    }
    for (int v = 0; v < n; ++v) {
        if (s.in_v0[v] && deg[v] != 2) {
            d.ok = false;
            d.violations.push_back("EC2: V0 vertex " + std::to_string(v) + " has degree " +
                                   std::to_string(deg[v]));
        }
        if (!s.in_v0[v] && deg[v] > 1) {
            d.ok = false;
            d.violations.push_back("EC2: vertex " + std::to_string(v) +
                                   " outside V0 has degree above 1");
        }
    }
    if (e_a != 0 || e_b != 0) {
        d.ok = false;
        d.violations.push_back("EC3: edges inside A or inside B");
    }
    d.ab_paths = count_ab_paths(paths, s);
    if (d.ab_paths > 0 && d.ab_paths % 2 == 0) {
        d.kind = ESKind::HES;
    } else if (e_cross == 0) {
        d.kind = ESKind::MES;
    } else {
        d.ok = false;
        d.violations.push_back("ES2: " + std::to_string(d.ab_paths) +
                               " AB-paths (odd or zero) with A'B'-edges present");
    }
    if (static_cast<double>(d.ab_paths) > std::sqrt(eps0) * n) {
        d.ok = false;
        d.violations.push_back("ES3: more than sqrt(eps0) n AB-paths");
    }
    if (!d.ok) d.kind.reset();
    return d;
}

Diagnostics validate_bes(const EdgeList& j, const structure::SchemePartition& sp,
                         std::array<int, 4> locality, double eps0) {
    Diagnostics d;
    int n = static_cast<int>(sp.A0.size() + sp.B0.size());
    for (const auto& c : sp.A) n += static_cast<int>(c.size());
    for (const auto& c : sp.B) n += static_cast<int>(c.size());
    auto [i1, i2, i3, i4] = locality;

    std::vector<char> allowed(n, 0), in_v0(n, 0), in_a(n, 0), in_b(n, 0);
    for (int v : sp.A0) allowed[v] = in_v0[v] = 1;
    for (int v : sp.B0) allowed[v] = in_v0[v] = 1;
    for (int i = 0; i < sp.K; ++i) {
        for (int v : sp.A[i]) in_a[v] = 1;
        for (int v : sp.B[i]) in_b[v] = 1;
    }
    std::vector<char> in_c1(n, 0), in_c2(n, 0), in_c3(n, 0), in_c4(n, 0);
    for (int v : sp.A[i1]) allowed[v] = in_c1[v] = 1;
    for (int v : sp.A[i2]) allowed[v] = in_c2[v] = 1;
    for (int v : sp.B[i3]) allowed[v] = in_c3[v] = 1;
    for (int v : sp.B[i4]) allowed[v] = in_c4[v] = 1;

    std::vector<std::vector<int>> paths;
    try {
        paths = path_components(n, j);
    } catch (const domain_error& e) {
        d.ok = false;
        d.violations.push_back(std::string("BES1: ") + e.what());
        return d;
    }
    std::vector<int> deg(n, 0);
    for (auto [u, v] : j) {
        ++deg[u];
        ++deg[v];
        if (!allowed[u] || !allowed[v]) {
            d.ok = false;
            d.violations.push_back("BES1: vertex outside V0 and the four named clusters");
        }
        bool aa = (in_c1[u] && in_c2[v]) || (in_c1[v] && in_c2[u]);
        bool bb = (in_c3[u] && in_c4[v]) || (in_c3[v] && in_c4[u]);
        bool cluster_edge = (in_a[u] || in_b[u]) && (in_a[v] || in_b[v]);
        if (cluster_edge && !aa && !bb) {
            d.ok = false;
            d.violations.push_back("BES2: cluster edge is neither A_i1 A_i2 nor B_i3 B_i4");
        }
    }
    for (int v = 0; v < n; ++v) {
        if (in_v0[v] && deg[v] != 2) {
            d.ok = false;
            d.violations.push_back("BES1: exceptional vertex " + std::to_string(v) +
                                   " is not internal");
        }
        if (!in_v0[v] && deg[v] > 1) {
            d.ok = false;
            d.violations.push_back("BES1: cluster vertex of degree above 1");
        }
    }
    long long covered_a = 0, covered_b = 0;
    for (int v = 0; v < n; ++v) {
        if (deg[v] == 0) continue;
        if (in_a[v]) ++covered_a;
        if (in_b[v]) ++covered_b;
    }
    if (covered_a != covered_b) {
        d.ok = false;
        d.violations.push_back("BES3: covers " + std::to_string(covered_a) + " A-vertices and " +
                               std::to_string(covered_b) + " B-vertices");
    }
    if (static_cast<double>(j.size()) > eps0 * n) {
        d.ok = false;
        d.violations.push_back("BES4: e(J) above eps0 n");
    }
    return d;
}

FictiveSystem fictive(const ExceptionalSystem& j, const BiPartition& p) {
    auto diag = validate_es(j.edges, p, j.n, j.eps0 > 0 ? j.eps0 : 1.0);
    if (!diag.ok) throw contract_error("fictive: invalid exceptional system");
    auto s = side_info(p, j.n);
    auto paths = path_components(j.n, j.edges);

    FictiveSystem f;
    EdgeList ab_edges;  // J*_AB[A,B] as (A-endpoint, B-endpoint)
    EdgeList a_edges, b_edges;
    for (const auto& path : paths) {
        if (path.size() < 2) continue;
        int x = path.front(), y = path.back();
        f.jstar_ab.push_back(make_edge(x, y));
        bool xa = s.in_a[x], ya = s.in_a[y];
        if (xa && !ya) ab_edges.push_back({x, y});
        else if (!xa && ya) ab_edges.push_back({y, x});
        else if (xa && ya) a_edges.push_back(make_edge(x, y));
        else b_edges.push_back(make_edge(x, y));
    }
    std::sort(f.jstar_ab.begin(), f.jstar_ab.end());
    std::sort(ab_edges.begin(), ab_edges.end());  // smallest A-endpoint first
    std::sort(a_edges.begin(), a_edges.end());
    std::sort(b_edges.begin(), b_edges.end());

    int two_l = static_cast<int>(ab_edges.size());
    std::vector<int> xs(two_l), ys(two_l);
    for (int i = 0; i < two_l; ++i) {
        xs[i] = ab_edges[i].first;
        ys[i] = ab_edges[i].second;
    }
    for (int i = 0; i + 1 < two_l; i += 2) f.jstar_a.push_back({xs[i], xs[i + 1]});
    for (auto e : a_edges) f.jstar_a.push_back(e);
    // y_{2i} y_{2i+1} with indices mod 2l: (y2,y3), (y4,y5), ..., (y_{2l}, y1)
    for (int i = 1; i + 1 < two_l; i += 2) f.jstar_b.push_back({ys[i], ys[i + 1]});
    if (two_l >= 2) f.jstar_b.push_back({ys[two_l - 1], ys[0]});
    for (auto e : b_edges) f.jstar_b.push_back(e);
    f.visit_a = xs;
    for (int i = 1; i < two_l; ++i) f.visit_b.push_back(ys[i]);
    if (two_l >= 1) f.visit_b.push_back(ys[0]);
    return f;
}

FictiveSystem fictive_balanced(const EdgeList& j, const BiPartition& p) {
    int n = p.total();
    auto s = side_info(p, n);
    auto paths = path_components(n, j);
    EdgeList aa, bb, ab;
    for (const auto& path : paths) {
        if (path.size() < 2) continue;
        int x = path.front(), y = path.back();
        bool xa = s.in_a[x], ya = s.in_a[y];
        if (xa && ya) aa.push_back(make_edge(x, y));
        else if (!xa && !ya) bb.push_back(make_edge(x, y));
        else ab.push_back(xa ? Edge{x, y} : Edge{y, x});
    }
    if (aa.size() != bb.size())
        throw contract_error("fictive_balanced: unequal A- and B-internal fictive edges");
    std::sort(aa.begin(), aa.end());
    std::sort(bb.begin(), bb.end());
    std::sort(ab.begin(), ab.end());
    FictiveSystem f;
    f.bipartite = true;
    for (auto e : aa) f.jstar_ab.push_back(e);
    for (auto e : bb) f.jstar_ab.push_back(e);
    for (auto [x, y] : ab) f.jstar_ab.push_back(make_edge(x, y));
    std::sort(f.jstar_ab.begin(), f.jstar_ab.end());
    std::vector<int> xs, ys;
    for (auto [u, v] : aa) {
        xs.push_back(u);
        xs.push_back(v);
    }
    for (auto [u, v] : bb) {
        ys.push_back(u);
        ys.push_back(v);
    }
    for (auto [x, y] : ab) {
        xs.push_back(x);
        ys.push_back(y);
    }
    for (size_t i = 0; i < xs.size(); ++i) {
        f.jstar.push_back({xs[i], ys[i]});
        f.visit_ab.push_back(xs[i]);
        f.visit_ab.push_back(ys[i]);
    }
    return f;
}

namespace {

// True iff seq appears in cyclic order on the cycle (some orientation).
bool visits_in_cyclic_order(const std::vector<int>& cycle, const std::vector<int>& seq) {
    if (seq.size() <= 2) return true;
    int top = *std::max_element(cycle.begin(), cycle.end());
    std::vector<int> pos(top + 1, -1);
    int k = static_cast<int>(cycle.size());
    for (int i = 0; i < k; ++i) pos[cycle[i]] = i;
    for (int dir : {1, -1}) {
        std::vector<int> q;
        bool present = true;
        for (int v : seq) {
            if (v > top || pos[v] < 0) {
                present = false;
                break;
            }
            q.push_back(dir == 1 ? pos[v] : (k - pos[v]) % k);
        }
        if (!present) return false;
        int descents = 0;
        for (size_t i = 0; i < q.size(); ++i)
            if (q[i] > q[(i + 1) % q.size()]) ++descents;
        if (descents <= 1) return true;
    }
    return false;
}

bool cycle_contains_edges(const std::vector<int>& cycle, const std::vector<Edge>& edges) {
    std::set<Edge> ce;
    int k = static_cast<int>(cycle.size());
    for (int i = 0; i < k; ++i) ce.insert(make_edge(cycle[i], cycle[(i + 1) % k]));
    for (auto [u, v] : edges)
        if (!ce.count(make_edge(u, v))) return false;
    return true;
}

}  // namespace

bool is_consistent(const std::vector<int>& cycle, const FictiveSystem& f, char side) {
    const auto& fict = side == 'A' ? f.jstar_a : f.jstar_b;
    const auto& visit = side == 'A' ? f.visit_a : f.visit_b;
    std::vector<Edge> edges;
    for (auto [u, v] : fict) edges.push_back(make_edge(u, v));
    if (!cycle_contains_edges(cycle, edges)) return false;
    return visits_in_cyclic_order(cycle, visit);
}

bool is_consistent_bipartite(const std::vector<int>& cycle, const FictiveSystem& f) {
    std::vector<Edge> edges;
    for (auto [u, v] : f.jstar) edges.push_back(make_edge(u, v));
    if (!cycle_contains_edges(cycle, edges)) return false;
    return visits_in_cyclic_order(cycle, f.visit_ab);
}

Graph splice(const std::vector<int>& c_a, const std::vector<int>& c_b,
             const ExceptionalSystem& j, const BiPartition& p) {
    auto f = fictive(j, p);
    if (!is_consistent(c_a, f, 'A')) throw contract_error("splice: C_A not consistent with J*_A");
    if (!is_consistent(c_b, f, 'B')) throw contract_error("splice: C_B not consistent with J*_B");
    std::set<Edge> edges;
    auto add_cycle = [&](const std::vector<int>& c) {
        int k = static_cast<int>(c.size());
        for (int i = 0; i < k; ++i) edges.insert(make_edge(c[i], c[(i + 1) % k]));
    };
    add_cycle(c_a);
    add_cycle(c_b);
    for (auto [u, v] : f.jstar_a) edges.erase(make_edge(u, v));
    for (auto [u, v] : f.jstar_b) edges.erase(make_edge(u, v));
    for (auto [u, v] : j.edges) {
        if (edges.count(make_edge(u, v)))
            throw contract_error("splice: J edge collides with a cycle edge");
        edges.insert(make_edge(u, v));
    }
    Graph out(j.n);
    for (auto [u, v] : edges) out.add_edge(u, v);
    return out;
}

namespace {

std::vector<std::vector<int>> cycle_decomposition_2regular(const Graph& g) {
    std::vector<char> seen(g.n(), 0);
    std::vector<std::vector<int>> cycles;
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s] || g.degree(s) == 0) continue;
        if (g.degree(s) != 2) throw contract_error("expected a 2-regular graph");
        std::vector<int> cyc = {s};
        seen[s] = 1;
        int prev = -1, cur = s;
        for (;;) {
            int nxt = -1;
            for (int w : g.neighbors(cur))
                if (w != prev) {
                    nxt = w;
                    break;
                }
            if (nxt == s || nxt < 0) break;
            cyc.push_back(nxt);
            seen[nxt] = 1;
            prev = cur;
            cur = nxt;
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

}  // namespace

std::pair<EdgeList, EdgeList> mes_matchings(const Graph& spliced, const BiPartition&) {
    auto cycles = cycle_decomposition_2regular(spliced);
    if (cycles.size() != 2) throw contract_error("mes_matchings: expected exactly two cycles");
    EdgeList m1, m2;
    for (auto& cyc : cycles) {
        if (cyc.size() % 2 != 0)
            throw contract_error("mes_matchings: odd cycle cannot split into matchings");
        auto it = std::min_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), it, cyc.end());
        int k = static_cast<int>(cyc.size());
        for (int i = 0; i < k; ++i)
            (i % 2 == 0 ? m1 : m2).push_back(make_edge(cyc[i], cyc[(i + 1) % k]));
    }
    std::sort(m1.begin(), m1.end());
    std::sort(m2.begin(), m2.end());
    return {m1, m2};
}

Graph splice_bipartite(const std::vector<int>& cycle, const EdgeList& j, const BiPartition& p) {
    auto f = fictive_balanced(j, p);
    if (!is_consistent_bipartite(cycle, f))
        throw contract_error("splice_bipartite: cycle not consistent with J*");
    std::set<Edge> edges;
    int k = static_cast<int>(cycle.size());
    for (int i = 0; i < k; ++i) edges.insert(make_edge(cycle[i], cycle[(i + 1) % k]));
    for (auto [u, v] : f.jstar) edges.erase(make_edge(u, v));
    for (auto [u, v] : j) {
        if (edges.count(make_edge(u, v)))
            throw contract_error("splice_bipartite: J edge collides with a cycle edge");
        edges.insert(make_edge(u, v));
    }
    Graph out(p.total());
    for (auto [u, v] : edges) out.add_edge(u, v);
    return out;
}

ExceptionalSystem extend_candidate(const EdgeList& f, const Graph& g, const BiPartition& p,
                                   double eps0) {
    int n = g.n();
    p.validate(n);
    auto s = side_info(p, n);
    auto paths = path_components(n, f);
    std::vector<int> deg(n, 0);
    long long cross = 0;
    for (auto [u, v] : f) {
        ++deg[u];
        ++deg[v];
        if ((s.in_a[u] && s.in_a[v]) || (s.in_b[u] && s.in_b[v]))
            throw domain_error("extend_candidate: candidate has edges inside A or B");
        if (s.in_ap[u] != s.in_ap[v]) ++cross;
    }
    for (int v = 0; v < n; ++v)
        if (!s.in_v0[v] && deg[v] > 1)
            throw domain_error("extend_candidate: non-exceptional vertex of degree above 1");
    int b_f = 0;  // maximal paths connecting A' to B'
    for (const auto& path : paths) {
        if (path.size() < 2) continue;
        if (s.in_ap[path.front()] != s.in_ap[path.back()]) ++b_f;
    }
    bool hesc = b_f > 0 && b_f % 2 == 0;
    if (!hesc && cross != 0)
        throw domain_error("extend_candidate: neither HESC (even positive connections) nor MESC");

    std::vector<char> used(n, 0);
    for (auto [u, v] : f) used[u] = used[v] = 1;
    EdgeList out = f;
    auto grow = [&](const std::vector<int>& zero_side, const std::vector<char>& target) {
        for (int v : zero_side) {
            int need = 2 - deg[v];
            for (int w : g.neighbors(v)) {
                if (need == 0) break;
                if (!target[w] || used[w]) continue;
                out.push_back(make_edge(v, w));
                used[w] = 1;
                ++deg[v];
                --need;
            }
            if (need > 0)
                throw infeasible_error("extend_candidate: vertex " + std::to_string(v) +
                                       " lacks fresh neighbours");
        }
    };
    grow(p.A0, s.in_a);
    grow(p.B0, s.in_b);

    ExceptionalSystem j;
    j.n = n;
    j.edges = std::move(out);
    j.eps0 = eps0;
    j.kind = hesc ? ESKind::HES : ESKind::MES;
    auto diag = validate_es(j.edges, p, n, eps0);
    if (!diag.ok || !diag.kind || *diag.kind != j.kind)
        throw contract_error("extend_candidate produced an invalid exceptional system");
    return j;
}

bool two_balanced_by_counts(const EdgeList& q, const BiPartition& p, int n) {
    auto s = side_info(p, n);
    std::vector<int> deg(n, 0);
    long long e_ap = 0, e_bp = 0;
    for (auto [u, v] : q) {
        ++deg[u];
        ++deg[v];
        if (s.in_ap[u] && s.in_ap[v]) ++e_ap;
        if (s.in_bp[u] && s.in_bp[v]) ++e_bp;
    }
    for (int v = 0; v < n; ++v)
        if (s.in_v0[v] && deg[v] != 2) return false;
    return e_ap - e_bp ==
           static_cast<long long>(p.A0.size()) - static_cast<long long>(p.B0.size());
}

bool two_balanced_by_endpoints(const EdgeList& q, const BiPartition& p, int n) {
    auto s = side_info(p, n);
    std::vector<std::vector<int>> paths;
    try {
        paths = path_components(n, q);
    } catch (const domain_error&) {
        return false;
    }
    std::vector<int> deg(n, 0);
    for (auto [u, v] : q) {
        ++deg[u];
        ++deg[v];
    }
    for (int v = 0; v < n; ++v)
        if (s.in_v0[v] && deg[v] != 2) return false;
    long long ends_a = 0, ends_b = 0;
    for (const auto& path : paths) {
        if (path.size() < 2) continue;
        for (int endpoint : {path.front(), path.back()}) {
            if (s.in_v0[endpoint]) return false;
            if (s.in_a[endpoint]) ++ends_a;
            else ++ends_b;
        }
    }
    return ends_a == ends_b;
}

std::optional<std::vector<int>> hamilton_through(const Graph& allowed, const EdgeList& forced,
                                                 std::uint64_t seed, long long node_budget) {
    int n = allowed.n();
    std::vector<std::vector<int>> fadj(n);
    for (auto [u, v] : forced) {
        fadj[u].push_back(v);
        fadj[v].push_back(u);
        if (fadj[u].size() > 2 || fadj[v].size() > 2)
            throw domain_error("hamilton_through: forced degree above 2");
    }
    path_components(n, forced);  // throws on a forced cycle

    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> order(n);
    for (int v = 0; v < n; ++v) {
        order[v] = allowed.neighbors(v);
        std::shuffle(order[v].begin(), order[v].end(), rng);
    }
    std::set<Edge> forced_set(forced.begin(), forced.end());

    int start = 0;
    if (!forced.empty()) {
        start = n;
        for (auto [u, v] : forced) start = std::min({start, u, v});
    }

    std::vector<int> path = {start};
    std::vector<char> on_path(n, 0);
    on_path[start] = 1;
    long long nodes = 0;

    std::function<bool()> dfs = [&]() -> bool {
        if (++nodes > node_budget)
            throw infeasible_error("hamilton_through: search budget exhausted");
        int v = path.back();
        int prev = path.size() >= 2 ? path[path.size() - 2] : -1;
        if (static_cast<int>(path.size()) == n) {
            if (!allowed.has_edge(v, start) && !forced_set.count(make_edge(v, start))) return false;
            std::set<Edge> ce;
            for (int i = 0; i < n; ++i) ce.insert(make_edge(path[i], path[(i + 1) % n]));
            for (auto e : forced_set)
                if (!ce.count(e)) return false;
            return true;
        }
        std::vector<int> musts;
        for (int w : fadj[v]) {
            if (w == prev) continue;
            if (on_path[w]) return false;  // pending forced edge can no longer be used
            musts.push_back(w);
        }
        if (musts.size() > 1) return false;
        const std::vector<int>& cand = musts.empty() ? order[v] : musts;
        for (int w : cand) {
            if (on_path[w]) continue;
            on_path[w] = 1;
            path.push_back(w);
            if (dfs()) return true;
            path.pop_back();
            on_path[w] = 0;
        }
        return false;
    };
    if (dfs()) return path;
    return std::nullopt;
}

CoverResult cover_a0b0(const Graph& f, const Graph& g, const structure::Framework& wf,
                       const ToleranceConfig& cfg, std::uint64_t seed) {
    (void)cfg;
    int n = f.n();
    BiPartition p = wf.partition;
    if (p.A0.size() < p.B0.size()) {  // the balancing matchings live on the bigger side
        std::swap(p.A, p.B);
        std::swap(p.A0, p.B0);
    }
    auto s = side_info(p, n);
    long long a = static_cast<long long>(p.A0.size());
    long long b = static_cast<long long>(p.B0.size());

    CoverResult res;
    res.residual_f = f;
    res.residual_g = g;

    Graph cross0(n);
    for (int u : p.A0)
        for (int w : g.neighbors(u))
            if (s.in_b0[w]) cross0.add_edge(u, w);
    if (cross0.m() == 0) return res;

    std::vector<EdgeList> m_prime;
    for (auto& part : classic::matching_decomposition(cross0, cross0.max_degree() + 1))
        if (!part.empty()) m_prime.push_back(std::move(part));
    int r_star = static_cast<int>(m_prime.size());

    std::vector<EdgeList> m_second(r_star);
    if (a > b) {
        Graph inside(n);
        auto ap_mask = p.mask_a_prime(n);
        for (auto [u, v] : g.edges())
            if (ap_mask[u] && ap_mask[v]) inside.add_edge(u, v);
        auto parts = classic::matching_decomposition(inside, inside.max_degree() + 1);
        std::sort(parts.begin(), parts.end(),
                  [](const EdgeList& x, const EdgeList& y) { return x.size() > y.size(); });
        int filled = 0;
        for (auto& part : parts) {
            if (filled == r_star) break;
            if (static_cast<long long>(part.size()) >= a - b) {
                part.resize(a - b);
                m_second[filled++] = std::move(part);
            }
        }
        if (filled < r_star)
            throw infeasible_error("cover_a0b0: not enough balancing matchings inside A'");
    }

    for (int i = 0; i < r_star; ++i) {
        EdgeList q = m_prime[i];
        q.insert(q.end(), m_second[i].begin(), m_second[i].end());
        std::vector<int> deg(n, 0);
        std::vector<char> used(n, 0);
        for (auto [u, v] : q) {
            ++deg[u];
            ++deg[v];
            if (!s.in_v0[u]) used[u] = 1;
            if (!s.in_v0[v]) used[v] = 1;
        }
        auto grow = [&](const std::vector<int>& side, const std::vector<char>& target) {
            for (int v : side) {
                int need = 2 - deg[v];
                for (int w : res.residual_g.neighbors(v)) {
                    if (need == 0) break;
                    if (!target[w] || used[w]) continue;
                    q.push_back(make_edge(v, w));
                    used[w] = 1;
                    ++deg[v];
                    --need;
                }
                if (need > 0)
                    throw infeasible_error("cover_a0b0: cannot complete the path system at vertex " +
                                           std::to_string(v));
            }
        };
        grow(p.A0, s.in_b);  // A0 vertices get B-neighbours, B0 vertices A-neighbours
        grow(p.B0, s.in_a);
        if (!two_balanced_by_counts(q, p, n) || !two_balanced_by_endpoints(q, p, n))
            throw contract_error("cover_a0b0: path system is not 2-balanced");

        Graph ab_allowed(n);
        for (auto [u, v] : res.residual_f.edges()) {
            if ((s.in_a[u] && s.in_b[v]) || (s.in_b[u] && s.in_a[v])) ab_allowed.add_edge(u, v);
        }
        auto cyc = hamilton_through(ab_allowed, q, seed + i, 4'000'000);
        if (!cyc)
            throw infeasible_error("cover_a0b0: Hamilton completion failed for path system " +
                                   std::to_string(i));
        for (auto [u, v] : cycle_edges(*cyc)) {
            res.residual_f.remove_edge(u, v);
            res.residual_g.remove_edge(u, v);
        }
        res.cycles.push_back(*cyc);
    }
    if (edges_between(res.residual_g, p.A0, p.B0) != 0)
        throw contract_error("cover_a0b0: A0B0-edges left uncovered");
    return res;
}

std::vector<std::vector<int>> assign_degrees(const std::vector<int>& a, const std::vector<int>& c,
                                             double eta, double lower_frac) {
    int q = static_cast<int>(a.size());
    int r = static_cast<int>(c.size());
    if (q < 1 || q > 3) throw domain_error("assign_degrees: need 1 <= q <= 3");
    if (r < 1) throw domain_error("assign_degrees: need r >= 1");
    double eta_r_real = eta * r;
    int eta_r = static_cast<int>(std::llround(eta_r_real));
    if (std::abs(eta_r_real - eta_r) > 1e-9 || eta < 0 || eta >= 1)
        throw domain_error("assign_degrees: eta r must be integral with 0 <= eta < 1");
    for (int j = 0; j < r; ++j) {
        if (c[j] < 0 || c[j] > 2) throw domain_error("assign_degrees: c_j outside {0,1,2}");
        if (j + 1 < r && c[j] < c[j + 1]) throw domain_error("assign_degrees: c not non-increasing");
    }
    if (c.front() - c.back() > 1) throw domain_error("assign_degrees: c spread above 1");
    long long total =
        std::accumulate(a.begin(), a.end(), 0LL) + std::accumulate(c.begin(), c.end(), 0LL);
    if (total != 2LL * (r + eta_r))
        throw domain_error("assign_degrees: sum a_i + sum c_j != 2 (1 + eta) r");
    double lo = lower_frac * r;
    for (int i = 0; i < std::min(q, 2); ++i)
        if (a[i] < lo - 1e-9 || a[i] > r)
            throw domain_error("assign_degrees: a_" + std::to_string(i + 1) +
                               " outside [lower_frac r, r]");
    if (q == 3 && (a[2] < lo - 1e-9 || a[2] > 2 * lo + 1e-9))
        throw domain_error("assign_degrees: a_3 outside [lower_frac r, 2 lower_frac r]");

    std::vector<std::vector<int>> m(q, std::vector<int>(r, 0));
    std::vector<int> level(c.begin(), c.end());

    for (int i = 0; i < q; ++i) {
        long long sum_level = std::accumulate(level.begin(), level.end(), 0LL);
        if (sum_level >= 2LL * r) {
            // Case 1: fill columns greedily up to total 4
            int left = a[i];
            for (int j = 0; j < r && left > 0; ++j) {
                int add = std::min({2, 4 - level[j], left});
                m[i][j] = add;
                left -= add;
            }
            if (left != 0) throw contract_error("assign_degrees: case 1 could not place a_i");
        } else if (sum_level >= 2LL * r - a[i]) {
            // Case 2: ones on the level-1 columns, the rest packed as twos
            int rp = 0;
            while (rp < r && level[rp] == 2) ++rp;
            for (int j = rp; j < r; ++j) m[i][j] = 1;
            int rest = a[i] - (r - rp);
            if (rest < 0 || rest > 2 * rp)
                throw contract_error("assign_degrees: case 2 bounds violated");
            for (int j = 0; j < rp && rest > 0; ++j) {
                int add = std::min(2, rest);
                m[i][j] = add;
                rest -= add;
            }
        } else {
            // Case 3: zero/one entries keeping the level sequence flat
            int lo_val = level[r - 1];
            int t = 0;
            while (t < r && level[r - 1 - t] == lo_val) ++t;
            int ones = a[i];
            if (ones > r) throw contract_error("assign_degrees: case 3 with a_i above r");
            if (ones <= t) {
                for (int j = r - t; j < r - t + ones; ++j) m[i][j] = 1;
            } else {
                for (int j = r - t; j < r; ++j) m[i][j] = 1;
                for (int j = 0; j < ones - t; ++j) m[i][j] = 1;
            }
        }
        for (int j = 0; j < r; ++j) level[j] += m[i][j];
        for (int j = 0; j + 1 < r; ++j)
            if (level[j] < level[j + 1])
                throw contract_error("assign_degrees: levels lost monotonicity");
    }
    for (int i = 0; i < q; ++i) {
        long long row = std::accumulate(m[i].begin(), m[i].end(), 0LL);
        if (row != a[i]) throw contract_error("assign_degrees: row sum mismatch");
    }
    for (int j = 0; j < r; ++j) {
        int col = c[j];
        int units = 0;
        for (int i = 0; i < q; ++i) {
            col += m[i][j];
            units += m[i][j] == 1;
        }
        if (col != (j < eta_r ? 4 : 2)) throw contract_error("assign_degrees: column sum mismatch");
        if (units < 2 - c[j]) throw contract_error("assign_degrees: not enough unit entries");
    }
    return m;
}

}  // namespace exceptional
}  // namespace hamdec
