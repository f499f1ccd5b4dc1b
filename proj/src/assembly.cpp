#include "hamdec/assembly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "hamdec/classic.hpp"
#include "hamdec/matching.hpp"

namespace hamdec {
namespace assembly {

namespace {

std::vector<int> cluster_index_of(const CyclicSystem& sys) {
    std::vector<int> idx(sys.n, -1);
    for (int i = 0; i < sys.cluster_count(); ++i)
        for (int v : sys.clusters[i]) idx[v] = i;
    return idx;
}

std::vector<int> trace_single_cycle(const Graph& g, int start) {
    std::vector<int> seq = {start};
    int prev = -1, cur = start;
    for (;;) {
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

bool check_winding_degrees(const CyclicSystem& sys, double eps, std::string* complaint) {
    int k = sys.cluster_count();
    for (int i = 0; i < k; ++i) {
        int next = (i + 1) % k;
        double m = static_cast<double>(sys.clusters[next].size());
        std::vector<char> nm(sys.n, 0);
        for (int v : sys.clusters[next]) nm[v] = 1;
        for (int u : sys.clusters[i]) {
            int d = 0;
            for (int w : sys.g.out_neighbors(u)) d += nm[w];
            if (d < (1 - eps) * m - 1e-9) {
                if (complaint)
                    *complaint = "vertex " + std::to_string(u) + " has only " + std::to_string(d) +
                                 " winding arcs into cluster " + std::to_string(next);
                return false;
            }
        }
    }
    return true;
}

BuiltSystems build_cyclic_systems(const Graph& g, const structure::SchemePartition& sp, Mode mode,
                                  std::size_t num_js, const ToleranceConfig& cfg) {
    BuiltSystems out;
    out.mode = mode;
    out.free_edges = g;  // all stages draw from this shared pool
    int K = sp.K;

    auto fill_system = [&](const std::vector<std::vector<int>>& clusters_in_order) {
        CyclicSystem sys;
        sys.n = g.n();
        sys.g = Digraph(g.n());
        sys.clusters = clusters_in_order;
        auto cidx = cluster_index_of(sys);
        int k = sys.cluster_count();
        for (int i = 0; i < k; ++i) {
            int next = (i + 1) % k;
            for (int u : sys.clusters[i])
                for (int w : g.neighbors(u))
                    if (cidx[w] == next) sys.g.add_arc(u, w);
        }
        std::string complaint;
        if (!check_winding_degrees(sys, cfg.eps2, &complaint))
            throw tolerance_error("cyclic system degree check failed: " + complaint, 0);
        return sys;
    };

    int num_systems = 0;
    if (mode == Mode::two_cliques) {
        if (K < 3 || K % 2 == 0) throw domain_error("two-cliques systems need odd K >= 3 (Walecki)");
        num_systems = (K - 1) / 2;
        auto dec = classic::walecki(K);
        for (int j = 0; j < num_systems; ++j) {
            for (int side = 0; side < 2; ++side) {
                const auto& cl = side == 0 ? sp.A : sp.B;
                std::vector<std::vector<int>> order;
                for (int idx : dec.cycles[j]) order.push_back(cl[idx]);
                (side == 0 ? out.systems_a : out.systems_b).push_back(fill_system(order));
            }
        }
    } else {
        if (K < 2 || K % 2 != 0)
            throw domain_error("bipartite systems need even K >= 2 (Auerbach-Laskar)");
        num_systems = K / 2;
        auto dec = classic::bipartite_ham_decompose(K);  // classes 0..K-1 and K..2K-1
        for (int j = 0; j < num_systems; ++j) {
            std::vector<std::vector<int>> order;
            for (int idx : dec.cycles[j])
                order.push_back(idx < K ? sp.A[idx] : sp.B[idx - K]);
            out.systems_a.push_back(fill_system(order));
        }
    }
    out.assigned.assign(num_systems, {});
    for (std::size_t s = 0; s < num_js; ++s)
        out.assigned[s % static_cast<std::size_t>(num_systems)].push_back(s);
    return out;
}

Extension balanced_extension(const std::vector<OrderedMatching>& ms,
                             const std::vector<int>& home_cluster, const CyclicSystem& sys,
                             Graph& pool, Mode mode) {
    if (ms.size() != home_cluster.size())
        throw domain_error("balanced_extension: one home cluster per matching");
    Extension ext;
    int k = sys.cluster_count();
    auto cidx = cluster_index_of(sys);

    for (std::size_t s = 0; s < ms.size(); ++s) {
        PathSequence ps;
        std::vector<char> touched(sys.n, 0);
        for (auto [u, v] : ms[s].arcs) {
            ps.arcs.push_back({u, v});
            touched[u] = touched[v] = 1;
        }
        std::vector<int> marks;
        if (mode == Mode::two_cliques) {
            int i = home_cluster[s];
            int prev = (i - 1 + k) % k, next = (i + 1) % k;
            for (auto [u, v] : ms[s].arcs) {
                (void)u;
                marks.push_back(v);
                bool placed = false;
                for (int x : sys.clusters[prev]) {
                    if (touched[x]) continue;
                    for (int y : sys.clusters[next]) {
                        if (touched[y] || !pool.has_edge(x, y)) continue;
                        pool.remove_edge(x, y);
                        ps.arcs.push_back({x, y});
                        touched[x] = touched[y] = 1;
                        placed = true;
                        break;
                    }
                    if (placed) break;
                }
                if (!placed)
                    throw infeasible_error("balanced_extension: reserve pair (" +
                                           std::to_string(prev) + "," + std::to_string(next) +
                                           ") exhausted");
            }
        } else {
            int i1 = home_cluster[s];
            for (auto [x, y] : ms[s].arcs) {
                (void)x;
                bool placed = false;
                for (int a : sys.clusters[i1]) {
                    if (touched[a] || !pool.has_edge(y, a)) continue;
                    pool.remove_edge(y, a);
                    ps.arcs.push_back({y, a});
                    touched[a] = 1;
                    marks.push_back(a);
                    placed = true;
                    break;
                }
                if (!placed)
                    throw infeasible_error("balanced_extension: no fresh continuation into the home cluster");
            }
            // one compensating arc per non-winding arc keeps local balance:
            // an arc V_iu -> V_iv is cancelled by an arc V_{iv-1} -> V_{iu+1}
            std::vector<std::pair<int, int>> base = ps.arcs;
            for (auto [u, v] : base) {
                int iu = cidx[u], iv = cidx[v];
                int from = (iv - 1 + k) % k, to = (iu + 1) % k;
                if (from == iu && to == iv) continue;  // the arc winds already
                bool placed = false;
                for (int x : sys.clusters[from]) {
                    if (touched[x]) continue;
                    for (int y : sys.clusters[to]) {
                        if (touched[y] || !pool.has_edge(x, y)) continue;
                        pool.remove_edge(x, y);
                        ps.arcs.push_back({x, y});
                        touched[x] = touched[y] = 1;
                        placed = true;
                        break;
                    }
                    if (placed) break;
                }
                if (!placed)
                    throw infeasible_error("balanced_extension: compensator pool exhausted");
            }
        }
        ext.ps.push_back(std::move(ps));
        ext.final_cluster.push_back(home_cluster[s]);
        ext.marks.push_back(std::move(marks));
    }
    return ext;
}

namespace {

struct PsDegrees {
    std::vector<char> out_used, in_used;
};

PsDegrees ps_degrees(int n, const PathSequence& ps) {
    PsDegrees d;
    d.out_used.assign(n, 0);
    d.in_used.assign(n, 0);
    for (auto [u, v] : ps.arcs) {
        if (d.out_used[u] || d.in_used[v])
            throw contract_error("path sequence has colliding arcs");
        d.out_used[u] = 1;
        d.in_used[v] = 1;
    }
    return d;
}

}  // namespace

std::vector<Digraph> extend_to_one_factors(CyclicSystem& sys, const Extension& ext, Graph& pool) {
    int q = static_cast<int>(ext.ps.size());
    int k = sys.cluster_count();
    int n = sys.n;
    std::vector<Digraph> fs(q, Digraph(n));
    std::vector<PsDegrees> degs;
    degs.reserve(q);
    for (const auto& ps : ext.ps) degs.push_back(ps_degrees(n, ps));
    for (int s = 0; s < q; ++s)
        for (auto [u, v] : ext.ps[s].arcs) fs[s].add_arc(u, v);

    for (int i = 0; i < k; ++i) {
        int next = (i + 1) % k;
        const auto& vi = sys.clusters[i];
        const auto& vn = sys.clusters[next];

        auto pm_for = [&](int s, const Graph& from) {
            std::vector<int> left, right;
            for (int u : vi)
                if (!degs[s].out_used[u]) left.push_back(u);
            for (int w : vn)
                if (!degs[s].in_used[w]) right.push_back(w);
            if (left.size() != right.size())
                throw contract_error("extend_to_one_factors: unbalanced free cluster sides");
            std::vector<int> rpos(n, -1);
            for (int t = 0; t < static_cast<int>(right.size()); ++t) rpos[right[t]] = t;
            std::vector<std::vector<int>> adj(left.size());
            for (int t = 0; t < static_cast<int>(left.size()); ++t)
                for (int w : from.neighbors(left[t]))
                    if (rpos[w] >= 0) adj[t].push_back(rpos[w]);
            auto bm =
                hopcroft_karp(static_cast<int>(left.size()), static_cast<int>(right.size()), adj);
            if (bm.size != static_cast<int>(left.size()))
                throw infeasible_error("extend_to_one_factors: Hall violation on cluster pair (" +
                                       std::to_string(i) + "," + std::to_string(next) + ")");
            EdgeList used;
            for (int t = 0; t < static_cast<int>(left.size()); ++t) {
                int w = right[bm.match_l[t]];
                fs[s].add_arc(left[t], w);
                used.push_back(make_edge(left[t], w));
            }
            return used;
        };

        std::vector<int> touching, untouched;
        for (int s = 0; s < q; ++s) {
            bool t = false;
            for (int u : vi) t = t || degs[s].out_used[u];
            for (int w : vn) t = t || degs[s].in_used[w];
            (t ? touching : untouched).push_back(s);
        }

        auto pair_pool = [&]() {
            Graph avail(n);
            std::vector<char> nm(n, 0);
            for (int w : vn) nm[w] = 1;
            for (int u : vi)
                for (int w : pool.neighbors(u))
                    if (nm[w]) avail.add_edge(u, w);
            return avail;
        };

        for (int s : touching) {
            auto used = pm_for(s, pair_pool());
            for (auto [u, w] : used) pool.remove_edge(u, w);
        }
        if (!untouched.empty()) {
            // untouched tail: one regular subgraph of the right degree, then
            // peel perfect matchings from it
            Graph avail = pair_pool();
            int want = static_cast<int>(untouched.size());
            int mn = n + 1, mx = 0;
            for (int u : vi) {
                mn = std::min(mn, avail.degree(u));
                mx = std::max(mx, avail.degree(u));
            }
            for (int w : vn) {
                mn = std::min(mn, avail.degree(w));
                mx = std::max(mx, avail.degree(w));
            }
            if (mn < want)
                throw infeasible_error("extend_to_one_factors: cluster pair (" + std::to_string(i) +
                                       "," + std::to_string(next) + ") too thin for the tail");
            double m = static_cast<double>(vi.size());
            double mu = 1.0 - static_cast<double>(mx) / m;
            double rho = static_cast<double>(mx - want) / m;
            Graph reg = classic::regular_bipartite_subgraph(avail, vi, vn, mu, rho);
            for (int s : untouched) {
                auto used = pm_for(s, reg);
                for (auto [u, w] : used) {
                    reg.remove_edge(u, w);
                    pool.remove_edge(u, w);
                }
            }
        }
    }
    for (int s = 0; s < q; ++s) {
        for (const auto& c : sys.clusters)
            for (int v : c)
                if (fs[s].out_degree(v) != 1 || fs[s].in_degree(v) != 1)
                    throw contract_error("extend_to_one_factors: vertex " + std::to_string(v) +
                                         " not 1-regular in factor " + std::to_string(s));
    }
    return fs;
}

namespace {

std::vector<std::vector<int>> one_factor_cycles(const Digraph& f) {
    std::vector<char> seen(f.n(), 0);
    std::vector<std::vector<int>> cycles;
    for (int s = 0; s < f.n(); ++s) {
        if (seen[s] || f.out_degree(s) == 0) continue;
        std::vector<int> cyc;
        int cur = s;
        while (!seen[cur]) {
            seen[cur] = 1;
            cyc.push_back(cur);
            cur = f.out_neighbors(cur)[0];
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

// Hamilton cycle of the auxiliary digraph visiting marked nodes in rank
// order; exact backtracking with a seeded arc order.
std::optional<std::vector<int>> aux_ordered_hamilton(int nodes,
                                                     const std::vector<std::vector<int>>& out,
                                                     const std::vector<int>& mark_rank,
                                                     std::uint64_t seed, long long budget) {
    std::vector<std::vector<int>> order = out;
    std::mt19937_64 rng(seed);
    for (auto& o : order) std::shuffle(o.begin(), o.end(), rng);
    int start = 0;
    for (int v = 0; v < nodes; ++v)
        if (mark_rank[v] == 0) start = v;
    std::vector<char> used(nodes, 0);
    std::vector<int> path = {start};
    used[start] = 1;
    int expected = mark_rank[start] == 0 ? 1 : 0;
    long long steps = 0;

    std::function<bool()> dfs = [&]() -> bool {
        if (++steps > budget)
            throw infeasible_error("merge_to_hamilton: auxiliary search budget exhausted");
        int v = path.back();
        if (static_cast<int>(path.size()) == nodes) {
            for (int w : out[v])
                if (w == start) return true;
            return false;
        }
        for (int w : order[v]) {
            if (used[w]) continue;
            int save = expected;
            if (mark_rank[w] >= 0) {
                if (mark_rank[w] != expected) continue;
                ++expected;
            }
            used[w] = 1;
            path.push_back(w);
            if (dfs()) return true;
            path.pop_back();
            used[w] = 0;
            expected = save;
        }
        return false;
    };
    if (dfs()) return path;
    return std::nullopt;
}

}  // namespace

std::vector<int> merge_to_hamilton(const Digraph& f_in, const CyclicSystem& sys, Graph& pool,
                                   int mark_cluster, const std::vector<int>& marks,
                                   std::uint64_t seed, long long budget) {
    Digraph f = f_in;
    int k = sys.cluster_count();
    int n = sys.n;
    auto cidx = cluster_index_of(sys);

    std::vector<int> support;
    for (const auto& c : sys.clusters) support.insert(support.end(), c.begin(), c.end());
    for (int v : support)
        if (f.out_degree(v) != 1 || f.in_degree(v) != 1)
            throw domain_error("merge_to_hamilton: input is not a 1-factor on the clusters");

    auto replace_at = [&](int i, bool ordered) {
        int next = (i + 1) % k;
        std::vector<int> v1;  // tails of the winding matching across edge i
        for (int u : sys.clusters[i])
            if (cidx[f.out_neighbors(u)[0]] == next) v1.push_back(u);
        if (v1.empty())
            throw infeasible_error("merge_to_hamilton: no winding matching at cluster edge " +
                                   std::to_string(i));
        // segment start f(u): walk backwards from u to the first vertex that
        // received its arc across this cluster edge
        std::vector<int> fu(v1.size());
        std::vector<int> node_of(n, -1);
        for (int t = 0; t < static_cast<int>(v1.size()); ++t) {
            int cur = v1[t];
            for (;;) {
                int prev = f.in_neighbors(cur)[0];
                if (cidx[prev] == i && cidx[cur] == next) break;
                cur = prev;
            }
            fu[t] = cur;
            node_of[cur] = t;
        }
        std::vector<std::vector<int>> out(v1.size());
        for (int t = 0; t < static_cast<int>(v1.size()); ++t)
            for (int w : pool.neighbors(v1[t]))
                if (node_of[w] >= 0) out[t].push_back(node_of[w]);
        std::vector<int> mark_rank(v1.size(), -1);
        if (ordered) {
            for (std::size_t r = 0; r < marks.size(); ++r) {
                int x = marks[r];
                int t = -1;
                for (int z = 0; z < static_cast<int>(v1.size()); ++z)
                    if (v1[z] == x) t = z;
                if (t < 0)
                    throw contract_error("merge_to_hamilton: mark is not a winding tail");
                if (mark_rank[t] >= 0)
                    throw infeasible_error("merge_to_hamilton: two marks share a segment");
                mark_rank[t] = static_cast<int>(r);
            }
        }
        auto aux = aux_ordered_hamilton(static_cast<int>(v1.size()), out, mark_rank, seed + i,
                                        budget);
        if (!aux)
            throw infeasible_error("merge_to_hamilton: no auxiliary Hamilton cycle at edge " +
                                   std::to_string(i));
        for (int u : v1) f.remove_arc(u, f.out_neighbors(u)[0]);
        for (std::size_t z = 0; z < aux->size(); ++z) {
            int t = (*aux)[z];
            int tn = (*aux)[(z + 1) % aux->size()];
            pool.remove_edge(v1[t], fu[tn]);
            f.add_arc(v1[t], fu[tn]);
        }
    };

    bool need_order = marks.size() >= 2;  // a single mark is vacuously in order
    bool ordered_done = false;
    for (int guard = 0; guard <= k + 2; ++guard) {
        auto cycles = one_factor_cycles(f);
        if (cycles.size() == 1) break;
        int next = (mark_cluster + 1) % k;
        std::vector<char> crosses(cycles.size(), 0);
        for (std::size_t c = 0; c < cycles.size(); ++c)
            for (std::size_t z = 0; z < cycles[c].size(); ++z) {
                int u = cycles[c][z], w = cycles[c][(z + 1) % cycles[c].size()];
                if (cidx[u] == mark_cluster && cidx[w] == next) crosses[c] = 1;
            }
        if (std::all_of(crosses.begin(), crosses.end(), [](char x) { return x != 0; })) {
            replace_at(mark_cluster, need_order);
            ordered_done = need_order;
            continue;
        }
        int pick = -1;
        for (int i = 0; i < k && pick < 0; ++i) {
            int ni = (i + 1) % k;
            std::set<int> who;
            for (std::size_t c = 0; c < cycles.size(); ++c)
                for (std::size_t z = 0; z < cycles[c].size(); ++z) {
                    int u = cycles[c][z], w = cycles[c][(z + 1) % cycles[c].size()];
                    if (cidx[u] == i && cidx[w] == ni) who.insert(static_cast<int>(c));
                }
            if (who.size() >= 2) pick = i;
        }
        if (pick < 0)
            throw infeasible_error("merge_to_hamilton: disjoint cycles share no cluster edge");
        replace_at(pick, false);
        ordered_done = false;
    }
    if (one_factor_cycles(f).size() != 1)
        throw infeasible_error("merge_to_hamilton: could not reach a single cycle");
    if (need_order && !ordered_done) replace_at(mark_cluster, true);

    auto cycles = one_factor_cycles(f);
    if (cycles.size() != 1 || cycles[0].size() != support.size())
        throw contract_error("merge_to_hamilton: result is not spanning");
    auto cyc = cycles[0];
    if (!marks.empty()) {
        auto it = std::find(cyc.begin(), cyc.end(), marks[0]);
        if (it != cyc.end()) std::rotate(cyc.begin(), it, cyc.end());
    }
    return cyc;
}

namespace {

void trace_line(std::string& trace, const std::string& stage, std::uint64_t seed,
                const std::string& detail) {
    trace += "{\"stage\": \"" + stage + "\", \"seed\": " + std::to_string(seed) + ", " + detail +
             "}\n";
}

}  // namespace

DemoResult approx_decompose_demo(const Graph& g, const structure::SchemePartition& sp,
                                 const std::vector<exceptional::ExceptionalSystem>& js, Mode mode,
                                 const ToleranceConfig& cfg, std::uint64_t seed) {
    if (mode != Mode::two_cliques)
        throw domain_error("approx_decompose_demo: use the bipartite variant for BES inputs");
    DemoResult res;
    if (js.empty()) return res;

    BiPartition p;
    p.A = sp.a_all();
    p.B = sp.b_all();
    p.A0 = sp.A0;
    p.B0 = sp.B0;
    for (const auto& j : js)
        if (j.kind == exceptional::ESKind::MES &&
            ((p.A.size() + p.A0.size()) % 2 != 0 || (p.B.size() + p.B0.size()) % 2 != 0))
            throw domain_error("an MES needs |A'| and |B'| even to yield perfect matchings");

    auto built = build_cyclic_systems(g, sp, mode, js.size(), cfg);
    trace_line(res.trace, "build_cyclic_systems", seed,
               "\"systems\": " + std::to_string(built.systems_a.size()));

    std::vector<exceptional::FictiveSystem> ficts;
    ficts.reserve(js.size());
    for (const auto& j : js) ficts.push_back(exceptional::fictive(j, p));

    auto home_of = [&](const std::vector<Edge>& fict_edges,
                       const std::vector<std::vector<int>>& clusters) {
        if (fict_edges.empty()) return 0;
        int v = fict_edges[0].first;
        for (int i = 0; i < static_cast<int>(clusters.size()); ++i)
            if (std::binary_search(clusters[i].begin(), clusters[i].end(), v)) return i;
        throw contract_error("fictive edge outside every cluster");
    };

    std::set<Edge> all_used;
    for (std::size_t j_sys = 0; j_sys < built.systems_a.size(); ++j_sys) {
        auto& sys_a = built.systems_a[j_sys];
        auto& sys_b = built.systems_b[j_sys];
        const auto& mine = built.assigned[j_sys];
        if (mine.empty()) continue;

        std::vector<OrderedMatching> ms_a, ms_b;
        std::vector<int> home_a, home_b;
        for (std::size_t idx : mine) {
            OrderedMatching ma, mb;
            for (auto [u, v] : ficts[idx].jstar_a) ma.arcs.push_back({u, v});
            for (auto [u, v] : ficts[idx].jstar_b) mb.arcs.push_back({u, v});
            home_a.push_back(home_of(ficts[idx].jstar_a, sys_a.clusters));
            home_b.push_back(home_of(ficts[idx].jstar_b, sys_b.clusters));
            ms_a.push_back(std::move(ma));
            ms_b.push_back(std::move(mb));
        }

        auto ext_a = balanced_extension(ms_a, home_a, sys_a, built.free_edges, mode);
        auto ext_b = balanced_extension(ms_b, home_b, sys_b, built.free_edges, mode);
        trace_line(res.trace, "balanced_extension", seed, "\"system\": " + std::to_string(j_sys));

        auto fs_a = extend_to_one_factors(sys_a, ext_a, built.free_edges);
        auto fs_b = extend_to_one_factors(sys_b, ext_b, built.free_edges);
        trace_line(res.trace, "extend_to_one_factors", seed,
                   "\"factors\": " + std::to_string(fs_a.size() + fs_b.size()));

        for (std::size_t t = 0; t < mine.size(); ++t) {
            auto c_a = merge_to_hamilton(fs_a[t], sys_a, built.free_edges, ext_a.final_cluster[t],
                                         ext_a.marks[t], seed + 101 * t);
            auto c_b = merge_to_hamilton(fs_b[t], sys_b, built.free_edges, ext_b.final_cluster[t],
                                         ext_b.marks[t], seed + 101 * t + 7);
            trace_line(res.trace, "merge_to_hamilton", seed + 101 * t,
                       "\"lengths\": [" + std::to_string(c_a.size()) + ", " +
                           std::to_string(c_b.size()) + "]");

            const auto& j = js[mine[t]];
            auto spliced = exceptional::splice(c_a, c_b, j, p);
            DemoPiece piece;
            piece.j_index = mine[t];
            for (auto e : spliced.edges()) {
                if (!g.has_edge(e.first, e.second))
                    throw contract_error("demo piece uses a non-host edge");
                if (!all_used.insert(e).second)
                    throw contract_error("demo pieces are not edge-disjoint");
            }
            for (auto [u, v] : j.edges)
                if (!spliced.has_edge(u, v))
                    throw contract_error("demo piece lost an edge of its exceptional system");
            if (j.kind == exceptional::ESKind::HES) {
                piece.is_cycle = true;
                auto seq = trace_single_cycle(spliced, 0);
                if (!is_hamilton_cycle(g, seq))
                    throw contract_error("demo HES piece failed Hamilton verification");
                piece.cycle = std::move(seq);
            } else {
                piece.is_cycle = false;
                piece.matchings = exceptional::mes_matchings(spliced, p);
                if (!is_perfect_matching(g, piece.matchings.first) ||
                    !is_perfect_matching(g, piece.matchings.second))
                    throw contract_error("demo MES piece failed matching verification");
            }
            res.pieces.push_back(std::move(piece));
            trace_line(res.trace, "splice", seed, "\"piece\": " + std::to_string(mine[t]));
        }
    }
    return res;
}

DemoResult approx_decompose_demo_bipartite(const Graph& g, const structure::SchemePartition& sp,
                                           const std::vector<EdgeList>& bes,
                                           const ToleranceConfig& cfg, std::uint64_t seed) {
    DemoResult res;
    if (bes.empty()) return res;
    BiPartition p;
    p.A = sp.a_all();
    p.B = sp.b_all();
    p.A0 = sp.A0;
    p.B0 = sp.B0;

    auto built = build_cyclic_systems(g, sp, Mode::bipartite, bes.size(), cfg);
    trace_line(res.trace, "build_cyclic_systems", seed,
               "\"systems\": " + std::to_string(built.systems_a.size()));

    std::vector<exceptional::FictiveSystem> ficts;
    ficts.reserve(bes.size());
    for (const auto& j : bes) ficts.push_back(exceptional::fictive_balanced(j, p));

    std::set<Edge> all_used;
    for (std::size_t j_sys = 0; j_sys < built.systems_a.size(); ++j_sys) {
        auto& sys = built.systems_a[j_sys];
        const auto& mine = built.assigned[j_sys];
        if (mine.empty()) continue;

        std::vector<OrderedMatching> ms;
        std::vector<int> home;
        for (std::size_t idx : mine) {
            OrderedMatching m;
            for (auto [x, y] : ficts[idx].jstar) m.arcs.push_back({x, y});
            ms.push_back(std::move(m));
            int v = ficts[idx].jstar.empty() ? sp.A[0][0] : ficts[idx].jstar[0].first;
            int h = 0;
            for (int i = 0; i < sys.cluster_count(); ++i)
                if (std::binary_search(sys.clusters[i].begin(), sys.clusters[i].end(), v)) h = i;
            home.push_back(h);
        }
        auto ext = balanced_extension(ms, home, sys, built.free_edges, Mode::bipartite);
        trace_line(res.trace, "balanced_extension", seed, "\"system\": " + std::to_string(j_sys));
        auto fs = extend_to_one_factors(sys, ext, built.free_edges);
        trace_line(res.trace, "extend_to_one_factors", seed,
                   "\"factors\": " + std::to_string(fs.size()));

        for (std::size_t t = 0; t < mine.size(); ++t) {
            auto cyc = merge_to_hamilton(fs[t], sys, built.free_edges, ext.final_cluster[t],
                                         ext.marks[t], seed + 131 * t);
            trace_line(res.trace, "merge_to_hamilton", seed + 131 * t,
                       "\"length\": " + std::to_string(cyc.size()));
            auto spliced = exceptional::splice_bipartite(cyc, bes[mine[t]], p);
            DemoPiece piece;
            piece.j_index = mine[t];
            piece.is_cycle = true;
            for (auto e : spliced.edges()) {
                if (!g.has_edge(e.first, e.second))
                    throw contract_error("bipartite demo piece uses a non-host edge");
                if (!all_used.insert(e).second)
                    throw contract_error("bipartite demo pieces are not edge-disjoint");
            }
            for (auto [u, v] : bes[mine[t]])
                if (!spliced.has_edge(u, v))
                    throw contract_error("bipartite demo piece lost an edge of its system");
            auto seq = trace_single_cycle(spliced, 0);
            if (!is_hamilton_cycle(g, seq))
                throw contract_error("bipartite demo piece failed Hamilton verification");
            piece.cycle = std::move(seq);
            res.pieces.push_back(std::move(piece));
            trace_line(res.trace, "splice", seed, "\"piece\": " + std::to_string(mine[t]));
        }
    }
    return res;
}

}  // namespace assembly
}  // namespace hamdec
