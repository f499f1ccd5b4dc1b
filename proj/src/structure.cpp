#include "hamdec/structure.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "hamdec/flow.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hamdec {
namespace structure {

namespace {

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> adj(g.n(), 0);
    for (int v = 0; v < g.n(); ++v)
        for (int w : g.neighbors(v)) adj[v] |= 1ull << w;
    return adj;
}

// objective helpers on a bitmask A (n <= 62)
struct MaskObjective {
    const std::vector<std::uint64_t>& adj;
    int n;
    long long total_edges;

    long long inside(std::uint64_t mask) const {
        long long s = 0;
        std::uint64_t rest = mask;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            s += std::popcount(adj[v] & mask);
        }
        return s / 2;
    }
    long long value(std::uint64_t mask, int objective) const {
        long long ea = inside(mask);
        if (objective == 1) return ea;
        std::uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;
        long long eb = inside(~mask & full);
        long long cut = total_edges - ea - eb;
        return objective == 0 ? cut : ea + eb;
    }
};

std::uint64_t next_same_popcount(std::uint64_t x) {  // Gosper's hack
    std::uint64_t c = x & -x, r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

std::vector<int> mask_to_set(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

}  // namespace

Bisection exact_bisection_serial(const Graph& g, int objective) {
    int n = g.n();
    if (n > 28) throw resource_error("exact bisection limited to n <= 28");
    int h = n / 2;
    auto adj = adjacency_masks(g);
    MaskObjective mo{adj, n, g.m()};
    Bisection best;
    best.exact = true;
    best.value = -1;
    if (h == 0) return best.value = 0, best;
    std::uint64_t mask = (1ull << h) - 1;
    std::uint64_t limit = 1ull << n;
    std::uint64_t best_mask = mask;
    while (mask < limit) {
        long long v = mo.value(mask, objective);
        if (best.value < 0 || v < best.value) {
            best.value = v;
            best_mask = mask;
        }
        mask = next_same_popcount(mask);
    }
    best.side_a = mask_to_set(best_mask);
    return best;
}

Bisection exact_bisection_parallel(const Graph& g, int objective) {
    int n = g.n();
    if (n > 28) throw resource_error("exact bisection limited to n <= 28");
    int h = n / 2;
    if (h == 0) {
        Bisection b;
        b.exact = true;
        b.value = 0;
        return b;
    }
    auto adj = adjacency_masks(g);
    MaskObjective mo{adj, n, g.m()};
    int low_bits = std::min(n, 16);
    int high_bits = n - low_bits;
    long long global_best = -1;
    std::uint64_t global_mask = 0;
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        long long local_best = -1;
        std::uint64_t local_mask = 0;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 4)
#endif
        for (long long hi = 0; hi < (1ll << high_bits); ++hi) {
            int hc = std::popcount(static_cast<std::uint64_t>(hi));
            int need = h - hc;
            if (need < 0 || need > low_bits) continue;
            std::uint64_t lo_limit = 1ull << low_bits;
            std::uint64_t lo = need == 0 ? 0 : (1ull << need) - 1;
            for (;;) {
                std::uint64_t mask = (static_cast<std::uint64_t>(hi) << low_bits) | lo;
                long long v = mo.value(mask, objective);
                if (local_best < 0 || v < local_best || (v == local_best && mask < local_mask)) {
                    local_best = v;
                    local_mask = mask;
                }
                if (need == 0) break;
                lo = next_same_popcount(lo);
                if (lo >= lo_limit) break;
            }
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        {
            if (local_best >= 0 && (global_best < 0 || local_best < global_best ||
                                    (local_best == global_best && local_mask < global_mask))) {
                global_best = local_best;
                global_mask = local_mask;
            }
        }
    }
    Bisection best;
    best.exact = true;
    best.value = global_best;
    best.side_a = mask_to_set(global_mask);
    return best;
}

namespace {

// Deterministic local search: best improving swap per round, smallest-index
// tie-break, two fixed starts.
Bisection local_bisection(const Graph& g, int objective) {
    int n = g.n(), h = n / 2;
    auto eval = [&](const std::vector<char>& in_a) {
        long long ea = 0, eb = 0, cut = 0;
        for (auto [u, v] : g.edges()) {
            if (in_a[u] && in_a[v]) ++ea;
            else if (!in_a[u] && !in_a[v]) ++eb;
            else ++cut;
        }
        return objective == 0 ? cut : objective == 1 ? ea : ea + eb;
    };

    std::vector<std::vector<char>> starts;
    {
        std::vector<char> a(n, 0);
        for (int v = 0; v < h; ++v) a[v] = 1;
        starts.push_back(a);
    }
    {
        std::vector<char> a(n, 0), seen(n, 0);
        std::vector<int> order;
        for (int s = 0; s < n; ++s) {
            if (seen[s]) continue;
            std::vector<int> q = {s};
            seen[s] = 1;
            for (size_t head = 0; head < q.size(); ++head) {
                order.push_back(q[head]);
                for (int w : g.neighbors(q[head]))
                    if (!seen[w]) {
                        seen[w] = 1;
                        q.push_back(w);
                    }
            }
        }
        for (int i = 0; i < h; ++i) a[order[i]] = 1;
        starts.push_back(a);
    }

    Bisection best;
    best.exact = false;
    best.value = -1;
    for (auto in_a : starts) {
        long long cur = eval(in_a);
        bool improved = true;
        while (improved) {
            improved = false;
            long long best_delta = 0;
            int bu = -1, bv = -1;
            for (int u = 0; u < n; ++u) {
                if (!in_a[u]) continue;
                for (int v = 0; v < n; ++v) {
                    if (in_a[v]) continue;
                    in_a[u] = 0;
                    in_a[v] = 1;
                    long long w = eval(in_a);
                    in_a[u] = 1;
                    in_a[v] = 0;
                    if (w - cur < best_delta) {
                        best_delta = w - cur;
                        bu = u;
                        bv = v;
                    }
                }
            }
            if (bu >= 0) {
                in_a[bu] = 0;
                in_a[bv] = 1;
                cur += best_delta;
                improved = true;
            }
        }
        if (best.value < 0 || cur < best.value) {
            best.value = cur;
            best.side_a.clear();
            for (int v = 0; v < n; ++v)
                if (in_a[v]) best.side_a.push_back(v);
        }
    }
    return best;
}

Bisection bisection_dispatch(const Graph& g, int objective, const ToleranceConfig& cfg) {
    if (g.n() <= cfg.bisection_exact_cap) return exact_bisection_parallel(g, objective);
    return local_bisection(g, objective);
}

}  // namespace

Bisection min_bisection(const Graph& g, const ToleranceConfig& cfg) {
    return bisection_dispatch(g, 0, cfg);
}
Bisection min_inside_bisection(const Graph& g, const ToleranceConfig& cfg) {
    return bisection_dispatch(g, 1, cfg);
}
Bisection min_both_sides_bisection(const Graph& g, const ToleranceConfig& cfg) {
    return bisection_dispatch(g, 2, cfg);
}

std::optional<std::vector<int>> eps_close_two_cliques(const Graph& g, double eps,
                                                      const ToleranceConfig& cfg) {
    auto b = min_bisection(g, cfg);
    if (static_cast<double>(b.value) <= eps * g.n() * g.n()) return b.side_a;
    return std::nullopt;
}

std::optional<std::vector<int>> eps_bipartite(const Graph& g, double eps,
                                              const ToleranceConfig& cfg) {
    auto b = min_both_sides_bisection(g, cfg);
    std::vector<char> in_a(g.n(), 0);
    for (int v : b.side_a) in_a[v] = 1;
    std::vector<int> comp;
    for (int v = 0; v < g.n(); ++v)
        if (!in_a[v]) comp.push_back(v);
    double budget = eps * g.n() * g.n();
    if (static_cast<double>(edges_inside(g, b.side_a)) <= budget &&
        static_cast<double>(edges_inside(g, comp)) <= budget)
        return b.side_a;
    return std::nullopt;
}

namespace {

bool expander_mask_ok(const std::vector<std::uint64_t>& adj, int n, std::uint64_t s_mask,
                      double nu, double tau) {
    int s = std::popcount(s_mask);
    if (s < tau * n - 1e-9 || s > (1 - tau) * n + 1e-9) return true;  // outside the window
    int rn = 0;
    for (int v = 0; v < n; ++v)
        if (std::popcount(adj[v] & s_mask) + 1e-9 >= nu * n) ++rn;
    return rn + 1e-9 >= s + nu * n;
}

}  // namespace

ExpanderVerdict robust_expander_exact_serial(const Graph& g, double nu, double tau) {
    int n = g.n();
    if (n > 30) throw resource_error("exact expander check limited to n <= 30");
    auto adj = adjacency_masks(g);
    ExpanderVerdict v;
    v.exact = true;
    std::uint64_t limit = 1ull << n;
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
        if (!expander_mask_ok(adj, n, mask, nu, tau)) {
            v.is_expander = false;
            v.witness = mask_to_set(mask);
            return v;
        }
    }
    v.is_expander = true;
    return v;
}

ExpanderVerdict robust_expander_exact_parallel(const Graph& g, double nu, double tau) {
    int n = g.n();
    if (n > 30) throw resource_error("exact expander check limited to n <= 30");
    auto adj = adjacency_masks(g);
    long long limit = 1ll << n;
    long long worst = limit;  // minimal failing mask, matching the serial scan
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1 << 12) reduction(min : worst)
#endif
    for (long long mask = 1; mask < limit; ++mask) {
        if (mask < worst && !expander_mask_ok(adj, n, static_cast<std::uint64_t>(mask), nu, tau))
            worst = mask;
    }
    ExpanderVerdict v;
    v.exact = true;
    if (worst < limit) {
        v.is_expander = false;
        v.witness = mask_to_set(static_cast<std::uint64_t>(worst));
    } else {
        v.is_expander = true;
    }
    return v;
}

ExpanderVerdict is_robust_expander(const Graph& g, double nu, double tau, ExpanderMode mode,
                                   std::uint64_t seed, const ToleranceConfig& cfg) {
    if (!(0 < nu && nu <= tau && tau < 1)) throw domain_error("need 0 < nu <= tau < 1");
    int n = g.n();
    if (mode == ExpanderMode::exact) {
        if (n > cfg.expander_exact_cap)
            throw resource_error("exact expander mode above configured cap " +
                                 std::to_string(cfg.expander_exact_cap));
        return robust_expander_exact_parallel(g, nu, tau);
    }
    ExpanderVerdict v;
    v.exact = false;
    if (n > 62) throw resource_error("sampled expander check limited to n <= 62");
    std::mt19937_64 rng(seed);
    int lo = static_cast<int>(std::ceil(tau * n - 1e-9));
    int hi = static_cast<int>(std::floor((1 - tau) * n + 1e-9));
    if (lo > hi) {
        v.is_expander = true;
        return v;
    }
    auto adj = adjacency_masks(g);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uniform_int_distribution<int> size_dist(lo, hi);
    int samples = std::max(64, cfg.retry_budget * 16);
    for (int it = 0; it < samples; ++it) {
        std::shuffle(perm.begin(), perm.end(), rng);
        int s = size_dist(rng);
        std::uint64_t mask = 0;
        for (int i = 0; i < s; ++i) mask |= 1ull << perm[i];
        if (!expander_mask_ok(adj, n, mask, nu, tau)) {
            v.is_expander = false;
            v.witness = mask_to_set(mask);
            return v;
        }
    }
    v.is_expander = true;  // probabilistic pass
    return v;
}

StructureClass classify(const Graph& g, double eps, double nu, double tau, std::uint64_t seed,
                        const ToleranceConfig& cfg) {
    int n = g.n();
    if (g.min_degree() < (0.5 - cfg.kappa) * n - 1e-9)
        throw domain_error("classify: minimum degree below (1/2 - kappa) n");
    double budget = eps * n * n;

    auto near_bip = min_inside_bisection(g, cfg);
    if (static_cast<double>(near_bip.value) <= budget)
        return {StructureClass::NearBipartite, near_bip.side_a, 0, 0};

    auto two_cl = min_bisection(g, cfg);
    if (static_cast<double>(two_cl.value) <= budget)
        return {StructureClass::TwoCliques, two_cl.side_a, 0, 0};

    auto mode = n <= cfg.expander_exact_cap ? ExpanderMode::exact : ExpanderMode::sampled;
    auto verdict = is_robust_expander(g, nu, tau, mode, seed, cfg);
    if (verdict.is_expander) return {StructureClass::RobustExpander, {}, nu, tau};

    std::ostringstream oss;
    oss << "classification failed: min e(A)=" << near_bip.value << ", min cut=" << two_cl.value
        << " (budget " << budget << "), expander witness |S|=" << verdict.witness.size();
    throw infeasible_error(oss.str());
}

long long capped_max_edges_flow(const Graph& g, const BiPartition& p, int b) {
    if (b <= 0) return 0;
    int n = g.n();
    auto in_ap = p.mask_a_prime(n);
    auto in_bp = p.mask_b_prime(n);
    int S = n, T = n + 1;
    MaxFlow mf(n + 2);
    for (int v = 0; v < n; ++v) {
        if (in_ap[v]) mf.add_edge(S, v, b);
        else mf.add_edge(v, T, b);
    }
    for (auto [u, v] : g.edges()) {
        if (in_ap[u] && in_bp[v]) mf.add_edge(u, v, 1);
        else if (in_ap[v] && in_bp[u]) mf.add_edge(v, u, 1);
    }
    return mf.run(S, T);
}

CriticalityReport criticality(const Graph& g, const BiPartition& p, int D) {
    p.validate(g.n());
    CriticalityReport rep;
    auto in_ap = p.mask_a_prime(g.n());
    auto in_bp = p.mask_b_prime(g.n());
    for (int v = 0; v < g.n(); ++v) {
        int d = g.degree_into(v, in_ap[v] ? in_bp : in_ap);
        rep.delta_cross = std::max(rep.delta_cross, d);
        if (40LL * d >= 11LL * D && d > 0) rep.w_set.push_back(v);
    }
    int b = (11 * D) / 40;
    rep.capped_max_edges = capped_max_edges_flow(g, p, b);
    rep.is_critical = rep.delta_cross > 0 && 40LL * rep.delta_cross >= 11LL * D &&
                      40LL * rep.capped_max_edges <= 41LL * D;
    return rep;
}

// ---------- framework checkers ----------

namespace {

void report(CheckReport& r, bool cond, const std::string& msg) {
    if (!cond) {
        r.ok = false;
        r.violations.push_back(msg);
    }
}

std::string join_violations(const CheckReport& r) {
    std::string out;
    for (const auto& v : r.violations) {
        if (!out.empty()) out += "; ";
        out += v;
    }
    return out;
}

}  // namespace

CheckReport check_fr(const Graph& g, const BiPartition& p, double eps0, int K) {
    CheckReport r;
    p.validate(g.n());
    int n = g.n();
    report(r, edges_between(g, p.a_prime(), p.b_prime()) <= eps0 * n * n,
           "FR2: e(A',B') above eps0 n^2");
    report(r, p.A.size() == p.B.size(), "FR3: |A| != |B|");
    report(r, K > 0 && p.A.size() % K == 0, "FR3: K does not divide |A|");
    report(r, p.A0.size() >= p.B0.size(), "FR3: |A0| < |B0|");
    report(r, static_cast<double>(p.A0.size() + p.B0.size()) <= eps0 * n,
           "FR3: |A0| + |B0| above eps0 n");
    auto in_ap = p.mask_a_prime(n);
    auto in_bp = p.mask_b_prime(n);
    for (int v : p.A)
        report(r, g.degree_into(v, in_bp) < eps0 * n,
               "FR4: vertex " + std::to_string(v) + " in A has d(v,B') >= eps0 n");
    for (int v : p.B)
        report(r, g.degree_into(v, in_ap) < eps0 * n,
               "FR4: vertex " + std::to_string(v) + " in B has d(v,A') >= eps0 n");
    return r;
}

CheckReport check_wf(const Graph& f, const Graph& g, const BiPartition& p, double eps,
                     double eps_prime, int K, int D) {
    CheckReport r;
    p.validate(g.n());
    int n = g.n();
    auto ap = p.a_prime();
    auto bp = p.b_prime();
    report(r, is_D_balanced(g, p, D), "WF2: G is not D-balanced");
    report(r, edges_inside(g, ap) <= eps * n * n && edges_inside(g, bp) <= eps * n * n,
           "WF3: e(A') or e(B') above eps n^2");
    report(r, p.A.size() == p.B.size() && K > 0 && p.A.size() % K == 0,
           "WF4: |A| = |B| divisible by K fails");
    report(r, static_cast<double>(p.A0.size() + p.B0.size()) <= eps * n, "WF4: a+b above eps n");
    auto in_ap = p.mask_a_prime(n);
    auto in_bp = p.mask_b_prime(n);
    for (int v : p.A)
        report(r, f.degree_into(v, in_ap) <= eps_prime * n,
               "WF5: vertex " + std::to_string(v) + " internal F-degree above eps' n");
    for (int v : p.B)
        report(r, f.degree_into(v, in_bp) <= eps_prime * n,
               "WF5: vertex " + std::to_string(v) + " internal F-degree above eps' n");
    for (int v = 0; v < n; ++v) {
        int internal = g.degree_into(v, in_ap[v] ? in_ap : in_bp);
        report(r, 2 * internal <= g.degree(v),
               "WF6: vertex " + std::to_string(v) + " internal degree above d/2");
    }
    return r;
}

CheckReport check_bfr(const Graph& g, const BiPartition& p, double eps, double eps_prime, int K,
                      int D) {
    CheckReport r;
    p.validate(g.n());
    int n = g.n();
    auto ap = p.a_prime();
    auto bp = p.b_prime();
    report(r, is_D_balanced(g, p, D), "BFR2: G is not D-balanced");
    report(r, edges_inside(g, ap) <= eps * n * n && edges_inside(g, bp) <= eps * n * n,
           "BFR3: e(A') or e(B') above eps n^2");
    report(r, p.A.size() == p.B.size() && K > 0 && p.A.size() % K == 0,
           "BFR4: |A| = |B| divisible by K fails");
    report(r, p.B0.size() <= p.A0.size(), "BFR4: b > a");
    report(r, static_cast<double>(p.A0.size() + p.B0.size()) <= eps * n, "BFR4: a+b above eps n");
    auto in_ap = p.mask_a_prime(n);
    auto in_bp = p.mask_b_prime(n);
    for (int v : p.A)
        report(r, g.degree_into(v, in_ap) <= eps_prime * n, "BFR5: internal degree above eps' n");
    for (int v : p.B)
        report(r, g.degree_into(v, in_bp) <= eps_prime * n, "BFR5: internal degree above eps' n");
    report(r, edges_between(g, p.A0, p.B0) == 0, "BFR6: edges between A0 and B0");
    for (int v = 0; v < n; ++v) {
        int internal = g.degree_into(v, in_ap[v] ? in_ap : in_bp);
        report(r, internal <= g.degree(v) / 2.0 + eps * n,
               "BFR7: vertex " + std::to_string(v) + " internal degree above d/2 + eps n");
    }
    return r;
}

Framework build_framework(const Graph& g, double eps0, int K, const ToleranceConfig& cfg) {
    int n = g.n();
    if (K < 1) throw domain_error("build_framework: K >= 1");
    auto witness = eps_close_two_cliques(g, cfg.eps_ex, cfg);
    if (!witness) throw infeasible_error("build_framework: input is not eps-close to two cliques");

    std::vector<char> in_a(n, 0);
    for (int v : *witness) in_a[v] = 1;

    // local moves: shift any vertex whose degree majority is on the other
    // side; the cut strictly decreases, so this terminates
    long long cut = 0;
    for (auto [u, v] : g.edges())
        if (in_a[u] != in_a[v]) ++cut;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int v = 0; v < n && !moved; ++v) {
            int din = 0;
            for (int w : g.neighbors(v)) din += (in_a[w] == in_a[v]);
            int dout = g.degree(v) - din;
            if (din < dout) {
                in_a[v] = static_cast<char>(!in_a[v]);
                long long new_cut = cut - dout + din;
                if (new_cut >= cut) throw contract_error("framework move did not reduce the cut");
                cut = new_cut;
                moved = true;
            }
        }
    }

    std::vector<int> ap, bp;
    for (int v = 0; v < n; ++v) (in_a[v] ? ap : bp).push_back(v);
    if (ap.size() < bp.size()) std::swap(ap, bp);
    std::vector<char> ap_mask(n, 0), bp_mask(n, 0);
    for (int v : ap) ap_mask[v] = 1;
    for (int v : bp) bp_mask[v] = 1;

    double thr = std::min(std::sqrt(cfg.eps_ex), eps0) * n;
    std::vector<int> a_core, a_exc, b_core, b_exc;
    for (int v : ap) (g.degree_into(v, bp_mask) >= thr ? a_exc : a_core).push_back(v);
    for (int v : bp) (g.degree_into(v, ap_mask) >= thr ? b_exc : b_core).push_back(v);

    size_t km = std::min(a_core.size(), b_core.size()) / K * K;
    Framework fr;
    fr.eps0 = eps0;
    fr.K = K;
    fr.kind = FrameworkKind::FR;
    fr.partition.A.assign(a_core.begin(), a_core.begin() + km);
    fr.partition.A0 = a_exc;
    fr.partition.A0.insert(fr.partition.A0.end(), a_core.begin() + km, a_core.end());
    fr.partition.B.assign(b_core.begin(), b_core.begin() + km);
    fr.partition.B0 = b_exc;
    fr.partition.B0.insert(fr.partition.B0.end(), b_core.begin() + km, b_core.end());
    std::sort(fr.partition.A0.begin(), fr.partition.A0.end());
    std::sort(fr.partition.B0.begin(), fr.partition.B0.end());
    if (fr.partition.A0.size() < fr.partition.B0.size()) {
        std::swap(fr.partition.A, fr.partition.B);
        std::swap(fr.partition.A0, fr.partition.B0);
    }
    auto check = check_fr(g, fr.partition, eps0, K);
    if (!check.ok)
        throw infeasible_error("build_framework: local moves got stuck: " + join_violations(check));
    return fr;
}

Framework build_weak_framework(const Graph& f, const Graph& g, double eps, double eps_prime,
                               int K, int D, const ToleranceConfig& cfg) {
    int n = f.n();
    if (g.n() != n) throw domain_error("build_weak_framework: F and G must share a vertex set");
    auto witness = eps_bipartite(f, eps, cfg);
    if (!witness) throw domain_error("build_weak_framework: F is not eps-bipartite");

    std::vector<char> in_a(n, 0);
    for (int v : *witness) in_a[v] = 1;
    long long cut = 0;
    for (auto [u, v] : g.edges())
        if (in_a[u] != in_a[v]) ++cut;
    // bad-vertex elimination on G: a vertex with internal majority moves to
    // the other class; the cut strictly increases, so this terminates
    bool moved = true;
    while (moved) {
        moved = false;
        for (int v = 0; v < n && !moved; ++v) {
            int din = 0;
            for (int w : g.neighbors(v)) din += (in_a[w] == in_a[v]);
            int dout = g.degree(v) - din;
            if (din > dout) {
                in_a[v] = static_cast<char>(!in_a[v]);
                long long new_cut = cut + din - dout;
                if (new_cut <= cut)
                    throw contract_error("weak framework move did not grow the cut");
                cut = new_cut;
                moved = true;
            }
        }
    }

    std::vector<int> ap, bp;
    for (int v = 0; v < n; ++v) (in_a[v] ? ap : bp).push_back(v);
    if (ap.size() < bp.size()) std::swap(ap, bp);
    std::vector<char> ap_mask(n, 0), bp_mask(n, 0);
    for (int v : ap) ap_mask[v] = 1;
    for (int v : bp) bp_mask[v] = 1;

    std::vector<int> a_core, a_exc, b_core, b_exc;
    for (int v : ap) (f.degree_into(v, ap_mask) >= eps_prime * n ? a_exc : a_core).push_back(v);
    for (int v : bp) (f.degree_into(v, bp_mask) >= eps_prime * n ? b_exc : b_core).push_back(v);

    size_t km = std::min(a_core.size(), b_core.size()) / K * K;
    Framework fr;
    fr.eps0 = eps;
    fr.eps_prime = eps_prime;
    fr.K = K;
    fr.D = D;
    fr.kind = FrameworkKind::WF;
    fr.partition.A.assign(a_core.begin(), a_core.begin() + km);
    fr.partition.A0 = a_exc;
    fr.partition.A0.insert(fr.partition.A0.end(), a_core.begin() + km, a_core.end());
    fr.partition.B.assign(b_core.begin(), b_core.begin() + km);
    fr.partition.B0 = b_exc;
    fr.partition.B0.insert(fr.partition.B0.end(), b_core.begin() + km, b_core.end());
    std::sort(fr.partition.A0.begin(), fr.partition.A0.end());
    std::sort(fr.partition.B0.begin(), fr.partition.B0.end());
    auto check = check_wf(f, g, fr.partition, eps, eps_prime, K, D);
    if (!check.ok) throw infeasible_error("build_weak_framework: " + join_violations(check));
    return fr;
}

// ---------- randomized partitions ----------

Equipartition random_equipartition(const Graph& g, const Graph& f, const std::vector<int>& u,
                                   const std::vector<std::vector<int>>& r, int K,
                                   const ToleranceConfig& cfg, std::uint64_t seed) {
    int n = g.n();
    if (K < 1) throw domain_error("random_equipartition: K >= 1");
    if (u.size() % K != 0) throw domain_error("random_equipartition: K must divide |U|");
    int m = static_cast<int>(u.size()) / K;
    double worst_overall = -1;
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < std::max(1, cfg.retry_budget); ++attempt) {
        std::vector<int> perm = u;
        std::shuffle(perm.begin(), perm.end(), rng);
        Equipartition ep;
        ep.clusters.assign(K, {});
        for (int i = 0; i < K; ++i) {
            ep.clusters[i].assign(perm.begin() + static_cast<size_t>(i) * m,
                                  perm.begin() + static_cast<size_t>(i + 1) * m);
            std::sort(ep.clusters[i].begin(), ep.clusters[i].end());
        }
        double worst = 0;
        auto dev = [&](double observed, double expected, double allowed) {
            double d = allowed > 0 ? std::abs(observed - expected) / allowed
                                   : (observed == expected ? 0.0 : 2.0);
            worst = std::max(worst, d);
        };
        std::vector<std::vector<char>> masks(K, std::vector<char>(n, 0));
        for (int i = 0; i < K; ++i)
            for (int v : ep.clusters[i]) masks[i][v] = 1;
        std::vector<char> u_mask(n, 0);
        for (int v : u) u_mask[v] = 1;
        for (int v = 0; v < n; ++v) {
            double dgu = g.degree_into(v, u_mask);
            double dfu = f.degree_into(v, u_mask);
            for (int i = 0; i < K; ++i) {
                dev(g.degree_into(v, masks[i]), dgu / K, cfg.eps1 * n / K);
                dev(f.degree_into(v, masks[i]), dfu / K, cfg.eps1 * n / K);
            }
        }
        double eu = static_cast<double>(edges_inside(g, u));
        for (int i = 0; i < K; ++i) {
            dev(static_cast<double>(edges_inside(g, ep.clusters[i])), eu / (K * K),
                cfg.eps2 * std::max<double>(n, eu) / (K * K));
            for (int j = i + 1; j < K; ++j)
                dev(static_cast<double>(edges_between(g, ep.clusters[i], ep.clusters[j])),
                    2 * eu / (K * K), 2 * cfg.eps2 * std::max<double>(n, eu) / (K * K));
        }
        for (const auto& rj : r) {
            double eur = static_cast<double>(edges_between(g, u, rj));
            for (int i = 0; i < K; ++i)
                dev(static_cast<double>(edges_between(g, ep.clusters[i], rj)), eur / K,
                    cfg.eps2 * std::max<double>(n, eur) / K);
        }
        if (worst_overall < 0 || worst < worst_overall) worst_overall = worst;
        if (worst <= 1.0) {
            ep.worst_deviation = worst;
            return ep;
        }
    }
    throw tolerance_error("random_equipartition: retry budget exhausted", worst_overall);
}

std::vector<int> SchemePartition::a_all() const {
    std::vector<int> out;
    for (const auto& c : A) out.insert(out.end(), c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}
std::vector<int> SchemePartition::b_all() const {
    std::vector<int> out;
    for (const auto& c : B) out.insert(out.end(), c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

SchemePartition scheme_partition(const Graph& g, const Framework& fr, int K,
                                 const ToleranceConfig& cfg, std::uint64_t seed) {
    const auto& p = fr.partition;
    if (p.A.size() != p.B.size()) throw domain_error("scheme_partition: |A| != |B|");
    if (K < 1 || p.A.size() % K != 0) throw domain_error("scheme_partition: K must divide |A|");
    int n = g.n();
    int m = static_cast<int>(p.A.size()) / K;

    double worst = 0;
    for (int attempt = 0; attempt < std::max(1, cfg.retry_budget); ++attempt) {
        std::uint64_t s = seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(attempt);
        SchemePartition sp;
        sp.A0 = p.A0;
        sp.B0 = p.B0;
        sp.K = K;
        sp.m = m;
        sp.eps0 = fr.eps0;
        try {
            sp.A = random_equipartition(g, g, p.A, {p.A0, p.B0, p.B}, K, cfg, s).clusters;
            std::vector<std::vector<int>> refs = {p.B0, p.A0};
            for (const auto& c : sp.A) refs.push_back(c);
            sp.B = random_equipartition(g, g, p.B, refs, K, cfg, s ^ 0xabcdefull).clusters;
        } catch (const tolerance_error& e) {
            worst = e.worst_deviation;
            continue;
        }
        // (Sch3) at the configured tolerance
        bool ok = true;
        for (int side = 0; side < 2 && ok; ++side) {
            const auto& verts = side == 0 ? p.A : p.B;
            const auto& clusters = side == 0 ? sp.A : sp.B;
            for (int i = 0; i < K && ok; ++i) {
                std::vector<char> cm(n, 0);
                for (int w : clusters[i]) cm[w] = 1;
                for (int v : verts)
                    if (g.degree_into(v, cm) < (1 - cfg.eps2) * m) {
                        ok = false;
                        break;
                    }
            }
        }
        if (ok) return sp;
    }
    throw tolerance_error("scheme_partition: retry budget exhausted", worst);
}

// ---------- localized slices ----------

namespace {

// splits `edges` into K near-equal random groups
std::vector<EdgeList> random_edge_groups(EdgeList edges, int K, std::mt19937_64& rng) {
    std::shuffle(edges.begin(), edges.end(), rng);
    std::vector<EdgeList> out(K);
    for (size_t i = 0; i < edges.size(); ++i) out[i % K].push_back(edges[i]);
    return out;
}

}  // namespace

std::vector<std::vector<SlicePair>> localized_slices(const Graph& g_diamond,
                                                     const SchemePartition& s,
                                                     const ToleranceConfig& cfg,
                                                     std::uint64_t seed) {
    int n = g_diamond.n();
    int K = s.K;
    auto a_all = s.a_all();
    auto b_all = s.b_all();
    std::vector<char> in_a0(n, 0), in_b0(n, 0), in_a(n, 0), in_b(n, 0);
    for (int v : s.A0) in_a0[v] = 1;
    for (int v : s.B0) in_b0[v] = 1;
    for (int v : a_all) in_a[v] = 1;
    for (int v : b_all) in_b[v] = 1;
    std::vector<int> cluster_of(n, -1);  // 0..K-1 for A clusters, K..2K-1 for B clusters
    for (int i = 0; i < K; ++i) {
        for (int v : s.A[i]) cluster_of[v] = i;
        for (int v : s.B[i]) cluster_of[v] = K + i;
    }
    if (edges_inside(g_diamond, s.A0) != 0 || edges_inside(g_diamond, s.B0) != 0)
        throw domain_error("localized_slices: edges inside A0 or B0 must be covered first");
    if (edges_inside(g_diamond, a_all) != 0 || edges_inside(g_diamond, b_all) != 0)
        throw domain_error("localized_slices: input must carry no A- or B-internal edges");

    EdgeList a0b0;
    std::vector<EdgeList> a0a(K), b0b(K), a0b(K), b0a(K);
    std::vector<std::vector<EdgeList>> ab(K, std::vector<EdgeList>(K));
    for (auto [u, v] : g_diamond.edges()) {
        auto kind = [&](int x) { return in_a0[x] ? 0 : in_b0[x] ? 1 : in_a[x] ? 2 : 3; };
        int ku = kind(u), kv = kind(v);
        if (ku > kv) {
            std::swap(u, v);
            std::swap(ku, kv);
        }
        if (ku == 0 && kv == 1) a0b0.push_back(make_edge(u, v));
        else if (ku == 0 && kv == 2) a0a[cluster_of[v]].push_back(make_edge(u, v));
        else if (ku == 0 && kv == 3) a0b[cluster_of[v] - K].push_back(make_edge(u, v));
        else if (ku == 1 && kv == 2) b0a[cluster_of[v]].push_back(make_edge(u, v));
        else if (ku == 1 && kv == 3) b0b[cluster_of[v] - K].push_back(make_edge(u, v));
        else if (ku == 2 && kv == 3)
            ab[cluster_of[u]][cluster_of[v] - K].push_back(make_edge(u, v));
        else throw domain_error("localized_slices: unclassifiable edge");
    }

    auto ap = s.A0;
    ap.insert(ap.end(), a_all.begin(), a_all.end());
    std::vector<char> in_ap(n, 0);
    for (int v : ap) in_ap[v] = 1;
    double e_cross = 0;
    std::vector<double> dcross(n, 0), dall(n, 0);
    for (auto [u, v] : g_diamond.edges()) {
        if (in_ap[u] != in_ap[v]) {
            ++e_cross;
            ++dcross[u];
            ++dcross[v];
        }
        ++dall[u];
        ++dall[v];
    }

    std::mt19937_64 rng(seed);
    double eps = cfg.eps1;
    for (int attempt = 0; attempt < std::max(1, cfg.retry_budget); ++attempt) {
        std::vector<std::vector<EdgeList>> slice(K, std::vector<EdgeList>(K));
        for (int i = 0; i < K; ++i)
            for (int j = 0; j < K; ++j) slice[i][j] = ab[i][j];
        for (size_t t = 0; t < a0b0.size(); ++t)
            slice[t % K][(t / K) % K].push_back(a0b0[t]);
        for (int i = 0; i < K; ++i) {
            auto groups = random_edge_groups(a0a[i], K, rng);
            for (int j = 0; j < K; ++j)
                for (auto e : groups[j]) slice[i][j].push_back(e);
        }
        for (int j = 0; j < K; ++j) {
            auto groups = random_edge_groups(b0b[j], K, rng);
            for (int i = 0; i < K; ++i)
                for (auto e : groups[i]) slice[i][j].push_back(e);
        }
        for (int j = 0; j < K; ++j) {
            auto groups = random_edge_groups(a0b[j], K, rng);
            for (int i = 0; i < K; ++i)
                for (auto e : groups[i]) slice[i][j].push_back(e);
        }
        for (int i = 0; i < K; ++i) {
            auto groups = random_edge_groups(b0a[i], K, rng);
            for (int j = 0; j < K; ++j)
                for (auto e : groups[j]) slice[i][j].push_back(e);
        }

        bool ok = true;
        std::vector<std::vector<SlicePair>> out(K, std::vector<SlicePair>(K));
        double kk = static_cast<double>(K) * K;
        for (int i = 0; i < K && ok; ++i) {
            for (int j = 0; j < K && ok; ++j) {
                SlicePair sp{Graph(n), Graph(n)};
                double hp_edges = 0;
                std::vector<double> dh(n, 0), dcrossh(n, 0);
                for (auto [u, v] : slice[i][j]) {
                    if (in_ap[u] == in_ap[v]) {
                        sp.h.add_edge(u, v);
                    } else {
                        sp.h_cross.add_edge(u, v);
                        ++hp_edges;
                        ++dcrossh[u];
                        ++dcrossh[v];
                    }
                    ++dh[u];
                    ++dh[v];
                }
                if (std::abs(hp_edges - e_cross / kk) > 4 * eps * std::max<double>(n, e_cross) / kk)
                    ok = false;
                for (int side = 0; side < 2 && ok; ++side)
                    for (int v : (side == 0 ? s.A0 : s.B0))
                        if (std::abs(dcrossh[v] - dcross[v] / kk) > 2 * eps * n / kk ||
                            std::abs(dh[v] - dall[v] / kk) > 4 * eps * n / kk) {
                            ok = false;
                            break;
                        }
                out[i][j] = std::move(sp);
            }
        }
        if (ok) return out;
    }
    throw tolerance_error("localized_slices: retry budget exhausted", 0);
}

std::vector<std::vector<Graph>> localized_slices_within_side(
    const Graph& g, const std::vector<int>& x0, const std::vector<std::vector<int>>& xs,
    const ToleranceConfig& cfg, std::uint64_t seed) {
    int n = g.n();
    int K = static_cast<int>(xs.size());
    std::vector<int> cluster_of(n, -1);
    std::vector<char> in_x0(n, 0);
    for (int v : x0) in_x0[v] = 1;
    for (int i = 0; i < K; ++i)
        for (int v : xs[i]) cluster_of[v] = i;

    std::vector<EdgeList> x0xi(K);
    std::vector<std::vector<EdgeList>> xixj(K, std::vector<EdgeList>(K));
    EdgeList x0x0;
    for (auto [u, v] : g.edges()) {
        if (in_x0[u] && in_x0[v]) x0x0.push_back({u, v});
        else if (in_x0[u]) x0xi[cluster_of[v]].push_back({u, v});
        else if (in_x0[v]) x0xi[cluster_of[u]].push_back({u, v});
        else {
            int i = cluster_of[u], j = cluster_of[v];
            if (i < 0 || j < 0) throw domain_error("localized slices: edge leaves the side");
            xixj[std::min(i, j)][std::max(i, j)].push_back({u, v});
        }
    }

    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < std::max(1, cfg.retry_budget); ++attempt) {
        std::vector<std::vector<EdgeList>> slice(K, std::vector<EdgeList>(K));
        for (int i = 0; i < K; ++i) {
            auto groups = random_edge_groups(x0xi[i], K, rng);
            for (int j = 0; j < K; ++j)
                for (auto e : groups[j]) slice[i][j].push_back(e);
        }
        for (int i = 0; i < K; ++i) {
            for (auto e : xixj[i][i]) slice[i][i].push_back(e);
            for (int j = i + 1; j < K; ++j) {
                EdgeList shuffled = xixj[i][j];
                std::shuffle(shuffled.begin(), shuffled.end(), rng);
                for (size_t t = 0; t < shuffled.size(); ++t) {
                    if (t % 2 == 0) slice[i][j].push_back(shuffled[t]);
                    else slice[j][i].push_back(shuffled[t]);
                }
            }
        }
        for (size_t t = 0; t < x0x0.size(); ++t)
            slice[t % K][(t / K) % K].push_back(x0x0[t]);

        double e_side = g.m();
        bool ok = true;
        double kk = static_cast<double>(K) * K;
        for (int i = 0; i < K && ok; ++i)
            for (int j = 0; j < K && ok; ++j)
                if (std::abs(static_cast<double>(slice[i][j].size()) - e_side / kk) >
                    9 * cfg.eps2 * std::max<double>(n, e_side) / kk)
                    ok = false;
        for (int v : x0) {
            if (!ok) break;
            double dv = g.degree(v);
            for (int i = 0; i < K && ok; ++i)
                for (int j = 0; j < K && ok; ++j) {
                    double dh = 0;
                    for (auto [a, b] : slice[i][j]) dh += (a == v) + (b == v);
                    if (std::abs(dh - dv / kk) > 4 * cfg.eps1 * n / kk) ok = false;
                }
        }
        if (!ok) continue;
        std::vector<std::vector<Graph>> out(K, std::vector<Graph>(K, Graph(n)));
        for (int i = 0; i < K; ++i)
            for (int j = 0; j < K; ++j)
                for (auto [u, v] : slice[i][j]) out[i][j].add_edge(u, v);
        return out;
    }
    throw tolerance_error("localized_slices_within_side: retry budget exhausted", 0);
}

// ---------- regularity ----------

double pair_density(const Graph& g, const std::vector<int>& left, const std::vector<int>& right) {
    if (left.empty() || right.empty()) return 0;
    return static_cast<double>(edges_between(g, left, right)) /
           (static_cast<double>(left.size()) * right.size());
}

namespace {

struct ScanContext {
    std::vector<std::uint64_t> deg_masks;  // scan-side adjacency into the other side
    int scan_size = 0, other_size = 0;
    int kmin_scan = 0, kmin_other = 0;

    // extreme densities over subsets of the other side, for a fixed scan set
    void extremes(std::uint64_t a_mask, int a_size, double& lo, double& hi) const {
        std::vector<int> degs(other_size, 0);
        std::uint64_t rest = a_mask;
        while (rest) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint64_t m = deg_masks[i];
            while (m) {
                ++degs[std::countr_zero(m)];
                m &= m - 1;
            }
        }
        std::sort(degs.begin(), degs.end(), std::greater<int>());
        std::vector<long long> prefix(other_size + 1, 0);
        for (int k = 1; k <= other_size; ++k) prefix[k] = prefix[k - 1] + degs[k - 1];
        hi = 0;
        lo = 1;
        for (int k = std::max(1, kmin_other); k <= other_size; ++k) {
            double denom = static_cast<double>(a_size) * k;
            hi = std::max(hi, static_cast<double>(prefix[k]) / denom);
            lo = std::min(lo, static_cast<double>(prefix[other_size] - prefix[other_size - k]) / denom);
        }
    }
};

ScanContext make_scan_context(const Graph& g, const std::vector<int>& left,
                              const std::vector<int>& right, double eps) {
    const auto& scan = left.size() <= right.size() ? left : right;
    const auto& other = left.size() <= right.size() ? right : left;
    ScanContext ctx;
    ctx.scan_size = static_cast<int>(scan.size());
    ctx.other_size = static_cast<int>(other.size());
    if (ctx.other_size > 62) throw resource_error("regularity scan limited to classes <= 62");
    std::vector<int> pos(g.n(), -1);
    for (int i = 0; i < ctx.other_size; ++i) pos[other[i]] = i;
    ctx.deg_masks.assign(ctx.scan_size, 0);
    for (int i = 0; i < ctx.scan_size; ++i)
        for (int w : g.neighbors(scan[i]))
            if (pos[w] >= 0) ctx.deg_masks[i] |= 1ull << pos[w];
    ctx.kmin_scan = std::max(1, static_cast<int>(std::ceil(eps * ctx.scan_size - 1e-9)));
    ctx.kmin_other = std::max(1, static_cast<int>(std::ceil(eps * ctx.other_size - 1e-9)));
    return ctx;
}

}  // namespace

RegularityScan eps_regular_scan_serial(const Graph& g, const std::vector<int>& left,
                                       const std::vector<int>& right, double eps) {
    auto ctx = make_scan_context(g, left, right, eps);
    if (ctx.scan_size > 24) throw resource_error("exact regularity scan limited to classes <= 24");
    double d0 = pair_density(g, left, right);
    double lo_all = 1, hi_all = 0;
    std::uint64_t limit = 1ull << ctx.scan_size;
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
        int a = std::popcount(mask);
        if (a < ctx.kmin_scan) continue;
        double lo, hi;
        ctx.extremes(mask, a, lo, hi);
        lo_all = std::min(lo_all, lo);
        hi_all = std::max(hi_all, hi);
    }
    RegularityScan rs;
    if (hi_all < lo_all) lo_all = hi_all = d0;
    rs.lo_density = lo_all;
    rs.hi_density = hi_all;
    rs.worst_abs_deviation = std::max(hi_all - d0, d0 - lo_all);
    return rs;
}

RegularityScan eps_regular_scan_parallel(const Graph& g, const std::vector<int>& left,
                                         const std::vector<int>& right, double eps) {
    auto ctx = make_scan_context(g, left, right, eps);
    if (ctx.scan_size > 24) throw resource_error("exact regularity scan limited to classes <= 24");
    double d0 = pair_density(g, left, right);
    double lo_all = 1, hi_all = 0;
    long long limit = 1ll << ctx.scan_size;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1 << 10) reduction(min : lo_all) reduction(max : hi_all)
#endif
    for (long long mask = 1; mask < limit; ++mask) {
        int a = std::popcount(static_cast<std::uint64_t>(mask));
        if (a < ctx.kmin_scan) continue;
        double lo, hi;
        ctx.extremes(static_cast<std::uint64_t>(mask), a, lo, hi);
        lo_all = std::min(lo_all, lo);
        hi_all = std::max(hi_all, hi);
    }
    RegularityScan rs;
    if (hi_all < lo_all) lo_all = hi_all = d0;
    rs.lo_density = lo_all;
    rs.hi_density = hi_all;
    rs.worst_abs_deviation = std::max(hi_all - d0, d0 - lo_all);
    return rs;
}

namespace {

RegularityScan eps_regular_scan_sampled(const Graph& g, const std::vector<int>& left,
                                        const std::vector<int>& right, double eps,
                                        std::uint64_t seed, int samples) {
    std::mt19937_64 rng(seed);
    double d0 = pair_density(g, left, right);
    RegularityScan rs;
    rs.lo_density = rs.hi_density = d0;
    int kl = std::max(1, static_cast<int>(std::ceil(eps * left.size() - 1e-9)));
    int kr = std::max(1, static_cast<int>(std::ceil(eps * right.size() - 1e-9)));
    auto l = left;
    auto r = right;
    std::uniform_int_distribution<int> szl(kl, static_cast<int>(left.size()));
    std::uniform_int_distribution<int> szr(kr, static_cast<int>(right.size()));
    for (int it = 0; it < samples; ++it) {
        std::shuffle(l.begin(), l.end(), rng);
        std::shuffle(r.begin(), r.end(), rng);
        std::vector<int> a(l.begin(), l.begin() + szl(rng));
        std::vector<int> b(r.begin(), r.begin() + szr(rng));
        double d = pair_density(g, a, b);
        rs.lo_density = std::min(rs.lo_density, d);
        rs.hi_density = std::max(rs.hi_density, d);
    }
    rs.worst_abs_deviation = std::max(rs.hi_density - d0, d0 - rs.lo_density);
    return rs;
}

RegularityScan scan_dispatch(const Graph& g, const std::vector<int>& left,
                             const std::vector<int>& right, double eps, std::uint64_t seed,
                             const ToleranceConfig& cfg, bool& exact) {
    int scan_side = static_cast<int>(std::min(left.size(), right.size()));
    if (scan_side <= cfg.regularity_exact_cap && std::max(left.size(), right.size()) <= 62) {
        exact = true;
        return eps_regular_scan_parallel(g, left, right, eps);
    }
    exact = false;
    return eps_regular_scan_sampled(g, left, right, eps, seed, std::max(256, cfg.retry_budget * 8));
}

}  // namespace

RegularityVerdict is_eps_regular(const Graph& g, const std::vector<int>& left,
                                 const std::vector<int>& right, double eps, double d,
                                 std::uint64_t seed, const ToleranceConfig& cfg) {
    if (eps <= 0) throw domain_error("is_eps_regular: eps > 0");
    RegularityVerdict v;
    double d0 = pair_density(g, left, right);
    auto rs = scan_dispatch(g, left, right, eps, seed, cfg, v.exact);
    if (rs.worst_abs_deviation >= eps) {
        v.failure = "density deviation " + std::to_string(rs.worst_abs_deviation) +
                    " >= eps on some subset pair";
        return v;
    }
    if (d0 < d - eps) {
        v.failure = "pair density " + std::to_string(d0) + " below d - eps";
        return v;
    }
    v.ok = true;
    return v;
}

RegularityVerdict is_superregular(const Graph& g, const std::vector<int>& left,
                                  const std::vector<int>& right, double eps, double d,
                                  std::uint64_t seed, const ToleranceConfig& cfg) {
    RegularityVerdict v;
    std::vector<char> lm(g.n(), 0), rm(g.n(), 0);
    for (int x : left) lm[x] = 1;
    for (int x : right) rm[x] = 1;
    for (int x : left)
        if (std::abs(g.degree_into(x, rm) - d * right.size()) > eps * right.size() + 1e-9) {
            v.failure = "degree of vertex " + std::to_string(x) + " outside (d +- eps)|B|";
            return v;
        }
    for (int x : right)
        if (std::abs(g.degree_into(x, lm) - d * left.size()) > eps * left.size() + 1e-9) {
            v.failure = "degree of vertex " + std::to_string(x) + " outside (d +- eps)|A|";
            return v;
        }
    auto reg = is_eps_regular(g, left, right, eps, 0.0, seed, cfg);
    if (!reg.ok) return reg;
    if (std::abs(pair_density(g, left, right) - d) > eps + 1e-9) {
        reg.ok = false;
        reg.failure = "pair density away from d";
    }
    return reg;
}

RegularityVerdict is_sparse_superregular(const Graph& g, const std::vector<int>& left,
                                         const std::vector<int>& right, double eps, double d,
                                         double dstar, double c, std::uint64_t seed,
                                         const ToleranceConfig& cfg) {
    RegularityVerdict v;
    if (left.size() != right.size())
        throw domain_error("sparse superregularity needs equal class sizes");
    double m = static_cast<double>(left.size());
    std::vector<char> lm(g.n(), 0), rm(g.n(), 0);
    for (int x : left) lm[x] = 1;
    for (int x : right) rm[x] = 1;
    for (int side = 0; side < 2; ++side) {
        const auto& verts = side == 0 ? left : right;
        const auto& other = side == 0 ? rm : lm;
        for (int x : verts) {
            double deg = g.degree_into(x, other);
            if (deg > c * m + 1e-9) {
                v.failure = "Reg3: degree above c m at vertex " + std::to_string(x);
                return v;
            }
            if (deg < dstar * m - 1e-9) {
                v.failure = "Reg4: degree below d* m at vertex " + std::to_string(x);
                return v;
            }
        }
    }
    for (int side = 0; side < 2; ++side) {
        const auto& verts = side == 0 ? left : right;
        const auto& other = side == 0 ? rm : lm;
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j) {
                int cd = 0;
                for (int w : g.neighbors(verts[i]))
                    if (other[w] && g.has_edge(verts[j], w)) ++cd;
                if (cd > c * c * m + 1e-9) {
                    v.failure = "Reg2: codegree above c^2 m";
                    return v;
                }
            }
    }
    auto rs = scan_dispatch(g, left, right, eps, seed, cfg, v.exact);
    if (rs.lo_density < (1 - eps) * d - 1e-9 || rs.hi_density > (1 + eps) * d + 1e-9) {
        v.failure = "Reg1: subset density outside (1 +- eps) d";
        return v;
    }
    v.ok = true;
    return v;
}

std::pair<Graph, Graph> sparse_split(const Graph& g, const std::vector<int>& left,
                                     const std::vector<int>& right, double gamma, double eps,
                                     const ToleranceConfig& cfg, std::uint64_t seed) {
    if (left.size() != right.size()) throw domain_error("sparse_split: equal class sizes required");
    double m = static_cast<double>(left.size());
    std::vector<char> lm(g.n(), 0), rm(g.n(), 0);
    for (int x : left) lm[x] = 1;
    for (int x : right) rm[x] = 1;
    double avg = 0;
    for (int x : left) avg += g.degree_into(x, rm);
    avg /= std::max(1.0, m);
    double mu_hat = 1.0 - avg / m;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int attempt = 0; attempt < std::max(1, cfg.retry_budget); ++attempt) {
        Graph h(g.n());
        for (auto [u, v] : g.edges())
            if (coin(rng) < 2 * gamma) h.add_edge(u, v);
        auto rest = g.graph_minus(h);
        bool ok = true;
        for (int x : left)
            if (std::abs(rest.degree_into(x, rm) - (1 - mu_hat) * m) > 4 * gamma * m) ok = false;
        for (int x : right)
            if (std::abs(rest.degree_into(x, lm) - (1 - mu_hat) * m) > 4 * gamma * m) ok = false;
        if (!ok) continue;
        auto verdict = is_sparse_superregular(h, left, right, eps, 2 * gamma, gamma, 3 * gamma,
                                              seed + attempt, cfg);
        if (verdict.ok) return {h, rest};
    }
    throw tolerance_error("sparse_split: retry budget exhausted", 0);
}

}  // namespace structure
}  // namespace hamdec
