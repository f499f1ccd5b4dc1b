#include "hamdec/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hamdec {
namespace oracle {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point end;
    bool unlimited;
    mutable int tick = 0;
    explicit Deadline(double sec) : unlimited(sec > 1e9) {
        if (!unlimited)
            end = Clock::now() +
                  std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(sec));
    }
    void check() const {
        if (!unlimited && ++tick % 4096 == 0 && Clock::now() > end)
            throw resource_error("oracle search exceeded its deadline");
    }
};

std::string edge_str(int u, int v) {
    return std::to_string(std::min(u, v)) + "-" + std::to_string(std::max(u, v));
}

}  // namespace

Certificate verify_decomposition(const Graph& g, const Decomposition& d) {
    Certificate c;
    std::set<Edge> used;
    long long total = 0;
    auto claim = [&](const EdgeList& part, const std::string& what) -> bool {
        for (auto e : part) {
            if (!g.has_edge(e.first, e.second)) {
                c = {false, "containment", what + " uses non-edge " + edge_str(e.first, e.second)};
                return false;
            }
            if (!used.insert(e).second) {
                c = {false, "disjointness", "edge " + edge_str(e.first, e.second) + " repeated in " + what};
                return false;
            }
        }
        total += static_cast<long long>(part.size());
        return true;
    };
    for (size_t i = 0; i < d.cycles.size(); ++i) {
        if (!is_hamilton_cycle(g, d.cycles[i]))
            return {false, "hamilton", "cycle " + std::to_string(i) + " is not a Hamilton cycle"};
        if (!claim(cycle_edges(d.cycles[i]), "cycle " + std::to_string(i))) return c;
    }
    for (size_t i = 0; i < d.matchings.size(); ++i) {
        if (!is_perfect_matching(g, d.matchings[i]))
            return {false, "matching", "matching " + std::to_string(i) + " is not perfect"};
        if (!claim(d.matchings[i], "matching " + std::to_string(i))) return c;
    }
    if (d.complete && total != g.m())
        return {false, "completeness",
                "covers " + std::to_string(total) + " of " + std::to_string(g.m()) + " edges"};
    if (!d.complete && total == g.m() && g.m() > 0)
        return {false, "completeness", "flag says incomplete but all edges covered"};
    return c;
}

namespace {

// Enumerates perfect matchings of `g` restricted to `alive` vertices, calling
// f(matching); f returns true to stop the whole enumeration.
bool enum_perfect_matchings(const Graph& g, std::vector<char>& alive, EdgeList& acc,
                            const Deadline& dl, const std::function<bool(const EdgeList&)>& f) {
    dl.check();
    int u = -1;
    for (int v = 0; v < g.n(); ++v)
        if (alive[v]) {
            u = v;
            break;
        }
    if (u < 0) return f(acc);
    for (int v : g.neighbors(u)) {
        if (!alive[v]) continue;
        alive[u] = alive[v] = 0;
        acc.push_back(make_edge(u, v));
        bool stop = enum_perfect_matchings(g, alive, acc, dl, f);
        acc.pop_back();
        alive[u] = alive[v] = 1;
        if (stop) return true;
    }
    return false;
}

bool one_fact_rec(Graph& g, int factors_left, std::vector<EdgeList>& acc, const Deadline& dl) {
    if (factors_left == 0) return g.m() == 0;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) != factors_left) return false;  // stays regular along any valid branch
    std::vector<char> alive(g.n(), 1);
    EdgeList cur;
    bool found = false;
    enum_perfect_matchings(g, alive, cur, dl, [&](const EdgeList& m) {
        for (auto [u, v] : m) g.remove_edge(u, v);
        acc.push_back(m);
        if (one_fact_rec(g, factors_left - 1, acc, dl)) {
            found = true;
        } else {
            acc.pop_back();
        }
        if (!found)
            for (auto [u, v] : m) g.add_edge(u, v);
        return found;
    });
    return found;
}

}  // namespace

std::optional<Decomposition> brute_one_factorization(const Graph& g, int cap, double deadline_sec) {
    if (g.n() > cap)
        throw resource_error("brute_one_factorization: n=" + std::to_string(g.n()) +
                             " above cap " + std::to_string(cap));
    int d = 0;
    if (g.n() % 2 != 0 || !g.is_regular(&d))
        throw domain_error("brute_one_factorization needs an even-order regular graph");
    Deadline dl(deadline_sec);
    Graph work = g;
    std::vector<EdgeList> acc;
    if (!one_fact_rec(work, d, acc, dl)) return std::nullopt;
    Decomposition dec;
    dec.host = g;
    dec.matchings = std::move(acc);
    dec.complete = true;
    dec.canonicalize();
    return dec;
}

namespace {

// Enumerates Hamilton cycles of the spanning subgraph `g` that pass through
// the edge (eu, ev).  f returns true to stop.
struct HamEnum {
    const Graph& g;
    const Deadline& dl;
    std::vector<int> path;
    std::vector<char> seen;
    std::function<bool(const std::vector<int>&)> f;

    HamEnum(const Graph& g_, const Deadline& dl_) : g(g_), dl(dl_), seen(g_.n(), 0) {}

    bool run(int eu, int ev) {
        path = {eu, ev};
        seen.assign(g.n(), 0);
        seen[eu] = seen[ev] = 1;
        return extend();
    }

    bool extend() {
        dl.check();
        if (static_cast<int>(path.size()) == g.n()) {
            // the first edge is fixed, so every cycle through it shows up
            // exactly once (direction forced by the start)
            if (g.has_edge(path.back(), path.front())) return f(path);
            return false;
        }
        int u = path.back();
        for (int v : g.neighbors(u)) {
            if (seen[v]) continue;
            seen[v] = 1;
            path.push_back(v);
            if (extend()) return true;
            path.pop_back();
            seen[v] = 0;
        }
        return false;
    }
};

Edge smallest_edge(const Graph& g) {
    for (int u = 0; u < g.n(); ++u)
        if (g.degree(u) > 0) return {u, g.neighbors(u)[0]};
    return {-1, -1};
}

bool ham_dec_rec(Graph& g, std::vector<std::vector<int>>& acc, const Deadline& dl) {
    if (g.m() == 0) return true;
    // Hamilton cycles are spanning, so the remaining graph must be regular of
    // positive even degree.
    int d = 0;
    if (!g.is_regular(&d) || d == 0 || d % 2 != 0) return false;
    auto [eu, ev] = smallest_edge(g);
    HamEnum he(g, dl);
    bool found = false;
    he.f = [&](const std::vector<int>& cyc) {
        auto ces = cycle_edges(cyc);
        for (auto [u, v] : ces) g.remove_edge(u, v);
        acc.push_back(cyc);
        if (ham_dec_rec(g, acc, dl)) {
            found = true;
        } else {
            acc.pop_back();
        }
        if (!found)
            for (auto [u, v] : ces) g.add_edge(u, v);
        return found;
    };
    he.run(eu, ev);
    return found;
}

}  // namespace

std::optional<Decomposition> brute_ham_decomposition(const Graph& g, int cap, double deadline_sec) {
    if (g.n() > cap)
        throw resource_error("brute_ham_decomposition: n above cap");
    if (g.n() < 3) return std::nullopt;
    Deadline dl(deadline_sec);
    Graph work = g;
    std::vector<std::vector<int>> acc;
    if (!ham_dec_rec(work, acc, dl)) return std::nullopt;
    Decomposition dec;
    dec.host = g;
    dec.cycles = std::move(acc);
    dec.complete = true;
    dec.canonicalize();
    return dec;
}

namespace {

// Branch on the smallest remaining edge: either no cycle of the packing uses
// it (delete it), or some cycle does (enumerate those cycles).
void packing_rec(Graph& g, std::vector<std::vector<int>>& cur, Packing& best, const Deadline& dl) {
    dl.check();
    if (static_cast<int>(cur.size()) > best.count) {
        best.count = static_cast<int>(cur.size());
        best.cycles = cur;
    }
    int bound = static_cast<int>(cur.size()) + g.min_degree() / 2;
    if (bound <= best.count || g.m() < g.n()) return;
    auto [eu, ev] = smallest_edge(g);

    HamEnum he(g, dl);
    he.f = [&](const std::vector<int>& cyc) {
        auto ces = cycle_edges(cyc);
        for (auto [u, v] : ces) g.remove_edge(u, v);
        cur.push_back(cyc);
        packing_rec(g, cur, best, dl);
        cur.pop_back();
        for (auto [u, v] : ces) g.add_edge(u, v);
        return false;  // keep enumerating
    };
    he.run(eu, ev);

    g.remove_edge(eu, ev);
    packing_rec(g, cur, best, dl);
    g.add_edge(eu, ev);
}

}  // namespace

Packing max_ham_packing(const Graph& g, int cap, double deadline_sec) {
    if (g.n() > cap) throw resource_error("max_ham_packing: n above cap");
    Packing best;
    if (g.n() < 3) return best;
    Deadline dl(deadline_sec);
    Graph work = g;
    std::vector<std::vector<int>> cur;
    packing_rec(work, cur, best, dl);
    return best;
}

namespace {

struct CappedMaxSearch {
    const EdgeList& edges;
    int b;
    std::vector<int> deg;       // chosen degree per vertex
    std::vector<long long> rem; // remaining incident edges per vertex from position i on

    long long run(size_t i, long long chosen, long long best_known) {
        long long best = chosen;
        if (i == edges.size()) return best;
        // bound: all remaining edges taken
        if (chosen + static_cast<long long>(edges.size() - i) <= best_known) return best;
        auto [u, v] = edges[i];
        if (deg[u] < b && deg[v] < b) {
            ++deg[u];
            ++deg[v];
            best = std::max(best, run(i + 1, chosen + 1, std::max(best_known, best)));
            --deg[u];
            --deg[v];
        }
        best = std::max(best, run(i + 1, chosen, std::max(best_known, best)));
        return best;
    }
};

}  // namespace

long long brute_degree_capped_max_serial(const Graph& g_cross, int b, int edge_cap) {
    auto edges = g_cross.edges();
    if (static_cast<int>(edges.size()) > edge_cap)
        throw resource_error("brute_degree_capped_max: e=" + std::to_string(edges.size()) +
                             " above cap " + std::to_string(edge_cap));
    if (b <= 0) return 0;
    CappedMaxSearch s{edges, b, std::vector<int>(g_cross.n(), 0), {}};
    return s.run(0, 0, 0);
}

long long brute_degree_capped_max_parallel(const Graph& g_cross, int b, int edge_cap) {
    auto edges = g_cross.edges();
    if (static_cast<int>(edges.size()) > edge_cap)
        throw resource_error("brute_degree_capped_max: edge count above cap");
    if (b <= 0) return 0;
    int split = std::min<int>(10, static_cast<int>(edges.size()));
    int prefixes = 1 << split;
    long long best = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(max : best)
#endif
    for (int mask = 0; mask < prefixes; ++mask) {
        std::vector<int> deg(g_cross.n(), 0);
        long long chosen = 0;
        bool ok = true;
        for (int i = 0; i < split && ok; ++i) {
            if (mask & (1 << i)) {
                auto [u, v] = edges[i];
                if (deg[u] >= b || deg[v] >= b) {
                    ok = false;
                } else {
                    ++deg[u];
                    ++deg[v];
                    ++chosen;
                }
            }
        }
        if (!ok) continue;
        CappedMaxSearch s{edges, b, deg, {}};
        long long val = s.run(split, chosen, 0);
        best = std::max(best, val);
    }
    return best;
}

long long brute_degree_capped_max(const Graph& g_cross, int b, int edge_cap) {
#ifdef _OPENMP
    return brute_degree_capped_max_parallel(g_cross, b, edge_cap);
#else
    return brute_degree_capped_max_serial(g_cross, b, edge_cap);
#endif
}

namespace {

// Direct include/exclude search for a spanning r-regular subgraph.
bool r_factor_feasible_dfs(const EdgeList& edges, size_t i, int r, std::vector<int>& deg,
                           std::vector<int>& rem, const Deadline& dl) {
    dl.check();
    if (i == edges.size()) {
        for (int d : deg)
            if (d != r) return false;
        return true;
    }
    auto [u, v] = edges[i];
    // exclude first (different order from the flow route on purpose)
    --rem[u];
    --rem[v];
    bool ok = deg[u] + rem[u] >= r && deg[v] + rem[v] >= r &&
              r_factor_feasible_dfs(edges, i + 1, r, deg, rem, dl);
    if (!ok && deg[u] < r && deg[v] < r) {
        ++deg[u];
        ++deg[v];
        ok = r_factor_feasible_dfs(edges, i + 1, r, deg, rem, dl);
        --deg[u];
        --deg[v];
    }
    ++rem[u];
    ++rem[v];
    return ok;
}

bool has_r_factor_bruteforce(const Graph& g, int r, const Deadline& dl) {
    if (r == 0) return true;
    if ((static_cast<long long>(g.n()) * r) % 2 != 0) return false;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) < r) return false;
    auto edges = g.edges();
    std::vector<int> deg(g.n(), 0), rem(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) rem[v] = g.degree(v);
    return r_factor_feasible_dfs(edges, 0, r, deg, rem, dl);
}

}  // namespace

int reg_even_oracle(const Graph& g, int cap, double deadline_sec) {
    if (g.n() > cap) throw resource_error("reg_even_oracle: n above cap");
    Deadline dl(deadline_sec);
    int best = 0;
    for (int r = 2; r <= g.min_degree(); r += 2) {
        if (has_r_factor_bruteforce(g, r, dl))
            best = r;
        else
            break;  // spanning r-regular subgraphs are downward closed in even r
    }
    return best;
}

}  // namespace oracle
}  // namespace hamdec
