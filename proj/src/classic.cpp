#include "hamdec/classic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "hamdec/flow.hpp"
#include "hamdec/generators.hpp"
#include "hamdec/matching.hpp"

namespace hamdec {
namespace classic {

Decomposition walecki(int n) {
    if (n < 3 || n % 2 == 0) throw domain_error("walecki: n must be odd, n >= 3");
    int m = n - 1, hub = n - 1;
    Decomposition dec;
    dec.host = gen_complete(n);
    for (int j = 0; j < m / 2; ++j) {
        std::vector<int> cyc;
        cyc.push_back(hub);
        cyc.push_back(j);
        for (int t = 1; t < m; ++t) {
            int off = (t % 2 == 1) ? (t + 1) / 2 : -(t / 2);
            cyc.push_back(((j + off) % m + m) % m);
        }
        dec.cycles.push_back(std::move(cyc));
    }
    dec.complete = true;
    dec.canonicalize();
    return dec;
}

Decomposition bipartite_ham_decompose(int k) {
    if (k < 2 || k % 2 != 0) throw domain_error("bipartite_ham_decompose: k must be even, k >= 2");
    Decomposition dec;
    dec.host = gen_complete_bipartite(k, k);
    // cycle j uses the "difference classes" 2j and 2j-1 (mod k)
    for (int j = 0; j < k / 2; ++j) {
        std::vector<int> cyc;
        for (int i = 0; i < k; ++i) {
            cyc.push_back(i);
            cyc.push_back(k + (i + 2 * j) % k);
        }
        dec.cycles.push_back(std::move(cyc));
    }
    dec.complete = true;
    dec.canonicalize();
    return dec;
}

namespace {

// Hierholzer, starting at the minimum-index vertex of each component.
std::vector<std::vector<int>> euler_circuits(const Graph& g) {
    int n = g.n();
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (to, edge id)
    auto edges = g.edges();
    for (int id = 0; id < static_cast<int>(edges.size()); ++id) {
        auto [u, v] = edges[id];
        adj[u].push_back({v, id});
        adj[v].push_back({u, id});
    }
    std::vector<char> used(edges.size(), 0);
    std::vector<size_t> it(n, 0);
    std::vector<std::vector<int>> circuits;
    for (int s = 0; s < n; ++s) {
        if (adj[s].empty() || it[s] < adj[s].size()) {
            if (g.degree(s) == 0) continue;
            bool fresh = true;
            for (auto [to, id] : adj[s])
                if (used[id]) fresh = false;
            if (!fresh && it[s] >= adj[s].size()) continue;
            // skip starts already consumed by an earlier circuit
            bool any_unused = false;
            for (auto [to, id] : adj[s])
                if (!used[id]) any_unused = true;
            if (!any_unused) continue;
            std::vector<int> stack = {s}, circuit;
            while (!stack.empty()) {
                int v = stack.back();
                while (it[v] < adj[v].size() && used[adj[v][it[v]].second]) ++it[v];
                if (it[v] == adj[v].size()) {
                    circuit.push_back(v);
                    stack.pop_back();
                } else {
                    auto [to, id] = adj[v][it[v]];
                    used[id] = 1;
                    stack.push_back(to);
                }
            }
            circuit.pop_back();  // closing vertex repeats the start
            circuits.push_back(std::move(circuit));
        }
    }
    return circuits;
}

}  // namespace

Graph petersen_two_factor(const Graph& g) {
    int d = 0;
    if (!g.is_regular(&d) || d <= 0 || d % 2 != 0)
        throw domain_error("petersen_two_factor: graph must be regular of positive even degree");
    int n = g.n();
    // orient each component along its Euler circuit
    Digraph dir(n);
    for (const auto& c : euler_circuits(g))
        for (size_t i = 0; i < c.size(); ++i) dir.add_arc(c[i], c[(i + 1) % c.size()]);
    // bipartite double cover: left = out-copies, right = in-copies
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : dir.arcs()) adj[u].push_back(v);
    auto bm = hopcroft_karp(n, n, adj);
    if (bm.size != n) throw contract_error("petersen_two_factor: double cover has no perfect matching");
    Graph f(n);
    for (int u = 0; u < n; ++u) f.add_edge(u, bm.match_l[u]);
    return f;
}

namespace {

constexpr int kNoColor = -1;

struct Coloring {
    const Graph& g;
    int num_colors;
    // color[u][v]: color of edge uv, dense map
    std::vector<std::map<int, int>> col;

    Coloring(const Graph& g_, int c) : g(g_), num_colors(c), col(g_.n()) {}

    int get(int u, int v) const {
        auto it = col[u].find(v);
        return it == col[u].end() ? kNoColor : it->second;
    }
    void set(int u, int v, int c) { col[u][v] = col[v][u] = c; }
    void erase(int u, int v) {
        col[u].erase(v);
        col[v].erase(u);
    }
    bool used_at(int v, int c) const {
        for (auto [w, cc] : col[v])
            if (cc == c) return true;
        return false;
    }
    int free_at(int v) const {  // smallest free color
        std::vector<char> used(num_colors, 0);
        for (auto [w, cc] : col[v]) used[cc] = 1;
        for (int c = 0; c < num_colors; ++c)
            if (!used[c]) return c;
        return kNoColor;
    }
    int neighbor_with(int v, int c) const {
        for (auto [w, cc] : col[v])
            if (cc == c) return w;
        return -1;
    }
};

// Maximal fan of u starting at the uncolored endpoint v: each next fan
// vertex w has color(u, w) free on the previous fan vertex.
std::vector<int> build_fan(const Coloring& co, int u, int v) {
    std::vector<int> fan = {v};
    std::vector<char> in_fan(co.g.n(), 0);
    in_fan[v] = 1;
    for (;;) {
        int want = co.free_at(fan.back());
        int next = -1;
        for (auto [w, cc] : co.col[u])
            if (!in_fan[w] && cc == want) {
                next = w;
                break;
            }
        if (next < 0) break;
        fan.push_back(next);
        in_fan[next] = 1;
    }
    return fan;
}

// Swap colors c and d along the maximal cd-alternating path starting at u
// (the path is collected first, then recolored in one pass).
void invert_cd_path(Coloring& co, int u, int c, int d) {
    std::vector<std::pair<Edge, int>> path;  // (edge, old color)
    int prev = -1, cur = u, follow = d;
    for (;;) {
        int nxt = co.neighbor_with(cur, follow);
        if (nxt < 0 || nxt == prev) break;
        path.push_back({make_edge(cur, nxt), follow});
        prev = cur;
        cur = nxt;
        follow = (follow == d) ? c : d;
    }
    for (auto& [e, old] : path) {
        co.erase(e.first, e.second);
        co.set(e.first, e.second, old == d ? c : d);
    }
}

// Misra-Gries: color edge (u, v) given all previously colored edges.
void mg_color_edge(Coloring& co, int u, int v) {
    auto fan = build_fan(co, u, v);
    int c = co.free_at(u);
    int d = co.free_at(fan.back());
    if (c == kNoColor || d == kNoColor) throw contract_error("edge coloring ran out of colors");
    if (c != d && co.used_at(u, d)) {
        invert_cd_path(co, u, c, d);
        // the fan may be broken past some prefix; keep the longest prefix
        // that is still a fan
        std::vector<int> nf = {fan[0]};
        for (size_t i = 1; i < fan.size(); ++i) {
            int cc = co.get(u, fan[i]);
            if (cc == kNoColor || cc != co.free_at(nf.back())) break;
            nf.push_back(fan[i]);
        }
        fan = std::move(nf);
    }
    int w_idx = -1;
    for (int i = static_cast<int>(fan.size()) - 1; i >= 0; --i)
        if (!co.used_at(fan[i], d)) {
            w_idx = i;
            break;
        }
    if (w_idx == -1) throw contract_error("edge coloring: no rotation point");
    // rotate the fan prefix and finish with color d on (u, fan[w_idx])
    for (int i = 0; i < w_idx; ++i) {
        int cc = co.get(u, fan[i + 1]);
        co.erase(u, fan[i + 1]);
        co.set(u, fan[i], cc);
    }
    co.erase(u, fan[w_idx]);
    co.set(u, fan[w_idx], d);
}

std::vector<int> misra_gries(const Graph& g) {
    Coloring co(g, g.max_degree() + 1);
    auto edges = g.edges();
    for (auto [u, v] : edges) mg_color_edge(co, u, v);
    std::vector<int> out(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) {
        out[i] = co.get(edges[i].first, edges[i].second);
        if (out[i] == kNoColor) throw contract_error("edge coloring left an edge uncolored");
    }
    return out;
}

bool coloring_valid(const Graph& g, const std::vector<int>& col) {
    auto edges = g.edges();
    std::vector<std::set<int>> at(g.n());
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (!at[u].insert(col[i]).second) return false;
        if (!at[v].insert(col[i]).second) return false;
    }
    return true;
}

// Exact backtracking edge coloring with m colors (used only when the
// constructive bound m >= Delta+1 does not hold).
bool exact_color_rec(const EdgeList& edges, size_t i, int m, std::vector<int>& col,
                     std::vector<std::vector<char>>& used, int max_used) {
    if (i == edges.size()) return true;
    auto [u, v] = edges[i];
    int limit = std::min(m - 1, max_used + 1);
    for (int c = 0; c <= limit; ++c) {
        if (used[u][c] || used[v][c]) continue;
        used[u][c] = used[v][c] = 1;
        col[i] = c;
        if (exact_color_rec(edges, i + 1, m, col, used, std::max(max_used, c))) return true;
        used[u][c] = used[v][c] = 0;
    }
    return false;
}

}  // namespace

std::vector<int> edge_coloring(const Graph& g) {
    if (g.m() == 0) return {};
    try {
        auto col = misra_gries(g);
        if (coloring_valid(g, col)) return col;
    } catch (const contract_error&) {
        // fall through to the exact search; Vizing guarantees delta+1 colors
    }
    auto edges = g.edges();
    int m = g.max_degree() + 1;
    std::vector<int> col(edges.size(), -1);
    std::vector<std::vector<char>> used(g.n(), std::vector<char>(m, 0));
    if (!exact_color_rec(edges, 0, m, col, used, -1))
        throw contract_error("no (delta+1)-edge-coloring found; this cannot happen");
    return col;
}

std::vector<EdgeList> matching_decomposition(const Graph& g, int m) {
    if (m < 1) throw domain_error("matching_decomposition: m >= 1");
    auto edges = g.edges();
    std::vector<int> col;
    if (g.m() == 0) {
        col.clear();
    } else {
        col = edge_coloring(g);
        int used = *std::max_element(col.begin(), col.end()) + 1;
        if (used > m) {
            // Misra-Gries needed more classes than requested; fall back to an
            // exact search, which fails iff m < chi'(g).
            std::vector<int> ecol(edges.size(), -1);
            std::vector<std::vector<char>> used_at(g.n(), std::vector<char>(m, 0));
            if (!exact_color_rec(edges, 0, m, ecol, used_at, -1))
                throw infeasible_error("matching_decomposition: m below the chromatic index");
            col = std::move(ecol);
        }
    }
    std::vector<EdgeList> parts(m);
    for (size_t i = 0; i < edges.size(); ++i) parts[col[i]].push_back(edges[i]);

    // Rebalance: while two classes differ by >= 2, swap along a path of their
    // symmetric difference (a union of two matchings is paths and even cycles;
    // some path has a surplus of the bigger class).
    for (;;) {
        auto big = std::max_element(parts.begin(), parts.end(),
                                    [](auto& a, auto& b) { return a.size() < b.size(); });
        auto small = std::min_element(parts.begin(), parts.end(),
                                      [](auto& a, auto& b) { return a.size() < b.size(); });
        if (big->size() <= small->size() + 1) break;
        std::vector<int> other(g.n(), -1);  // partner along small
        std::vector<int> bigp(g.n(), -1);
        for (auto [u, v] : *small) other[u] = v, other[v] = u;
        for (auto [u, v] : *big) bigp[u] = v, bigp[v] = u;
        // walk components; find a path with one more big-edge than small-edge
        std::vector<char> seen(g.n(), 0);
        bool swapped = false;
        for (int s = 0; s < g.n() && !swapped; ++s) {
            if (seen[s] || (bigp[s] < 0 && other[s] < 0)) continue;
            if (bigp[s] >= 0 && other[s] >= 0) continue;  // interior vertex, start from an end
            // trace the alternating path from the free end s
            std::vector<Edge> from_big, from_small;
            int cur = s;
            bool take_big = bigp[s] >= 0;
            seen[cur] = 1;
            while (true) {
                int nxt = take_big ? bigp[cur] : other[cur];
                if (nxt < 0) break;
                (take_big ? from_big : from_small).push_back(make_edge(cur, nxt));
                cur = nxt;
                seen[cur] = 1;
                take_big = !take_big;
            }
            if (from_big.size() == from_small.size() + 1) {
                // swap the path between the two classes
                auto remove_all = [](EdgeList& xs, const std::vector<Edge>& del) {
                    for (auto e : del) xs.erase(std::find(xs.begin(), xs.end(), e));
                };
                remove_all(*big, from_big);
                remove_all(*small, from_small);
                for (auto e : from_small) big->push_back(e);
                for (auto e : from_big) small->push_back(e);
                swapped = true;
            }
        }
        if (!swapped) throw contract_error("matching rebalance found no augmenting path");
    }
    for (auto& p : parts) std::sort(p.begin(), p.end());
    return parts;
}

namespace {

bool bipartition_of(const Graph& g, std::vector<char>& side) {
    side.assign(g.n(), 0);
    std::vector<int> color(g.n(), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> stack = {s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (color[w] < 0) {
                    color[w] = color[v] ^ 1;
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    for (int v = 0; v < g.n(); ++v) side[v] = static_cast<char>(color[v]);
    return true;
}

}  // namespace

std::vector<EdgeList> even_matchings(const Graph& h, int t) {
    if (t < 1) throw domain_error("even_matchings: t >= 1");
    std::vector<char> side;
    if (!bipartition_of(h, side)) throw domain_error("even_matchings: graph is not bipartite");
    long long e = h.m();
    if (e % 2 != 0) throw infeasible_error("even_matchings: e(H) must be even");
    if (e < 2 * t) throw infeasible_error("even_matchings: e(H) >= 2t required");
    int delta = h.max_degree();
    int nprime = std::max(1, (2 * t) / 3);
    if (delta > nprime) {
        if (delta > t) throw infeasible_error("even_matchings: max degree above t");
        nprime = delta;
    }
    auto parts = matching_decomposition(h, nprime);
    // pair off odd matchings: M_s - e, M_s' - e', {e, e'}
    std::vector<EdgeList> odd, result;
    for (auto& p : parts) {
        if (p.empty()) continue;
        if (p.size() % 2 == 0)
            result.push_back(std::move(p));
        else
            odd.push_back(std::move(p));
    }
    for (size_t i = 0; i + 1 < odd.size(); i += 2) {
        EdgeList &ms = odd[i], &mt = odd[i + 1];
        if (ms.size() < 3 || mt.size() < 3)
            throw infeasible_error("even_matchings: odd matching too small to repair");
        Edge e1 = ms[0];
        // pick an edge of mt disjoint from e1, then an edge of ms disjoint from it
        auto disjoint = [](Edge a, Edge b) {
            return a.first != b.first && a.first != b.second && a.second != b.first &&
                   a.second != b.second;
        };
        Edge e2{-1, -1};
        for (auto cand : mt)
            if (disjoint(cand, e1)) {
                e2 = cand;
                break;
            }
        if (e2.first < 0) {
            // e1 touches everything in mt (possible only for tiny mt); swap roles
            for (auto c1 : ms) {
                for (auto c2 : mt)
                    if (disjoint(c1, c2)) {
                        e1 = c1;
                        e2 = c2;
                        break;
                    }
                if (e2.first >= 0) break;
            }
            if (e2.first < 0) throw infeasible_error("even_matchings: no disjoint repair pair");
        }
        ms.erase(std::find(ms.begin(), ms.end(), e1));
        mt.erase(std::find(mt.begin(), mt.end(), e2));
        result.push_back(std::move(ms));
        result.push_back(std::move(mt));
        result.push_back({e1, e2});
    }
    // split large even matchings until we have exactly t
    while (static_cast<int>(result.size()) < t) {
        auto big = std::max_element(result.begin(), result.end(),
                                    [](auto& a, auto& b) { return a.size() < b.size(); });
        if (big->size() < 4) throw infeasible_error("even_matchings: cannot split further");
        size_t half = big->size() / 2;
        if (half % 2 == 1) ++half;
        EdgeList tail(big->begin() + half, big->end());
        big->resize(half);
        result.push_back(std::move(tail));
    }
    if (static_cast<int>(result.size()) != t)
        throw infeasible_error("even_matchings: produced " + std::to_string(result.size()) +
                               " matchings, wanted " + std::to_string(t));
    long long cap = 3 * e / t;
    for (auto& p : result) {
        if (p.empty() || p.size() % 2 != 0 || static_cast<long long>(p.size()) > cap)
            throw infeasible_error("even_matchings: size constraint violated");
        std::sort(p.begin(), p.end());
    }
    return result;
}

Graph regular_bipartite_subgraph(const Graph& gamma, const std::vector<int>& left,
                                 const std::vector<int>& right, double mu, double rho) {
    if (left.size() != right.size()) throw domain_error("classes must have equal size");
    int m = static_cast<int>(left.size());
    double target_real = (1.0 - mu - rho) * m;
    long long target = std::llround(target_real);
    if (std::abs(target_real - target) > 1e-9)
        throw domain_error("(1-mu-rho)m must be integral");
    if (target < 0) throw domain_error("negative target degree");

    std::vector<int> pos(gamma.n(), -1);
    for (int i = 0; i < m; ++i) pos[left[i]] = i;
    for (int i = 0; i < m; ++i) pos[right[i]] = m + i;

    int S = 2 * m, T = 2 * m + 1;
    MaxFlow mf(2 * m + 2);
    for (int i = 0; i < m; ++i) mf.add_edge(S, i, target);
    for (int i = 0; i < m; ++i) mf.add_edge(m + i, T, target);
    std::vector<std::pair<int, Edge>> ids;
    for (auto [u, v] : gamma.edges()) {
        int pu = pos[u], pv = pos[v];
        if (pu < 0 || pv < 0) throw domain_error("edge endpoint outside the two classes");
        if ((pu < m) == (pv < m)) throw domain_error("graph is not bipartite on (left, right)");
        if (pu >= m) std::swap(pu, pv);
        ids.push_back({mf.add_edge(pu, pv, 1), {u, v}});
    }
    long long value = mf.run(S, T);
    if (value != target * m)
        throw infeasible_error("regular_bipartite_subgraph: max flow " + std::to_string(value) +
                               " below " + std::to_string(target * m) + "; hypotheses violated");
    Graph sub(gamma.n());
    for (auto& [id, e] : ids)
        if (mf.flow_on(id) > 0) sub.add_edge(e.first, e.second);
    return sub;
}

std::vector<int> dirac_hamilton(const Graph& g, std::uint64_t seed) {
    int n = g.n();
    if (n < 3) throw domain_error("dirac_hamilton: n >= 3");
    if (2 * g.min_degree() < n)
        throw domain_error("dirac_hamilton: min degree below n/2");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<int> path = {order[0]};
    std::vector<char> on_path(n, 0);
    on_path[order[0]] = 1;

    auto extend_front_back = [&]() {
        bool grew = true;
        while (grew) {
            grew = false;
            for (int v : g.neighbors(path.back()))
                if (!on_path[v]) {
                    path.push_back(v);
                    on_path[v] = 1;
                    grew = true;
                    break;
                }
            if (grew) continue;
            for (int v : g.neighbors(path.front()))
                if (!on_path[v]) {
                    std::reverse(path.begin(), path.end());
                    path.push_back(v);
                    on_path[v] = 1;
                    grew = true;
                    break;
                }
        }
    };

    while (static_cast<int>(path.size()) < n || !g.has_edge(path.front(), path.back())) {
        extend_front_back();
        int k = static_cast<int>(path.size());
        // close the path into a cycle
        std::vector<int> cycle;
        if (g.has_edge(path.front(), path.back())) {
            cycle = path;
        } else {
            // crossing pair: v0 adj path[i+1] and vk adj path[i]
            int found = -1;
            std::vector<char> adj0(n, 0);
            for (int v : g.neighbors(path.front())) adj0[v] = 1;
            for (int i = 0; i + 1 < k; ++i) {
                if (adj0[path[i + 1]] && g.has_edge(path.back(), path[i])) {
                    found = i;
                    break;
                }
            }
            if (found < 0) throw contract_error("dirac_hamilton: no crossing pair on a maximal path");
            cycle.assign(path.begin(), path.begin() + found + 1);
            for (int i = k - 1; i > found; --i) cycle.push_back(path[i]);
        }
        if (static_cast<int>(cycle.size()) == n) return cycle;
        // absorb an outside vertex adjacent to the cycle
        int out = -1, at = -1;
        for (int cand : order) {
            if (on_path[cand]) continue;
            for (int i = 0; i < static_cast<int>(cycle.size()); ++i)
                if (g.has_edge(cand, cycle[i])) {
                    out = cand;
                    at = i;
                    break;
                }
            if (out >= 0) break;
        }
        if (out < 0) throw contract_error("dirac_hamilton: cycle has no outside neighbour");
        path.clear();
        path.push_back(out);
        for (int i = 0; i < static_cast<int>(cycle.size()); ++i)
            path.push_back(cycle[(at + i) % cycle.size()]);
        on_path[out] = 1;
    }
    return path;
}

EdgeList regular_perfect_matching(const Graph& g) {
    int d = 0;
    if (g.n() % 2 != 0) throw domain_error("regular_perfect_matching: n must be even");
    if (!g.is_regular(&d)) throw domain_error("regular_perfect_matching: graph must be regular");
    if (d < 2 * ((g.n() + 3) / 4) - 1)
        throw domain_error("regular_perfect_matching: D below 2 ceil(n/4) - 1");
    auto pm = perfect_matching(g);
    if (!pm) throw contract_error("regular_perfect_matching: matching guaranteed but not found");
    return *pm;
}

RegEven reg_even(const Graph& g) {
    RegEven out;
    out.witness = Graph(g.n());
    int start = g.max_degree();
    if (start % 2 != 0) --start;
    for (int r = start; r >= 2; r -= 2) {
        auto sub = r_factor(g, r);
        if (sub) {
            out.r = r;
            out.witness = std::move(*sub);
            return out;
        }
    }
    return out;
}

std::vector<EdgeList> split_into_path_systems(const Graph& g, const std::vector<int>& a0, int D) {
    if (D < 2 || D % 2 != 0) throw domain_error("split_into_path_systems: D must be even, >= 2");
    int n = g.n();
    std::vector<char> in_a0(n, 0);
    for (int v : a0) {
        if (v < 0 || v >= n) throw domain_error("a0 vertex out of range");
        in_a0[v] = 1;
    }
    if (g.max_degree() > D - 2) throw domain_error("split_into_path_systems: max degree above D-2");
    for (int v = 0; v < n; ++v)
        if (!in_a0[v] && g.degree(v) > D / 2 - 1)
            throw domain_error("split_into_path_systems: degree off a0 above D/2-1");
    for (int v : a0) {
        int da0 = 0;
        for (int w : g.neighbors(v)) da0 += in_a0[w];
        if (da0 > D / 2 - 1) throw domain_error("split_into_path_systems: g[a0] degree above D/2-1");
    }

    // g1: maximal subgraph containing g[a0] and g[V \ a0] with degrees <= D/2-1
    Graph g1(n);
    std::vector<int> deg1(n, 0);
    EdgeList rest;
    for (auto [u, v] : g.edges()) {
        if (in_a0[u] == in_a0[v]) {
            g1.add_edge(u, v);
            ++deg1[u];
            ++deg1[v];
        } else {
            rest.push_back({u, v});
        }
    }
    EdgeList g2;  // a0-to-outside edges that do not fit in g1
    for (auto [u, v] : rest) {
        if (deg1[u] < D / 2 - 1 && deg1[v] < D / 2 - 1) {
            g1.add_edge(u, v);
            ++deg1[u];
            ++deg1[v];
        } else {
            g2.push_back({u, v});
        }
    }

    // auxiliary graph: clone each a0 vertex; g2 edges attach to the clone
    std::vector<int> clone(n, -1);
    int total = n;
    for (int v : a0) clone[v] = total++;
    Graph aux(total);
    for (auto [u, v] : g1.edges()) aux.add_edge(u, v);
    for (auto [u, v] : g2) {
        int av = in_a0[u] ? u : v;     // the a0 endpoint
        int xv = in_a0[u] ? v : u;
        aux.add_edge(clone[av], xv);
    }

    auto parts = matching_decomposition(aux, D / 2);
    std::vector<EdgeList> out(parts.size());
    std::vector<int> back(total);
    std::iota(back.begin(), back.end(), 0);
    for (int v : a0) back[clone[v]] = v;
    for (size_t i = 0; i < parts.size(); ++i)
        for (auto [u, v] : parts[i]) out[i].push_back(make_edge(back[u], back[v]));
    for (auto& p : out) std::sort(p.begin(), p.end());
    return out;
}

}  // namespace classic
}  // namespace hamdec
