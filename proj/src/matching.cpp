#include "hamdec/matching.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace hamdec {

BipartiteMatching hopcroft_karp(int nl, int nr, const std::vector<std::vector<int>>& adj) {
    const int INF = 1 << 29;
    BipartiteMatching bm;
    bm.match_l.assign(nl, -1);
    bm.match_r.assign(nr, -1);
    std::vector<int> dist(nl);

    auto bfs = [&]() {
        std::queue<int> q;
        for (int u = 0; u < nl; ++u) {
            if (bm.match_l[u] < 0) {
                dist[u] = 0;
                q.push(u);
            } else {
                dist[u] = INF;
            }
        }
        bool found = false;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                int w = bm.match_r[v];
                if (w < 0) {
                    found = true;
                } else if (dist[w] == INF) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    };
    std::function<bool(int)> dfs = [&](int u) {
        for (int v : adj[u]) {
            int w = bm.match_r[v];
            if (w < 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
                bm.match_l[u] = v;
                bm.match_r[v] = u;
                return true;
            }
        }
        dist[u] = INF;
        return false;
    };
    while (bfs())
        for (int u = 0; u < nl; ++u)
            if (bm.match_l[u] < 0 && dfs(u)) ++bm.size;
    return bm;
}

// Standard O(V^3) blossom algorithm (contract-and-augment).
std::vector<int> blossom_maximum_matching(const Graph& g) {
    int n = g.n();
    std::vector<int> match(n, -1), p(n), base(n);
    std::vector<char> used(n), blossom(n);

    auto lca = [&](int a, int b) {
        std::vector<char> used2(n, 0);
        for (;;) {
            a = base[a];
            used2[a] = 1;
            if (match[a] < 0) break;
            a = p[match[a]];
        }
        for (;;) {
            b = base[b];
            if (used2[b]) return b;
            b = p[match[b]];
        }
    };
    auto mark_path = [&](int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = 1;
            blossom[base[match[v]]] = 1;
            p[v] = child;
            child = match[v];
            v = p[match[v]];
        }
    };
    auto find_path = [&](int root) -> int {
        std::fill(used.begin(), used.end(), 0);
        std::fill(p.begin(), p.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g.neighbors(v)) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] >= 0 && p[match[to]] >= 0)) {
                    int curbase = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, curbase, to);
                    mark_path(to, curbase, v);
                    for (int i = 0; i < n; ++i) {
                        if (blossom[base[i]]) {
                            base[i] = curbase;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (p[to] < 0) {
                    p[to] = v;
                    if (match[to] < 0) return to;
                    used[match[to]] = 1;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    };

    for (int v = 0; v < n; ++v) {
        if (match[v] < 0) {
            int u = find_path(v);
            while (u >= 0) {
                int pv = p[u], ppv = match[pv];
                match[u] = pv;
                match[pv] = u;
                u = ppv;
            }
        }
    }
    return match;
}

std::optional<EdgeList> perfect_matching(const Graph& g) {
    if (g.n() % 2 != 0) return std::nullopt;
    auto mate = blossom_maximum_matching(g);
    EdgeList out;
    for (int v = 0; v < g.n(); ++v) {
        if (mate[v] < 0) return std::nullopt;
        if (v < mate[v]) out.push_back({v, mate[v]});
    }
    return out;
}

std::optional<Graph> r_factor(const Graph& g, int r) {
    int n = g.n();
    if (r < 0) throw domain_error("r_factor: r >= 0");
    if (r == 0) return Graph(n);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < r) return std::nullopt;
    if ((static_cast<long long>(n) * r) % 2 != 0) return std::nullopt;

    // Degree gadget: vertex v with degree d contributes d external nodes (one
    // per incident edge) plus d - r core nodes joined to all its externals.
    // Each edge uv links the two matching externals.  A perfect matching of
    // the gadget leaves exactly r externals per vertex matched along real
    // edges, i.e. an r-factor.
    auto edges = g.edges();
    int total = 0;
    std::vector<int> ext_base(n), core_base(n);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (int v = 0; v < n; ++v) {
        ext_base[v] = total;
        total += deg[v];
        core_base[v] = total;
        total += deg[v] - r;
    }
    Graph gadget(total);
    std::vector<int> slot(n, 0);
    std::vector<std::pair<int, int>> edge_ext(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        int eu = ext_base[u] + slot[u]++;
        int ev = ext_base[v] + slot[v]++;
        edge_ext[i] = {eu, ev};
        gadget.add_edge(eu, ev);
    }
    for (int v = 0; v < n; ++v)
        for (int e = 0; e < deg[v]; ++e)
            for (int c = 0; c < deg[v] - r; ++c)
                gadget.add_edge(ext_base[v] + e, core_base[v] + c);

    auto mate = blossom_maximum_matching(gadget);
    for (int v = 0; v < total; ++v)
        if (mate[v] < 0) return std::nullopt;

    Graph sub(n);
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [eu, ev] = edge_ext[i];
        if (mate[eu] == ev) sub.add_edge(edges[i].first, edges[i].second);
    }
    return sub;
}

}  // namespace hamdec
