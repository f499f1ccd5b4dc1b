#include "hamdec/generators.hpp"

#include <algorithm>
#include <numeric>

namespace hamdec {

int degree_threshold(int n) {
    if (n < 3) throw domain_error("degree_threshold needs n >= 3");
    return n - 2 * (n / 4) - 1;
}

Graph gen_complete(int n) {
    if (n < 1) throw domain_error("complete: n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph gen_complete_bipartite(int a, int b) {
    if (a < 0 || b < 0 || a + b == 0) throw domain_error("complete_bipartite: bad sizes");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

static void add_clique(Graph& g, int lo, int hi) {  // vertices lo..hi-1
    for (int u = lo; u < hi; ++u)
        for (int v = u + 1; v < hi; ++v) g.add_edge(u, v);
}

Graph gen_two_cliques(int n) {
    if (n < 2 || n % 2 != 0) throw domain_error("two_cliques: n must be even, n >= 2");
    Graph g(n);
    add_clique(g, 0, n / 2);
    add_clique(g, n / 2, n);
    return g;
}

static void remove_ham_cycle(Graph& g, int lo, int hi) {
    int k = hi - lo;
    for (int i = 0; i < k; ++i) g.remove_edge(lo + i, lo + (i + 1) % k);
}

Graph gen_two_cliques_minus_ham(int n) {
    if (n < 7) throw domain_error("two_cliques_minus_ham: n >= 7");
    int small = (n % 4 == 0) ? n / 2 - 1 : n / 2;
    Graph g(n);
    add_clique(g, 0, small);
    add_clique(g, small, n);
    remove_ham_cycle(g, small, n);
    return g;
}

Graph gen_babai(int k) {
    if (k < 1) throw domain_error("babai: k >= 1");
    int a = 4 * k, b = 4 * k + 2;
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    for (int i = 0; i < b; i += 2) g.add_edge(a + i, a + i + 1);
    return g;
}

// Spanning 3-factor of the clique on lo..hi-1 (even order): Hamilton cycle
// plus the antipodal perfect matching.
static void remove_three_factor(Graph& g, int lo, int hi) {
    int k = hi - lo;
    if (k % 2 != 0) throw domain_error("3-factor needs even order");
    remove_ham_cycle(g, lo, hi);
    for (int i = 0; i < k / 2; ++i) g.remove_edge(lo + i, lo + i + k / 2);
}

Graph gen_bestposs(int n) {
    if (n < 6) throw domain_error("bestposs: n >= 6");
    Graph g(n);
    if (n % 2 == 0) {
        add_clique(g, 0, n / 2);
        add_clique(g, n / 2, n);
    } else if (n % 4 == 3) {
        // D* = floor(n/2)-1 even: delete a perfect matching in the bigger clique
        int small = n / 2;
        add_clique(g, 0, small);
        add_clique(g, small, n);
        int k = n - small;
        for (int i = 0; i < k / 2; ++i) g.remove_edge(small + 2 * i, small + 2 * i + 1);
    } else {
        // n = 1 mod 4: both D* and n odd; use cliques of orders floor(n/2)-1
        // and ceil(n/2)+1 minus a 3-factor, giving a (D*-1)-regular graph
        int small = n / 2 - 1;
        add_clique(g, 0, small);
        add_clique(g, small, n);
        remove_three_factor(g, small, n);
    }
    return g;
}

Graph gen_g_crit(int n) {
    if (n % 4 != 1) throw domain_error("g_crit: needs n = 1 mod 4");
    int half = (n - 1) / 2;
    if (half % 2 != 0) throw domain_error("g_crit: needs (n-1)/2 even");
    if (n < 9) throw domain_error("g_crit: n >= 9");
    // A = 0..half-1, B = half..n-2, a = n-1
    Graph g(n);
    add_clique(g, 0, half);
    add_clique(g, half, 2 * half);
    int a = n - 1;
    // a is joined to the lexicographically first half of each clique
    for (int i = 0; i < half / 2; ++i) g.add_edge(a, i);
    for (int i = 0; i < half / 2; ++i) g.add_edge(a, half + i);
    // perfect matching between the remaining vertices, in index order
    for (int i = half / 2; i < half; ++i) g.add_edge(i, half + i);
    return g;
}

BiPartition natural_partition(const std::string& family, const Graph& g, int param) {
    BiPartition p;
    int n = g.n();
    auto fill = [&](int split) {
        for (int v = 0; v < split; ++v) p.A.push_back(v);
        for (int v = split; v < n; ++v) p.B.push_back(v);
    };
    if (family == "two_cliques") {
        fill(n / 2);
    } else if (family == "two_cliques_minus_ham") {
        fill(n % 4 == 0 ? n / 2 - 1 : n / 2);
    } else if (family == "bestposs") {
        fill(n % 2 == 0 ? n / 2 : (n % 4 == 3 ? n / 2 : n / 2 - 1));
    } else if (family == "babai") {
        fill(4 * param);
    } else if (family == "complete_bipartite") {
        fill(param);
    } else if (family == "g_crit") {
        int half = (n - 1) / 2;
        for (int v = 0; v < half; ++v) p.A.push_back(v);
        for (int v = half; v < n - 1; ++v) p.B.push_back(v);
        p.A0.push_back(n - 1);  // the special vertex a sits in A0, so A' = A ∪ {a}
    } else {
        throw domain_error("no natural partition for family " + family);
    }
    return p;
}

Graph generate(const std::string& family, const std::vector<int>& params) {
    auto need = [&](size_t k) {
        if (params.size() != k)
            throw domain_error("family " + family + " needs " + std::to_string(k) + " parameter(s)");
    };
    if (family == "complete") { need(1); return gen_complete(params[0]); }
    if (family == "complete_bipartite") {
        if (params.size() == 1) return gen_complete_bipartite(params[0], params[0]);
        need(2);
        return gen_complete_bipartite(params[0], params[1]);
    }
    if (family == "two_cliques") { need(1); return gen_two_cliques(params[0]); }
    if (family == "two_cliques_minus_ham") { need(1); return gen_two_cliques_minus_ham(params[0]); }
    if (family == "babai") { need(1); return gen_babai(params[0]); }
    if (family == "bestposs") { need(1); return gen_bestposs(params[0]); }
    if (family == "g_crit") { need(1); return gen_g_crit(params[0]); }
    throw domain_error("unknown family: " + family);
}

}  // namespace hamdec
