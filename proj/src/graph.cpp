#include "hamdec/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hamdec {

Graph Graph::from_edges(int n, const EdgeList& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw domain_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") out of range for n=" + std::to_string(n_));
    if (u == v) throw domain_error("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) return;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
}

bool Graph::remove_edge(int u, int v) {
    if (!has_edge(u, v)) return false;
    adj_[u].erase(std::lower_bound(adj_[u].begin(), adj_[u].end(), v));
    adj_[v].erase(std::lower_bound(adj_[v].begin(), adj_[v].end(), u));
    --m_;
    return true;
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::is_regular(int* deg) const {
    if (n_ == 0) return true;
    int d = degree(0);
    for (int v = 1; v < n_; ++v)
        if (degree(v) != d) return false;
    if (deg) *deg = d;
    return true;
}

EdgeList Graph::edges() const {
    EdgeList out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int Graph::degree_into(int v, const std::vector<char>& in_x) const {
    int d = 0;
    for (int w : adj_[v]) d += in_x[w] ? 1 : 0;
    return d;
}

Graph Graph::subgraph_on(const std::vector<int>& verts) const {
    std::vector<int> idx(n_, -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) idx[verts[i]] = i;
    Graph g(static_cast<int>(verts.size()));
    for (int u : verts)
        for (int v : adj_[u])
            if (u < v && idx[v] >= 0) g.add_edge(idx[u], idx[v]);
    return g;
}

Graph Graph::graph_union(const Graph& other) const {
    Graph g(std::max(n_, other.n_));
    for (const auto& [u, v] : edges()) g.add_edge(u, v);
    for (const auto& [u, v] : other.edges()) g.add_edge(u, v);
    return g;
}

Graph Graph::graph_minus(const Graph& other) const {
    Graph g(n_);
    for (const auto& [u, v] : edges())
        if (!other.has_edge(u, v)) g.add_edge(u, v);
    return g;
}

static void check_verts(const Graph& g, const std::vector<int>& xs) {
    for (int v : xs)
        if (v < 0 || v >= g.n())
            throw domain_error("vertex " + std::to_string(v) + " out of range");
}

long long edges_between(const Graph& g, const std::vector<int>& xs, const std::vector<int>& ys) {
    check_verts(g, xs);
    check_verts(g, ys);
    std::vector<char> in_x(g.n(), 0), in_y(g.n(), 0);
    for (int v : xs) in_x[v] = 1;
    for (int v : ys) in_y[v] = 1;
    long long cnt = 0;
    for (const auto& [u, v] : g.edges()) {
        if ((in_x[u] && in_y[v]) || (in_x[v] && in_y[u])) ++cnt;
    }
    return cnt;
}

long long edges_inside(const Graph& g, const std::vector<int>& xs) {
    check_verts(g, xs);
    std::vector<char> in_x(g.n(), 0);
    for (int v : xs) in_x[v] = 1;
    long long cnt = 0;
    for (const auto& [u, v] : g.edges())
        if (in_x[u] && in_x[v]) ++cnt;
    return cnt;
}

bool Digraph::has_arc(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

void Digraph::add_arc(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw domain_error("arc out of range");
    if (u == v) throw domain_error("self-loop at vertex " + std::to_string(u));
    if (oriented_ && has_arc(v, u))
        throw domain_error("oriented mode forbids both (u,v) and (v,u)");
    if (has_arc(u, v)) return;
    out_[u].insert(std::lower_bound(out_[u].begin(), out_[u].end(), v), v);
    in_[v].insert(std::lower_bound(in_[v].begin(), in_[v].end(), u), u);
    ++m_;
}

bool Digraph::remove_arc(int u, int v) {
    if (!has_arc(u, v)) return false;
    out_[u].erase(std::lower_bound(out_[u].begin(), out_[u].end(), v));
    in_[v].erase(std::lower_bound(in_[v].begin(), in_[v].end(), u));
    --m_;
    return true;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : out_[u]) out.emplace_back(u, v);
    return out;
}

Graph Digraph::underlying() const {
    Graph g(n_);
    for (auto [u, v] : arcs())
        if (!g.has_edge(u, v)) g.add_edge(u, v);
    return g;
}

static std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

static std::vector<int> sorted_copy(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<int> BiPartition::a_prime() const { return sorted_union(sorted_copy(A), sorted_copy(A0)); }
std::vector<int> BiPartition::b_prime() const { return sorted_union(sorted_copy(B), sorted_copy(B0)); }
std::vector<int> BiPartition::v0() const { return sorted_union(sorted_copy(A0), sorted_copy(B0)); }

void BiPartition::validate(int n) const {
    std::vector<int> seen(n, 0);
    for (const auto* part : {&A, &A0, &B, &B0}) {
        for (int v : *part) {
            if (v < 0 || v >= n) throw domain_error("partition vertex out of range");
            if (seen[v]++) throw domain_error("vertex " + std::to_string(v) + " in two parts");
        }
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw domain_error("vertex " + std::to_string(v) + " missing from partition");
}

std::vector<char> BiPartition::mask(const std::vector<int>& set, int n) const {
    std::vector<char> m(n, 0);
    for (int v : set) m[v] = 1;
    return m;
}

std::vector<char> BiPartition::mask_a_prime(int n) const {
    auto m = mask(A, n);
    for (int v : A0) m[v] = 1;
    return m;
}

std::vector<char> BiPartition::mask_b_prime(int n) const {
    auto m = mask(B, n);
    for (int v : B0) m[v] = 1;
    return m;
}

static std::vector<int> canonical_cycle(std::vector<int> c) {
    if (c.empty()) return c;
    auto it = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), it, c.end());
    // pick the lexicographically smaller direction
    if (c.size() > 2 && c[1] > c.back()) {
        std::reverse(c.begin() + 1, c.end());
    }
    return c;
}

void Decomposition::canonicalize() {
    for (auto& c : cycles) c = canonical_cycle(std::move(c));
    std::sort(cycles.begin(), cycles.end());
    for (auto& m : matchings) {
        for (auto& e : m) e = make_edge(e.first, e.second);
        std::sort(m.begin(), m.end());
    }
    std::sort(matchings.begin(), matchings.end());
}

EdgeList cycle_edges(const std::vector<int>& cycle) {
    EdgeList out;
    int k = static_cast<int>(cycle.size());
    out.reserve(k);
    for (int i = 0; i < k; ++i) out.push_back(make_edge(cycle[i], cycle[(i + 1) % k]));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_hamilton_cycle(const Graph& g, const std::vector<int>& cycle) {
    if (static_cast<int>(cycle.size()) != g.n() || g.n() < 3) return false;
    std::vector<char> seen(g.n(), 0);
    for (int v : cycle) {
        if (v < 0 || v >= g.n() || seen[v]) return false;
        seen[v] = 1;
    }
    for (size_t i = 0; i < cycle.size(); ++i)
        if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
    return true;
}

bool is_perfect_matching(const Graph& g, const EdgeList& m) {
    if (g.n() % 2 != 0 || static_cast<int>(m.size()) * 2 != g.n()) return false;
    std::vector<char> seen(g.n(), 0);
    for (auto [u, v] : m) {
        if (!g.has_edge(u, v)) return false;
        if (seen[u] || seen[v]) return false;
        seen[u] = seen[v] = 1;
    }
    return true;
}

bool is_D_balanced(const Graph& g, const BiPartition& p, int D) {
    p.validate(g.n());
    auto ap = p.a_prime();
    auto bp = p.b_prime();
    long long lhs = 2 * (edges_inside(g, ap) - edges_inside(g, bp));
    long long rhs = static_cast<long long>(ap.size() - bp.size()) * D;
    if (lhs != rhs) return false;
    for (int v : p.A0)
        if (g.degree(v) != D) return false;
    for (int v : p.B0)
        if (g.degree(v) != D) return false;
    return true;
}

bool cut_parity_check(const Graph& g, const BiPartition& p, int D) {
    int deg = 0;
    if (!g.is_regular(&deg) || deg != D)
        throw contract_error("cut_parity_check needs a D-regular graph");
    p.validate(g.n());
    auto ap = p.a_prime();
    auto bp = p.b_prime();
    long long cut = edges_between(g, ap, bp);
    bool odd_expected = (ap.size() % 2 == 1) && (D % 2 == 1);
    return (cut % 2 == 1) == odd_expected;
}

}  // namespace hamdec
