#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hamdec/error.hpp"

namespace hamdec {

using Edge = std::pair<int, int>;  // canonical: first < second
using EdgeList = std::vector<Edge>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Simple undirected graph on vertices 0..n-1.  Adjacency lists are kept
// sorted so iteration order (and everything seeded downstream) is
// deterministic.  No self-loops, no multi-edges.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n) {}
    static Graph from_edges(int n, const EdgeList& edges);

    int n() const { return n_; }
    int m() const { return m_; }
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);       // throws domain_error on loop/range, ignores duplicates
    bool remove_edge(int u, int v);    // returns false if absent
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    int min_degree() const;
    int max_degree() const;
    bool is_regular(int* deg = nullptr) const;

    EdgeList edges() const;  // canonical u < v, lexicographically sorted

    // Degree of v into the set X (X given as a membership mask).
    int degree_into(int v, const std::vector<char>& in_x) const;

    Graph subgraph_on(const std::vector<int>& verts) const;  // induced, relabelled 0..k-1
    Graph graph_union(const Graph& other) const;             // same vertex set
    Graph graph_minus(const Graph& other) const;             //

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

  private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// |E_G(X, Y)|; when X == Y as sets this counts e_G(X) (each edge once).
long long edges_between(const Graph& g, const std::vector<int>& xs, const std::vector<int>& ys);

// Edges with both ends inside X.
long long edges_inside(const Graph& g, const std::vector<int>& xs);

// Simple digraph, at most one arc per ordered pair.  In oriented mode both
// (u,v) and (v,u) are forbidden.
class Digraph {
  public:
    Digraph() = default;
    explicit Digraph(int n, bool oriented = false) : n_(n), oriented_(oriented), out_(n), in_(n) {}

    int n() const { return n_; }
    int m() const { return m_; }
    bool oriented() const { return oriented_; }
    bool has_arc(int u, int v) const;
    void add_arc(int u, int v);
    bool remove_arc(int u, int v);
    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[v]; }
    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
    std::vector<std::pair<int, int>> arcs() const;

    Graph underlying() const;

  private:
    int n_ = 0;
    int m_ = 0;
    bool oriented_ = false;
    std::vector<std::vector<int>> out_, in_;
};

// Vertex partition (A, A0, B, B0) with A' = A0 ∪ A, B' = B0 ∪ B.
struct BiPartition {
    std::vector<int> A, A0, B, B0;

    std::vector<int> a_prime() const;  // A ∪ A0, sorted
    std::vector<int> b_prime() const;  // B ∪ B0, sorted
    std::vector<int> v0() const;       // A0 ∪ B0, sorted
    int total() const { return static_cast<int>(A.size() + A0.size() + B.size() + B0.size()); }

    // Checks disjointness and coverage of 0..n-1; throws domain_error otherwise.
    void validate(int n) const;

    // Membership masks over 0..n-1.
    std::vector<char> mask_a_prime(int n) const;
    std::vector<char> mask_b_prime(int n) const;
    std::vector<char> mask(const std::vector<int>& set, int n) const;
};

// An ordered collection of Hamilton cycles and perfect matchings of a host
// graph, with a machine-checkable coverage/disjointness certificate
// (see oracle.hpp: verify_decomposition).
struct Decomposition {
    Graph host;
    std::vector<std::vector<int>> cycles;  // vertex sequences, canonicalized
    std::vector<EdgeList> matchings;       // canonical edges, sorted
    bool complete = false;                 // asserts union of parts == E(host)

    void canonicalize();  // cycles start at min vertex, smaller direction; matchings sorted
};

// Canonical edge set of a cycle given as a vertex sequence.
EdgeList cycle_edges(const std::vector<int>& cycle);

// true iff `cycle` is a Hamilton cycle of g (visits all vertices once, edges present).
bool is_hamilton_cycle(const Graph& g, const std::vector<int>& cycle);

// true iff `m` is a perfect matching on V(g) using edges of g.
bool is_perfect_matching(const Graph& g, const EdgeList& m);

// D-balancedness: e(A') - e(B') == (|A'| - |B'|) D / 2 and every vertex of
// A0 ∪ B0 has degree exactly D.
bool is_D_balanced(const Graph& g, const BiPartition& p, int D);

// For D-regular g: checks that e(A',B') is odd iff both |A'| and D are odd.
// Throws contract_error if g is not regular.
bool cut_parity_check(const Graph& g, const BiPartition& p, int D);

}  // namespace hamdec
