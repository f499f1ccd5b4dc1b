#pragma once

#include <cstdint>
#include <vector>

#include "hamdec/graph.hpp"

namespace hamdec {
namespace classic {

// Hamilton decomposition of K_n for odd n: (n-1)/2 edge-disjoint Hamilton
// cycles via the rotating zig-zag pattern, labelling fixed to vertex order.
Decomposition walecki(int n);

// Hamilton decomposition of K_{k,k} for even k into k/2 cycles
// (Auerbach-Laskar).  Classes 0..k-1 and k..2k-1.
Decomposition bipartite_ham_decompose(int k);

// A spanning 2-regular subgraph of a 2r-regular graph: Euler circuit per
// component, orient along it, perfect matching in the bipartite double cover.
Graph petersen_two_factor(const Graph& g);

// Proper edge coloring with at most max_degree+1 colors (Misra-Gries).
// Returns color per edge, aligned with g.edges().
std::vector<int> edge_coloring(const Graph& g);

// Decomposition of E(g) into m matchings with sizes pairwise within 1.
// Throws infeasible_error when g cannot be edge-colored with m colors.
std::vector<EdgeList> matching_decomposition(const Graph& g, int m);

// t non-empty matchings of even size <= 3 e(H) / t partitioning E(H);
// H must be bipartite with e(H) even and e(H) >= 2t.  Odd matchings are
// paired off and repaired by moving one disjoint edge from each into a new
// two-edge matching.
std::vector<EdgeList> even_matchings(const Graph& h, int t);

// Spanning (1-mu-rho)m-regular subgraph of a bipartite graph with classes
// `left`, `right` of size m, built from an integral max flow on the
// source/sink network.  Throws infeasible_error when the flow is short.
Graph regular_bipartite_subgraph(const Graph& gamma, const std::vector<int>& left,
                                 const std::vector<int>& right, double mu, double rho);

// Hamilton cycle of a graph with min degree >= n/2, by the constructive
// rotation-extension argument behind Dirac's theorem.  Deterministic for a
// fixed seed (the seed shuffles the initial vertex order).
std::vector<int> dirac_hamilton(const Graph& g, std::uint64_t seed = 0);

// A perfect matching of a D-regular graph with n even, D >= 2 ceil(n/4) - 1.
EdgeList regular_perfect_matching(const Graph& g);

struct RegEven {
    int r = 0;        // largest even degree of a spanning regular subgraph
    Graph witness;    // an r-regular spanning subgraph (empty graph when r=0)
};
// Descends from max_degree rounded down to even, testing spanning r-factor
// feasibility by reduction to perfect matching.
RegEven reg_even(const Graph& g);

// Splits E(g) into D/2 edge-disjoint path systems with sizes within 1 such
// that every internal path vertex lies in a0 (vertex-splitting auxiliary
// graph + matching decomposition).  Requires D even, max deg <= D-2,
// d(x) <= D/2-1 off a0, and max deg of g[a0] <= D/2-1.
std::vector<EdgeList> split_into_path_systems(const Graph& g, const std::vector<int>& a0, int D);

}  // namespace classic
}  // namespace hamdec
