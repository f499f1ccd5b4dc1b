#pragma once

#include <string>

#include "hamdec/graph.hpp"

namespace hamdec {

// n - 2*floor(n/4) - 1, the exact degree threshold of the two-cliques case.
int degree_threshold(int n);

// K_n.
Graph gen_complete(int n);

// K_{a,b}; left class 0..a-1, right class a..a+b-1.
Graph gen_complete_bipartite(int a, int b);

// Two disjoint cliques of order n/2 (n even).
Graph gen_two_cliques(int n);

// Cliques of orders n/2-1 and n/2+1 with a Hamilton cycle deleted from the
// larger one when n = 0 mod 4 (both orders odd; the graph is (n/2-2)-regular).
// For other n: cliques of orders floor(n/2), ceil(n/2) with a Hamilton cycle
// deleted from the larger (second) clique; not regular in general.
Graph gen_two_cliques_minus_ham(int n);

// Empty class A of size 4k, class B of size 4k+2 carrying a perfect matching,
// all edges between A and B.  n = 8k+2, minimum degree 4k+1 = n/2.
Graph gen_babai(int k);

// The disconnected extremal graph of degree D* = floor(n/2)-1: two cliques
// when n even; for odd n a perfect matching (n = 3 mod 4) or a 3-factor
// (n = 1 mod 4, degree D*-1) is deleted from the larger clique.
Graph gen_bestposs(int n);

// Two cliques on (n-1)/2 vertices plus a special vertex a joined to half of
// each, plus a perfect matching between the non-neighbours of a.  Requires
// n = 1 mod 4 and (n-1)/2 even; D-regular with D = (n-1)/2 and e(A',B') = D.
Graph gen_g_crit(int n);

// The natural partition each generator implies, where one exists:
//   two_cliques / two_cliques_minus_ham / bestposs: the two components;
//   babai: (A, B); g_crit: (A ∪ {a}, B).
BiPartition natural_partition(const std::string& family, const Graph& g, int param);

// Dispatch by family name; params as in the CLI (one or two integers).
Graph generate(const std::string& family, const std::vector<int>& params);

}  // namespace hamdec
