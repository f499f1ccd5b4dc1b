#pragma once

#include <optional>
#include <string>

#include "hamdec/graph.hpp"

namespace hamdec {
namespace oracle {

// Certificate text: "OK" or "FAIL <rule> <witness>".
struct Certificate {
    bool ok = true;
    std::string rule;     // first violated rule, empty when ok
    std::string witness;  // offending object, empty when ok
    std::string text() const { return ok ? "OK" : "FAIL " + rule + " " + witness; }
};

// Checks every cycle is Hamiltonian on the host, every matching perfect,
// pairwise edge-disjointness, containment in E(host), and that the complete
// flag matches exact coverage.  Diagnostic: never throws.
Certificate verify_decomposition(const Graph& g, const Decomposition& d);

// Exact backtracking over perfect matchings.  Returns a 1-factorization or
// nullopt once the search space is exhausted (proof of absence).
// Requires n even and g regular; n above the cap is a resource error.
std::optional<Decomposition> brute_one_factorization(const Graph& g, int cap = 14,
                                                     double deadline_sec = 1e18);

// Exact backtracking over edge-disjoint Hamilton cycles covering E(g).
std::optional<Decomposition> brute_ham_decomposition(const Graph& g, int cap = 12,
                                                     double deadline_sec = 1e18);

// Exact maximum number of edge-disjoint Hamilton cycles, with a witness set.
struct Packing {
    int count = 0;
    std::vector<std::vector<int>> cycles;
};
Packing max_ham_packing(const Graph& g, int cap = 10, double deadline_sec = 1e18);

// Exact max edges over subgraphs H of g_cross with Delta(H) <= b, by
// exhaustive search over edge subsets (branch and bound).  edge_cap guards
// runtime.  The parallel variant splits the search over a prefix of the edge
// list; both return identical values.
long long brute_degree_capped_max_serial(const Graph& g_cross, int b, int edge_cap = 30);
long long brute_degree_capped_max_parallel(const Graph& g_cross, int b, int edge_cap = 30);
long long brute_degree_capped_max(const Graph& g_cross, int b, int edge_cap = 30);

// Largest even r such that g has a spanning r-regular subgraph, by ascending
// search with a direct backtracking feasibility test per candidate r.
// Independent of the flow/matching route used by classic::reg_even.
int reg_even_oracle(const Graph& g, int cap = 12, double deadline_sec = 1e18);

}  // namespace oracle
}  // namespace hamdec
