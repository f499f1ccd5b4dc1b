#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "hamdec/config.hpp"
#include "hamdec/graph.hpp"
#include "hamdec/structure.hpp"

namespace hamdec {
namespace exceptional {

enum class ESKind { HES, MES };

// A path system covering the exceptional set V0 = A0 ∪ B0, destined to
// become the non-cluster part of one Hamilton cycle (HES) or of two perfect
// matchings (MES).
struct ExceptionalSystem {
    int n = 0;
    EdgeList edges;
    ESKind kind = ESKind::HES;
    double eps0 = 0;
    std::optional<std::pair<int, int>> locality;  // (i, i') when localized
};

struct Diagnostics {
    bool ok = true;
    std::optional<ESKind> kind;  // inferred kind when valid
    int ab_paths = 0;            // number of AB-paths
    std::vector<std::string> violations;
};

// Decomposes an edge set into its paths; throws domain_error if some
// component is not a path (degree above 2 or a cycle).
std::vector<std::vector<int>> path_components(int n, const EdgeList& edges);

// (EC1)-(EC3) + (ES2)/(ES3) with kind inference.
Diagnostics validate_es(const EdgeList& j, const BiPartition& p, int n, double eps0);

// (BES1)-(BES4) against a scheme partition and a locality 4-tuple
// (i1, i2, i3, i4).
Diagnostics validate_bes(const EdgeList& j, const structure::SchemePartition& sp,
                         std::array<int, 4> locality, double eps0);

// Fictive matchings J*_A / J*_B (two-cliques mode) or J* (bipartite mode),
// with the imposed endpoint orders.
struct FictiveSystem {
    bool bipartite = false;
    EdgeList jstar_ab;             // J*_AB (one fictive edge per nontrivial path)
    std::vector<Edge> jstar_a;     // J*_A in imposed order (x-pair edges first)
    std::vector<Edge> jstar_b;     // J*_B in imposed order
    std::vector<int> visit_a;      // x_1 .. x_{2l}: order a consistent A-cycle must visit
    std::vector<int> visit_b;      // y_2 .. y_{2l}, y_1
    std::vector<Edge> jstar;       // bipartite mode: {x_i y_i} in imposed order
    std::vector<int> visit_ab;     // bipartite mode: x_1, y_1, x_2, y_2, ...
};

// AB-path endpoints are enumerated smallest-A-endpoint-first; pair edges are
// x_{2i-1} x_{2i} on A and y_{2i} y_{2i+1} on B (indices mod 2l).
FictiveSystem fictive(const ExceptionalSystem& j, const BiPartition& p);

// Bipartite-mode fictive matching of a balanced exceptional system.
FictiveSystem fictive_balanced(const EdgeList& j, const BiPartition& p);

// True iff the cycle contains every fictive edge of the side and some
// orientation visits the side's prescribed vertex sequence in cyclic order.
bool is_consistent(const std::vector<int>& cycle, const FictiveSystem& f, char side);

// Bipartite variant: containment of J* plus the x1,y1,...,x_s',y_s' order.
bool is_consistent_bipartite(const std::vector<int>& cycle, const FictiveSystem& f);

// C_A + C_B - J* + J.  Throws contract_error when a cycle is not consistent
// with its fictive matching; never silently returns a non-cycle.
Graph splice(const std::vector<int>& c_a, const std::vector<int>& c_b,
             const ExceptionalSystem& j, const BiPartition& p);

// For a spliced MES result (disjoint Hamilton cycles on A' and B', both
// even): the two perfect matchings, alternating from each cycle's minimum
// vertex.
std::pair<EdgeList, EdgeList> mes_matchings(const Graph& spliced, const BiPartition& p);

// Bipartite splice: D - J* + J for a Hamilton cycle D of G[A ∪ B] + J*
// consistent with J*.
Graph splice_bipartite(const std::vector<int>& cycle, const EdgeList& j, const BiPartition& p);

// Extends an exceptional system candidate to a full exceptional system by
// adding A0A- and B0B-edges of g with pairwise distinct endpoints.
ExceptionalSystem extend_candidate(const EdgeList& f, const Graph& g, const BiPartition& p,
                                   double eps0);

// The two equivalent 2-balancedness checks (degree/count route vs endpoint
// route); both are exposed so tests can assert they agree.
bool two_balanced_by_counts(const EdgeList& q, const BiPartition& p, int n);
bool two_balanced_by_endpoints(const EdgeList& q, const BiPartition& p, int n);

// Hamilton cycle of `allowed` + `forced` containing every forced edge;
// exact backtracking with a seeded neighbour order and a node budget.
std::optional<std::vector<int>> hamilton_through(const Graph& allowed, const EdgeList& forced,
                                                 std::uint64_t seed, long long node_budget);

struct CoverResult {
    std::vector<std::vector<int>> cycles;  // r* <= eps n Hamilton cycles of F
    Graph residual_f;                      // F minus the cycles
    Graph residual_g;                      // G minus the cycles (BFR-ready)
};

// Covers all edges of G[A0, B0] by edge-disjoint Hamilton cycles of F built
// from 2-balanced A0B0-path systems plus AB-edges.
CoverResult cover_a0b0(const Graph& f, const Graph& g, const structure::Framework& wf,
                       const ToleranceConfig& cfg, std::uint64_t seed);

// Integer assignment of Lemma-matrix type: rows sum to a_i, columns close to
// 4 (first eta*r of them) or 2, with enough unit entries per column.
// lower_frac relaxes the 31/60 hypothesis for tiny r.
std::vector<std::vector<int>> assign_degrees(const std::vector<int>& a, const std::vector<int>& c,
                                             double eta, double lower_frac = 31.0 / 60.0);

}  // namespace exceptional
}  // namespace hamdec
