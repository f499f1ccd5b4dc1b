#pragma once

#include <cstdint>
#include <string>

#include "hamdec/config.hpp"
#include "hamdec/exceptional.hpp"
#include "hamdec/graph.hpp"
#include "hamdec/structure.hpp"

namespace hamdec {
namespace assembly {

enum class Mode { two_cliques, bipartite };

// Directed edges with an imposed order (the fictive matchings J*_dir).
struct OrderedMatching {
    std::vector<std::pair<int, int>> arcs;
};

// Union of vertex-disjoint directed paths.
struct PathSequence {
    std::vector<std::pair<int, int>> arcs;
};

// A blown-up directed Hamilton cycle: clusters in cycle order plus the
// winding arcs available to this system.
struct CyclicSystem {
    int n = 0;
    std::vector<std::vector<int>> clusters;
    Digraph g;

    int cluster_count() const { return static_cast<int>(clusters.size()); }
};

// Degree window check (the Sys2 condition at a configured tolerance):
// every vertex of V_i keeps at least (1 - eps) m arcs into V_{i+1} and
// receives at least (1 - eps) m from V_{i-1}.
bool check_winding_degrees(const CyclicSystem& sys, double eps, std::string* complaint = nullptr);

struct BuiltSystems {
    Mode mode = Mode::two_cliques;
    // two_cliques: per j one system on A and one on B; bipartite: only a
    std::vector<CyclicSystem> systems_a, systems_b;
    std::vector<std::vector<std::size_t>> assigned;  // j -> indices into the J list
    Graph free_edges;                                // pool of unused host edges (reserves)
};

// Splits the scheme's non-exceptional part into (K-1)/2 (two-cliques, K odd)
// or K/2 (bipartite, K even) blown-up directed Hamilton cycles via the
// classical cluster-level decompositions, and distributes num_js systems
// round-robin.
BuiltSystems build_cyclic_systems(const Graph& g, const structure::SchemePartition& sp, Mode mode,
                                  std::size_t num_js, const ToleranceConfig& cfg);

struct Extension {
    std::vector<PathSequence> ps;          // one per matching, containing it
    std::vector<int> final_cluster;        // cluster index the paths end in
    std::vector<std::vector<int>> marks;   // final path vertices, in matching order
};

// Extends each ordered matching into a locally balanced path sequence by
// adding reserve arcs drawn from the shared pool (two-cliques: a matching on
// the (i-1, i+1) cluster pair; bipartite: one compensating cross arc per
// matching arc plus the A_{i1}-extension arcs).
Extension balanced_extension(const std::vector<OrderedMatching>& ms,
                             const std::vector<int>& home_cluster, const CyclicSystem& sys,
                             Graph& pool, Mode mode);

// One directed 1-factor per path sequence: sequential perfect matchings on
// the touched cluster pairs, then a regular-subgraph extraction for the
// untouched tail.  Consumes edges from the shared pool.
std::vector<Digraph> extend_to_one_factors(CyclicSystem& sys, const Extension& ext, Graph& pool);

// Merges the cycles of a 1-factor into a single directed Hamilton cycle and
// orders the marked vertices, replacing winding matchings by alternatives
// from the pool (auxiliary-digraph identification plus exact ordered
// backtracking).  Returns the cycle as a vertex sequence.
std::vector<int> merge_to_hamilton(const Digraph& f, const CyclicSystem& sys, Graph& pool,
                                   int mark_cluster, const std::vector<int>& marks,
                                   std::uint64_t seed, long long budget = 6'000'000);

struct DemoPiece {
    std::size_t j_index = 0;                      // which exceptional system
    bool is_cycle = true;                         // HES vs MES
    std::vector<int> cycle;                       // Hamilton cycle (HES / bipartite)
    std::pair<EdgeList, EdgeList> matchings;      // MES output
};

struct DemoResult {
    std::vector<DemoPiece> pieces;
    std::string trace;  // stage-by-stage text trace
};

// Full composition at desk scale: build_cyclic_systems -> balanced_extension
// -> extend_to_one_factors -> merge_to_hamilton -> splice.  Every emitted
// piece is re-verified; stages tag their failures.
DemoResult approx_decompose_demo(const Graph& g, const structure::SchemePartition& sp,
                                 const std::vector<exceptional::ExceptionalSystem>& js, Mode mode,
                                 const ToleranceConfig& cfg, std::uint64_t seed);

// Bipartite-mode variant taking balanced exceptional systems as raw path
// systems (edge lists) over the scheme partition.
DemoResult approx_decompose_demo_bipartite(const Graph& g, const structure::SchemePartition& sp,
                                           const std::vector<EdgeList>& bes,
                                           const ToleranceConfig& cfg, std::uint64_t seed);

}  // namespace assembly
}  // namespace hamdec
