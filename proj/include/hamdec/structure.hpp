#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hamdec/config.hpp"
#include "hamdec/graph.hpp"

namespace hamdec {
namespace structure {

// ---------- balanced bisection search (exact kernels + local moves) ----------

struct Bisection {
    std::vector<int> side_a;  // |side_a| = floor(n/2)
    long long value = 0;      // objective achieved (see each op)
    bool exact = false;       // exhaustive scan vs local search
};

// Minimum cut e(A, V-A) over |A| = floor(n/2).  Exact below the config cap
// (OpenMP subset scan), deterministic local moves above it.
Bisection min_bisection(const Graph& g, const ToleranceConfig& cfg = {});
// Minimum e(A) over |A| = floor(n/2) (one-sided near-bipartite test).
Bisection min_inside_bisection(const Graph& g, const ToleranceConfig& cfg = {});
// Minimum e(A) + e(V-A), the two-sided eps-bipartite objective.
Bisection min_both_sides_bisection(const Graph& g, const ToleranceConfig& cfg = {});

// Serial / parallel exact kernels (exposed for tests and the benchmark).
// objective: 0 = cut, 1 = e(A), 2 = e(A) + e(B).
Bisection exact_bisection_serial(const Graph& g, int objective);
Bisection exact_bisection_parallel(const Graph& g, int objective);

// witness A with e(A, V-A) <= eps n^2, if found
std::optional<std::vector<int>> eps_close_two_cliques(const Graph& g, double eps,
                                                      const ToleranceConfig& cfg = {});
// witness A with e(A), e(V-A) <= eps n^2, if found
std::optional<std::vector<int>> eps_bipartite(const Graph& g, double eps,
                                              const ToleranceConfig& cfg = {});

// ---------- robust expansion ----------

enum class ExpanderMode { exact, sampled };

struct ExpanderVerdict {
    bool is_expander = false;
    bool exact = false;             // exhaustive enumeration vs seeded sample
    std::vector<int> witness;       // a violating S when !is_expander
};

ExpanderVerdict is_robust_expander(const Graph& g, double nu, double tau, ExpanderMode mode,
                                   std::uint64_t seed = 0, const ToleranceConfig& cfg = {});

// exact kernels on n <= 62 (bitset scan); parallel variant returns the same
// minimal witness as the serial one
ExpanderVerdict robust_expander_exact_serial(const Graph& g, double nu, double tau);
ExpanderVerdict robust_expander_exact_parallel(const Graph& g, double nu, double tau);

// ---------- classification ----------

struct StructureClass {
    enum Kind { NearBipartite, TwoCliques, RobustExpander } kind;
    std::vector<int> witness;  // the A-witness for the first two kinds
    double nu = 0, tau = 0;    // parameters certified for RobustExpander
};

// Tests (i) eps-close to K_{n/2,n/2}, (ii) eps-close to two cliques,
// (iii) robust (nu,tau)-expander, in this order; throws infeasible_error with
// all three certificates if none passes (possible only outside the intended
// parameter regime).
StructureClass classify(const Graph& g, double eps, double nu, double tau,
                        std::uint64_t seed = 0, const ToleranceConfig& cfg = {});

// ---------- criticality ----------

struct CriticalityReport {
    int delta_cross = 0;             // max degree of g[A', B']
    long long capped_max_edges = 0;  // max e(H), H subgraph of g[A',B'] with deg <= floor(11D/40)
    std::vector<int> w_set;          // vertices with cross degree >= 11D/40
    bool is_critical = false;
};

// The universally quantified cap condition is computed exactly: the maximum
// is a degree-constrained subgraph optimum, solved by max flow.
CriticalityReport criticality(const Graph& g, const BiPartition& p, int D);

// Exact max e(H) over subgraphs of the bipartite graph g[A',B'] with
// Delta(H) <= b, via flow (used by criticality; exposed for oracle checks).
long long capped_max_edges_flow(const Graph& g, const BiPartition& p, int b);

// ---------- frameworks ----------

enum class FrameworkKind { FR, WF, BFR };

struct Framework {
    BiPartition partition;
    double eps0 = 0;       // FR smallness parameter
    double eps_prime = 0;  // WF/BFR internal-degree parameter
    int K = 1;
    FrameworkKind kind = FrameworkKind::FR;
    int D = 0;  // WF/BFR only
};

struct CheckReport {
    bool ok = true;
    std::vector<std::string> violations;
};

CheckReport check_fr(const Graph& g, const BiPartition& p, double eps0, int K);
CheckReport check_wf(const Graph& f, const Graph& g, const BiPartition& p, double eps,
                     double eps_prime, int K, int D);
CheckReport check_bfr(const Graph& g, const BiPartition& p, double eps, double eps_prime, int K,
                      int D);

// Framework construction by the local-move argument: split off a two-cliques
// witness, move vertices with misplaced majority degree, absorb high cross
// degree vertices into A0/B0, trim |A| = |B| to a multiple of K.
Framework build_framework(const Graph& g, double eps0, int K, const ToleranceConfig& cfg = {});

// Weak framework for the bipartite case (F eps-bipartite, G a D-balanced
// spanning subgraph); bad-vertex elimination with strictly increasing cut.
Framework build_weak_framework(const Graph& f, const Graph& g, double eps, double eps_prime,
                               int K, int D, const ToleranceConfig& cfg = {});

// ---------- randomized partitions ----------

struct Equipartition {
    std::vector<std::vector<int>> clusters;  // K clusters of size |U| / K
    double worst_deviation = 0;              // achieved, in units of the allowed slack
};

// Seeded uniform equipartition of U redrawn until the degree/edge-count
// checks pass at the configured tolerances; R lists the outside reference
// sets for the cross-count check.
Equipartition random_equipartition(const Graph& g, const Graph& f, const std::vector<int>& u,
                                   const std::vector<std::vector<int>>& r, int K,
                                   const ToleranceConfig& cfg, std::uint64_t seed);

struct SchemePartition {
    std::vector<int> A0, B0;
    std::vector<std::vector<int>> A;  // K clusters of size m
    std::vector<std::vector<int>> B;
    int K = 0, m = 0;
    double eps0 = 0;

    std::vector<int> a_all() const;
    std::vector<int> b_all() const;
};

// Refines a framework partition into a (K, m, eps0)-partition whose
// non-exceptional part is a scheme and whose exceptional part is an
// exceptional scheme (two applications of random_equipartition).
SchemePartition scheme_partition(const Graph& g, const Framework& fr, int K,
                                 const ToleranceConfig& cfg, std::uint64_t seed);

// ---------- localized slices ----------

struct SlicePair {
    Graph h;        // A0A_i-edges and B0B_{i'}-edges
    Graph h_cross;  // edges inside [A0 ∪ A_i, B0 ∪ B_{i'}]
};

// Edge-partition of the exceptional part into K^2 localized slice pairs with
// verified size and degree bounds; seeded, redrawn on tolerance failure.
std::vector<std::vector<SlicePair>> localized_slices(const Graph& g_diamond,
                                                     const SchemePartition& s,
                                                     const ToleranceConfig& cfg,
                                                     std::uint64_t seed);

// Bipartite-case variant: slices of g[A'] localized to cluster pairs
// (A_i, A_j); likewise for the B side by passing those clusters.
std::vector<std::vector<Graph>> localized_slices_within_side(const Graph& g,
                                                             const std::vector<int>& x0,
                                                             const std::vector<std::vector<int>>& xs,
                                                             const ToleranceConfig& cfg,
                                                             std::uint64_t seed);

// ---------- regularity predicates ----------

struct RegularityVerdict {
    bool ok = false;
    bool exact = false;
    std::string failure;  // human-readable witness when !ok
};

double pair_density(const Graph& g, const std::vector<int>& left, const std::vector<int>& right);

// (eps, >= d)-regular: every pair of subsets of size >= eps m has density
// within eps of the pair density, and density >= d - eps.
RegularityVerdict is_eps_regular(const Graph& g, const std::vector<int>& left,
                                 const std::vector<int>& right, double eps, double d,
                                 std::uint64_t seed = 0, const ToleranceConfig& cfg = {});

// [eps, d]-superregular: eps-regular plus all degrees = (d +- eps) m.
RegularityVerdict is_superregular(const Graph& g, const std::vector<int>& left,
                                  const std::vector<int>& right, double eps, double d,
                                  std::uint64_t seed = 0, const ToleranceConfig& cfg = {});

// Sparse (eps, d, d*, c)-superregularity: (Reg1) relative density, (Reg2)
// codegree cap, (Reg3) max degree, (Reg4) min degree.
RegularityVerdict is_sparse_superregular(const Graph& g, const std::vector<int>& left,
                                         const std::vector<int>& right, double eps, double d,
                                         double dstar, double c, std::uint64_t seed = 0,
                                         const ToleranceConfig& cfg = {});

// Seeded random split of a near-regular pair into (H, G-H) where H carries a
// 2*gamma fraction of each vertex's edges and is sparse-superregular with
// parameters (eps, 2 gamma, gamma, 3 gamma); redrawn on failure.
std::pair<Graph, Graph> sparse_split(const Graph& g, const std::vector<int>& left,
                                     const std::vector<int>& right, double gamma, double eps,
                                     const ToleranceConfig& cfg, std::uint64_t seed);

// exact eps-regularity kernels (exposed for tests/bench); deviation is the
// worst |d(A',B') - d| found
struct RegularityScan {
    double worst_abs_deviation = 0;
    double lo_density = 0, hi_density = 0;
};
RegularityScan eps_regular_scan_serial(const Graph& g, const std::vector<int>& left,
                                       const std::vector<int>& right, double eps);
RegularityScan eps_regular_scan_parallel(const Graph& g, const std::vector<int>& left,
                                         const std::vector<int>& right, double eps);

}  // namespace structure
}  // namespace hamdec
