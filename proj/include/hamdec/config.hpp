#pragma once

#include <iosfwd>
#include <map>
#include <string>

namespace hamdec {

// Flat key=value configuration.  The paper's constant hierarchies
// ("0 < 1/n << a << b") are replaced by these explicit desk-scale values;
// defaults are chosen so the shipped tests pass deterministically under
// seed 0.
struct ToleranceConfig {
    double eps0 = 0.3;          // framework / exceptional-set smallness
    double eps1 = 0.35;         // per-vertex degree deviation in equipartitions
    double eps2 = 0.75;         // per-pair edge-count deviation in equipartitions
    double nu = 0.1;            // robust expansion
    double tau = 0.3;           // robust expansion window
    double kappa = 0.15;        // classify minimum-degree slack: delta >= (1/2-kappa) n
    double eps_close = 0.02;    // closeness threshold used by classify
    double eps_ex = 0.08;       // closeness threshold used by framework construction
    int retry_budget = 64;      // randomized constructions: redraw attempts
    int expander_exact_cap = 22;   // exact robust-expander enumeration cap on n
    int regularity_exact_cap = 16; // exact eps-regularity cap on class size m
    int bisection_exact_cap = 24;  // exact min/max bisection cap on n
    int oracle_onefact_cap = 14;
    int oracle_hamdec_cap = 12;
    int oracle_packing_cap = 10;
    int oracle_capped_edge_cap = 30;
    int oracle_regeven_cap = 12;
    double assign_lower_frac = 31.0 / 60.0;  // lemma bound on a_i; relax for tiny r via config

    static ToleranceConfig load(std::istream& in);
    static ToleranceConfig load_file(const std::string& path);
    void save(std::ostream& out) const;

    std::map<std::string, double> as_map() const;
    void set(const std::string& key, double value);
};

}  // namespace hamdec
