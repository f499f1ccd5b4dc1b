#pragma once

#include <stdexcept>
#include <string>

namespace hamdec {

// Caller passed arguments outside an operation's domain (bad n, wrong parity,
// violated congruence, out-of-range vertex).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Input text did not conform to a file format.
struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// A construction's hypotheses turned out not to hold on the concrete input
// (flow too small, no augmenting structure, search exhausted).
struct infeasible_error : std::runtime_error {
    explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

// A randomized construction failed its verification checks within the retry
// budget.  Carries the worst deviation seen.
struct tolerance_error : std::runtime_error {
    double worst_deviation;
    tolerance_error(const std::string& what, double dev)
        : std::runtime_error(what), worst_deviation(dev) {}
};

// An exact mode was requested above its configured size cap.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal contract between operations was violated (e.g. a cycle fed to
// splice is not consistent with the fictive system).
struct contract_error : std::runtime_error {
    explicit contract_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hamdec
