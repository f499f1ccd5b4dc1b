#include "hamdec/config.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hamdec/error.hpp"

namespace hamdec {

namespace {

struct Field {
    const char* name;
    double ToleranceConfig::* dbl = nullptr;
    int ToleranceConfig::* integer = nullptr;
};

const Field kFields[] = {
    {"eps0", &ToleranceConfig::eps0, nullptr},
    {"eps1", &ToleranceConfig::eps1, nullptr},
    {"eps2", &ToleranceConfig::eps2, nullptr},
    {"nu", &ToleranceConfig::nu, nullptr},
    {"tau", &ToleranceConfig::tau, nullptr},
    {"kappa", &ToleranceConfig::kappa, nullptr},
    {"eps_close", &ToleranceConfig::eps_close, nullptr},
    {"eps_ex", &ToleranceConfig::eps_ex, nullptr},
    {"assign_lower_frac", &ToleranceConfig::assign_lower_frac, nullptr},
    {"retry_budget", nullptr, &ToleranceConfig::retry_budget},
    {"expander_exact_cap", nullptr, &ToleranceConfig::expander_exact_cap},
    {"regularity_exact_cap", nullptr, &ToleranceConfig::regularity_exact_cap},
    {"bisection_exact_cap", nullptr, &ToleranceConfig::bisection_exact_cap},
    {"oracle_onefact_cap", nullptr, &ToleranceConfig::oracle_onefact_cap},
    {"oracle_hamdec_cap", nullptr, &ToleranceConfig::oracle_hamdec_cap},
    {"oracle_packing_cap", nullptr, &ToleranceConfig::oracle_packing_cap},
    {"oracle_capped_edge_cap", nullptr, &ToleranceConfig::oracle_capped_edge_cap},
    {"oracle_regeven_cap", nullptr, &ToleranceConfig::oracle_regeven_cap},
};

}  // namespace

void ToleranceConfig::set(const std::string& key, double value) {
    for (const auto& f : kFields) {
        if (key == f.name) {
            if (f.dbl)
                this->*(f.dbl) = value;
            else
                this->*(f.integer) = static_cast<int>(std::llround(value));
            return;
        }
    }
    throw domain_error("unknown config key: " + key);
}

std::map<std::string, double> ToleranceConfig::as_map() const {
    std::map<std::string, double> m;
    for (const auto& f : kFields)
        m[f.name] = f.dbl ? this->*(f.dbl) : static_cast<double>(this->*(f.integer));
    return m;
}

ToleranceConfig ToleranceConfig::load(std::istream& in) {
    ToleranceConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw parse_error(lineno, "expected key=value");
        std::string key = line.substr(i, eq - i);
        key.erase(key.find_last_not_of(" \t") + 1);
        double value;
        std::istringstream val(line.substr(eq + 1));
        if (!(val >> value)) throw parse_error(lineno, "bad value for " + key);
        cfg.set(key, value);
    }
    return cfg;
}

ToleranceConfig ToleranceConfig::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open config file " + path);
    return load(in);
}

void ToleranceConfig::save(std::ostream& out) const {
    for (const auto& [k, v] : as_map()) out << k << "=" << v << '\n';
}

}  // namespace hamdec
