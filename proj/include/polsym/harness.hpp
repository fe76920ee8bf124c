#ifndef POLSYM_HARNESS_HPP
#define POLSYM_HARNESS_HPP

#include <string>
#include <vector>

#include "polsym/json_io.hpp"

namespace polsym {

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Parameters of one experiment run. Zero / empty fields are filled with
/// suite defaults by `validated`; the seed is mandatory and there is no
/// wall-clock fallback, so identical configs replay identically.
struct ExperimentConfig {
    std::string suite;  // identities | theorem2 | theorem1 | polarization | triangle

    int n_min = 0;
    int n_max = 0;
    int m_min = 0;
    int m_max = 0;
    std::vector<int> k_list;     // empty: every valid k for the shape
    std::vector<double> p_list;  // empty: suite default

    std::uint64_t seed = 0;
    bool seed_set = false;

    int instances = 0;  // random polynomials per shape
    int trials = 0;     // sampled forms per mu estimate

    std::int64_t budget_entries = kDefaultEntryBudget;
    int grid = 64;
    int refine_passes = 1;
    int restarts = 32;
    int max_iters = 200;

    std::string output_path;  // empty: caller prints the report
    std::string csv_path;     // optional flattened records
    std::string poly_path;    // optional fixed input polynomial
};

struct ExperimentReport {
    Json doc;
    int hard_failures = 0;
    int warnings = 0;

    bool passed() const { return hard_failures == 0; }
    std::string to_string() const { return doc.dump(2) + "\n"; }
};

// Fills suite defaults, checks ranges and budgets; throws ConfigError.
ExperimentConfig validated(ExperimentConfig cfg);

ExperimentReport run_identities(const ExperimentConfig& cfg);
ExperimentReport run_theorem2_chain(const ExperimentConfig& cfg);
ExperimentReport run_theorem1_poly(const ExperimentConfig& cfg);
ExperimentReport run_polarization_bound(const ExperimentConfig& cfg);
ExperimentReport run_triangle_projection(const ExperimentConfig& cfg);

// Validates and dispatches on cfg.suite.
ExperimentReport run_suite(const ExperimentConfig& cfg);

// Explicit proof-chain constants, recomputed from the shape:
//   step bound      k * 3^k * log2(2n)^(k-1)
//   chained bound   e^m * prod_{k=2..m} step bound
double theorem2_bound(int k, int n);
double theorem1_bound(int m, int n);

// Flattens the scalar fields of the report's records for plotting.
std::string report_to_csv(const Json& report);

}  // namespace polsym

#endif
