#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "noiselab/besov.hpp"
#include "noiselab/fourier_besov.hpp"
#include "noiselab/orlicz.hpp"

namespace noiselab {

enum class Verdict { Pass, Fail, Inconclusive };
std::string to_string(Verdict v);

/// One pre-registered statistical check with its outcome.
struct Assertion {
    std::string id;
    std::string description;
    double observed = 0.0;
    double reference = 0.0;  // target value or bound
    double tolerance = 0.0;
    Verdict verdict = Verdict::Inconclusive;
};

using CsvValue = std::variant<std::int64_t, double, std::string>;

struct CsvTable {
    std::string name;  // file stem, e.g. "frontier_p2_s-0.5_qinf"
    std::vector<std::string> header;
    std::vector<std::vector<CsvValue>> rows;
};

struct ExperimentConfig {
    std::string experiment = "lln_besov";
    std::string space = "besov";  // frontier/tail: besov | fourier_besov
    int d = 1;
    double p = 2.0;
    double q = std::numeric_limits<double>::infinity();
    std::optional<double> s;  // defaults to the critical index
    int jmax = 12;
    std::int64_t cutoff = 8192;  // N; must satisfy N >= 2^{jmax+1}
    std::int64_t trials = 100;
    std::uint64_t seed = 0;
    PartitionProfile profile = PartitionProfile::sharp();
    int osf = 4;
    double quadrature_tol = 1e-6;
    int threads = 1;
    bool real_noise = false;
    std::int64_t coeff_budget = kDefaultCoeffBudget;
    std::int64_t grid_budget = kDefaultGridBudget;
    std::string out_dir;
    std::map<std::string, double> tolerances;  // per-assertion overrides
    std::vector<double> s_list, p_list, q_list;

    double tol(const std::string& key, double fallback) const;
    /// Throws ConfigError on violations (N/jmax coupling, ranges).
    void validate() const;
};

struct ExperimentSummary {
    std::string experiment;
    ExperimentConfig config;
    std::vector<Assertion> assertions;
    std::vector<CsvTable> tables;
    std::map<std::string, double> scalars;  // medians, slopes, reported constants

    Verdict overall() const;
    const Assertion* find(const std::string& id) const;
};

ExperimentSummary run_lln_besov(const ExperimentConfig& cfg);
ExperimentSummary run_lln_fb(const ExperimentConfig& cfg);
ExperimentSummary run_frontier(const ExperimentConfig& cfg);
ExperimentSummary run_mean_identity(const ExperimentConfig& cfg);
ExperimentSummary run_hv_check(const ExperimentConfig& cfg);
ExperimentSummary run_tail(const ExperimentConfig& cfg);
ExperimentSummary run_divergence_checks(const ExperimentConfig& cfg);
ExperimentSummary run_logsup(const ExperimentConfig& cfg);
ExperimentSummary run_equivalence(const ExperimentConfig& cfg);

/// Dispatch by cfg.experiment name; throws ConfigError for unknown names.
ExperimentSummary run_experiment(const ExperimentConfig& cfg);

// Shared statistics helpers.
struct MeanSe {
    double mean = 0.0;
    double se = 0.0;
    std::int64_t n = 0;
};
MeanSe mean_se(const std::vector<double>& xs);
double median_of(std::vector<double> xs);
/// Least-squares slope of y against x.
double ls_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Runs fn(trial) for trial in [0, trials); work is split statically across
/// threads and any exception is rethrown. Results must be written to
/// per-trial slots so aggregation stays order-independent.
void parallel_trials(std::int64_t trials, int threads,
                     const std::function<void(std::int64_t)>& fn);

}  // namespace noiselab
