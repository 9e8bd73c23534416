#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "csbound/bounds.hpp"
#include "csbound/model.hpp"
#include "csbound/recovery.hpp"

namespace csbound {

struct SweepConfig {
    CsModel model;                 // n is overridden per grid point
    std::vector<int> n_grid = {60, 80, 100, 120, 140, 160, 180, 200};
    int trials = 100;
    std::uint64_t master_seed = 0;
    std::vector<std::string> solvers = {"omp", "sl0", "bp"};
    SolverConfig solver_cfg;
    int workers = 0;               // 0 = number of logical processors
    bool keep_per_trial = false;

    void validate() const;
};

struct SweepRow {
    int n = 0;
    std::string curve;      // solver name, "bcrb_nonblind" or "bcrb_blind"
    double value_db = 0.0;  // MSE in dB for solvers, 10 log10(trace J^-1) for bounds
    int trials = 0;
    int failures = 0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::uint64_t master_seed = 0;
    // retained per-trial squared errors [n index][solver index][trial],
    // NaN marks a failed cell; filled only when keep_per_trial is set
    std::vector<std::vector<std::vector<double>>> per_trial;
    std::vector<int> n_grid;
    std::vector<std::string> solver_names;
};

// Eq.-style MSE aggregation: 10 log10(mean of per-trial squared l2 errors).
// A zero mean maps to -infinity.
double mse_db(const std::vector<double>& squared_errors);

// One instance draw shared by every solver; per-solver squared errors,
// nullopt where a solver threw. Deterministic in trial_seed.
std::vector<std::optional<double>> run_trial(
    const CsModel& model, int n, const std::vector<std::string>& solver_names,
    const std::map<std::string, Solver>& registry, const SolverConfig& cfg,
    std::uint64_t trial_seed);

// Full sweep over the measurement grid. Trials run on a worker pool; the
// result is independent of the worker count.
SweepResult run_sweep(const SweepConfig& cfg,
                      const std::map<std::string, Solver>& registry);

SweepResult run_sweep(const SweepConfig& cfg);

// Documented derivation of the per-trial seed from the master seed and the
// (grid index, trial index) pair.
std::uint64_t trial_seed(std::uint64_t master_seed, int n_index, int trial_index);

}  // namespace csbound
