#include "csbound/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace csbound {

void SweepConfig::validate() const {
    model.validate();
    solver_cfg.validate();
    if (trials < 1) throw std::invalid_argument("SweepConfig: trials must be >= 1");
    if (n_grid.empty()) throw std::invalid_argument("SweepConfig: n_grid is empty");
    for (std::size_t i = 0; i + 1 < n_grid.size(); ++i)
        if (n_grid[i] >= n_grid[i + 1])
            throw std::invalid_argument("SweepConfig: n_grid must be strictly increasing");
    for (int n : n_grid)
        if (n < 1) throw std::invalid_argument("SweepConfig: n values must be >= 1");
    if (workers < 0) throw std::invalid_argument("SweepConfig: workers must be >= 0");
}

double mse_db(const std::vector<double>& squared_errors) {
    if (squared_errors.empty())
        throw std::invalid_argument("mse_db: empty error list");
    double sum = 0.0;
    for (double e : squared_errors) {
        if (!(e >= 0.0)) throw std::invalid_argument("mse_db: errors must be >= 0");
        sum += e;
    }
    const double mean = sum / static_cast<double>(squared_errors.size());
    if (mean == 0.0) return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(mean);
}

std::uint64_t trial_seed(std::uint64_t master_seed, int n_index, int trial_index) {
    // one substream id per (grid point, trial); within the trial, streams
    // 0/1/2 drive the signal, matrix and noise draws
    const std::uint64_t id = (static_cast<std::uint64_t>(n_index) << 32) |
                             static_cast<std::uint64_t>(trial_index);
    std::uint64_t s = master_seed + (id + 1) * 0x9E3779B97F4A7C15ULL;
    return splitmix64(s);
}

std::vector<std::optional<double>> run_trial(
    const CsModel& model, int n, const std::vector<std::string>& solver_names,
    const std::map<std::string, Solver>& registry, const SolverConfig& cfg,
    std::uint64_t seed) {
    CsModel local = model;
    local.n = n;
    local.validate();

    Rng signal_rng = Rng::substream(seed, 0);
    Rng matrix_rng = Rng::substream(seed, 1);
    Rng noise_rng = Rng::substream(seed, 2);

    const Eigen::VectorXd w = sample_signal(local.prior, local.m, signal_rng);
    const Eigen::MatrixXd phi =
        sample_matrix(local.ensemble, n, local.m, matrix_rng);
    const Measurement meas = measure(local, phi, w, noise_rng);

    std::vector<std::optional<double>> errors;
    errors.reserve(solver_names.size());
    for (const auto& name : solver_names) {
        auto it = registry.find(name);
        if (it == registry.end())
            throw std::invalid_argument("run_trial: unknown solver '" + name + "'");
        try {
            RecoveryOutput out = it->second(meas.d, meas.y, cfg);
            errors.emplace_back((out.w_hat - w).squaredNorm());
        } catch (const std::exception&) {
            errors.emplace_back(std::nullopt);
        }
    }
    return errors;
}

SweepResult run_sweep(const SweepConfig& cfg,
                      const std::map<std::string, Solver>& registry) {
    cfg.validate();
    for (const auto& name : cfg.solvers)
        if (registry.find(name) == registry.end())
            throw std::invalid_argument("run_sweep: unknown solver '" + name + "'");

    int workers = cfg.workers;
    if (workers == 0)
        workers = static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min(workers, cfg.trials));

    SweepResult result;
    result.master_seed = cfg.master_seed;
    result.n_grid = cfg.n_grid;
    result.solver_names = cfg.solvers;

    const std::size_t n_solvers = cfg.solvers.size();
    const double nan = std::numeric_limits<double>::quiet_NaN();

    // blind bound does not depend on n; it is only derived for Gaussian
    // ensembles, so other ensembles get an undefined (nan) line
    std::optional<BoundReport> blind;
    if (cfg.model.ensemble.kind == EnsembleKind::Gaussian)
        blind = blind_bcrb(cfg.model);

    for (std::size_t ni = 0; ni < cfg.n_grid.size(); ++ni) {
        const int n = cfg.n_grid[ni];

        // per-trial squared errors, keyed by trial index so that the
        // aggregate is independent of scheduling
        std::vector<std::vector<double>> cell(
            n_solvers, std::vector<double>(cfg.trials, nan));

        std::atomic<int> next{0};
        auto work = [&]() {
            for (;;) {
                const int t = next.fetch_add(1);
                if (t >= cfg.trials) return;
                auto errs = run_trial(cfg.model, n, cfg.solvers, registry,
                                      cfg.solver_cfg,
                                      trial_seed(cfg.master_seed,
                                                 static_cast<int>(ni), t));
                for (std::size_t s = 0; s < n_solvers; ++s)
                    if (errs[s]) cell[s][t] = *errs[s];
            }
        };
        if (workers == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (int i = 0; i < workers; ++i) pool.emplace_back(work);
            for (auto& th : pool) th.join();
        }

        for (std::size_t s = 0; s < n_solvers; ++s) {
            std::vector<double> ok;
            ok.reserve(cfg.trials);
            int failures = 0;
            for (double e : cell[s]) {
                if (std::isnan(e)) ++failures;
                else ok.push_back(e);
            }
            SweepRow row;
            row.n = n;
            row.curve = cfg.solvers[s];
            row.trials = static_cast<int>(ok.size());
            row.failures = failures;
            row.value_db = ok.empty()
                               ? std::numeric_limits<double>::quiet_NaN()
                               : mse_db(ok);
            result.rows.push_back(std::move(row));
        }

        CsModel at_n = cfg.model;
        at_n.n = n;
        const BoundReport nonblind = nonblind_bcrb_bg(at_n);
        SweepRow nb;
        nb.n = n;
        nb.curve = "bcrb_nonblind";
        nb.value_db = 10.0 * std::log10(at_n.m * nonblind.avg_bound);
        result.rows.push_back(nb);

        SweepRow bl;
        bl.n = n;
        bl.curve = "bcrb_blind";
        if (!blind) {
            bl.value_db = nan;
        } else if (std::isinf(blind->avg_bound)) {
            bl.value_db = std::numeric_limits<double>::infinity();
        } else {
            bl.value_db = 10.0 * std::log10(cfg.model.m * blind->avg_bound);
        }
        result.rows.push_back(bl);

        if (cfg.keep_per_trial) result.per_trial.push_back(std::move(cell));
    }
    return result;
}

SweepResult run_sweep(const SweepConfig& cfg) {
    return run_sweep(cfg, default_solvers());
}

}  // namespace csbound
