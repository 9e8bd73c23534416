// Command line front end: evaluate bounds, run the verification oracles,
// and run Monte Carlo sweeps. Emits plot-ready CSV.
//
// Exit codes: 0 success, 1 verification failure, 2 configuration error,
// 3 internal numerical failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "csbound/bench.hpp"
#include "csbound/quadrature.hpp"
#include "csbound/report.hpp"
#include "csbound/verify.hpp"

namespace {

struct CliOptions {
    int m = 512;
    double p = 0.9;
    double sigma = 0.5;
    double sigma0 = 1e-5;
    double sigma_e2 = 1e-4;
    double sigma_r2 = 1.0;
    std::string ensemble = "gaussian";
    std::vector<int> n_grid = {60, 80, 100, 120, 140, 160, 180, 200};
    int trials = 100;
    std::uint64_t seed = 0;
    std::vector<std::string> solvers = {"omp", "sl0", "bp"};
    csbound::SolverConfig solver;
    int workers = 0;
    std::string out;
    bool gnuplot = false;
    std::string config_path;
    std::map<std::string, CLI::Option*> by_key;  // config key -> CLI option
};

void add_model_options(CLI::App* cmd, CliOptions& o) {
    o.by_key["m"] = cmd->add_option("--m", o.m, "Signal length");
    o.by_key["p"] = cmd->add_option("--p", o.p, "Probability of a zero coefficient");
    o.by_key["sigma"] =
        cmd->add_option("--sigma", o.sigma, "Std dev of active coefficients");
    o.by_key["sigma0"] = cmd->add_option("--sigma0", o.sigma0,
                                         "Smoothing width for the prior spike");
    o.by_key["sigma-e2"] =
        cmd->add_option("--sigma-e2", o.sigma_e2, "Measurement noise variance");
    o.by_key["sigma-r2"] = cmd->add_option("--sigma-r2", o.sigma_r2,
                                           "Measurement matrix element variance");
    o.by_key["ensemble"] =
        cmd->add_option("--ensemble", o.ensemble,
                        "Matrix ensemble: gaussian | bernoulli")
            ->check(CLI::IsMember({"gaussian", "bernoulli"}));
    o.by_key["n-grid"] =
        cmd->add_option("--n-grid", o.n_grid, "Measurement counts (comma separated)")
            ->delimiter(',');
    o.by_key["seed"] = cmd->add_option("--seed", o.seed, "Master seed");
    cmd->add_option("--config", o.config_path,
                    "Read parameters from a key = value file (flags win)");
    cmd->add_option("--out", o.out, "Write CSV to this file instead of stdout");
}

void add_sweep_options(CLI::App* cmd, CliOptions& o) {
    o.by_key["trials"] = cmd->add_option("--trials", o.trials, "Trials per grid point");
    o.by_key["solvers"] =
        cmd->add_option("--solvers", o.solvers, "Solvers to run (comma separated)")
            ->delimiter(',');
    o.by_key["omp-iters"] =
        cmd->add_option("--omp-iters", o.solver.omp_iters, "OMP iteration count");
    o.by_key["sl0-sigma-min"] =
        cmd->add_option("--sl0-sigma-min", o.solver.sl0_sigma_min, "SL0 final sigma");
    o.by_key["sl0-decrease"] = cmd->add_option("--sl0-decrease", o.solver.sl0_decrease,
                                               "SL0 sigma decrease factor");
    o.by_key["sl0-inner-iters"] = cmd->add_option(
        "--sl0-inner-iters", o.solver.sl0_inner_iters, "SL0 steps per sigma level");
    o.by_key["sl0-step"] =
        cmd->add_option("--sl0-step", o.solver.sl0_step, "SL0 gradient step scale");
    o.by_key["bp-tol"] =
        cmd->add_option("--bp-tol", o.solver.bp_tol, "BP duality gap tolerance");
    o.by_key["bp-max-iters"] =
        cmd->add_option("--bp-max-iters", o.solver.bp_max_iters, "BP iteration cap");
    o.by_key["workers"] = cmd->add_option("--workers", o.workers,
                                          "Worker threads (0 = logical processors)")
                              ->envname("CSBOUND_WORKERS");
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

// flat key = value configuration; precedence is defaults < file < flags
void apply_config_file(CliOptions& o) {
    if (o.config_path.empty()) return;
    std::ifstream in(o.config_path);
    if (!in)
        throw std::invalid_argument("cannot open config file: " + o.config_path);

    auto fail = [&](int line, const std::string& msg) {
        throw std::invalid_argument("config " + o.config_path + ":" +
                                    std::to_string(line) + ": " + msg);
    };

    auto to_double = [&](const std::string& v, int line, const std::string& key) {
        std::size_t pos = 0;
        double x = 0.0;
        try {
            x = std::stod(v, &pos);
        } catch (...) {
            fail(line, "invalid number for '" + key + "': " + v);
        }
        if (pos != v.size()) fail(line, "invalid number for '" + key + "': " + v);
        return x;
    };
    auto to_long = [&](const std::string& v, int line, const std::string& key) {
        std::size_t pos = 0;
        long long x = 0;
        try {
            x = std::stoll(v, &pos);
        } catch (...) {
            fail(line, "invalid integer for '" + key + "': " + v);
        }
        if (pos != v.size()) fail(line, "invalid integer for '" + key + "': " + v);
        return x;
    };
    auto split = [](const std::string& v) {
        std::vector<std::string> parts;
        std::stringstream ss(v);
        std::string item;
        while (std::getline(ss, item, ',')) parts.push_back(trim(item));
        return parts;
    };

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#' || stripped[0] == ';') continue;
        if (stripped[0] == '[')
            fail(lineno, "sections are not supported; use flat key = value");
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) fail(lineno, "expected key = value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));

        auto it = o.by_key.find(key);
        if (it == o.by_key.end()) fail(lineno, "unknown key '" + key + "'");
        if (it->second->count() > 0) continue;  // the flag wins

        if (key == "m") o.m = static_cast<int>(to_long(value, lineno, key));
        else if (key == "p") o.p = to_double(value, lineno, key);
        else if (key == "sigma") o.sigma = to_double(value, lineno, key);
        else if (key == "sigma0") o.sigma0 = to_double(value, lineno, key);
        else if (key == "sigma-e2") o.sigma_e2 = to_double(value, lineno, key);
        else if (key == "sigma-r2") o.sigma_r2 = to_double(value, lineno, key);
        else if (key == "ensemble") {
            if (value != "gaussian" && value != "bernoulli")
                fail(lineno, "ensemble must be gaussian or bernoulli");
            o.ensemble = value;
        } else if (key == "n-grid") {
            o.n_grid.clear();
            for (const auto& part : split(value))
                o.n_grid.push_back(static_cast<int>(to_long(part, lineno, key)));
        } else if (key == "seed") {
            o.seed = static_cast<std::uint64_t>(to_long(value, lineno, key));
        } else if (key == "trials") {
            o.trials = static_cast<int>(to_long(value, lineno, key));
        } else if (key == "solvers") {
            o.solvers = split(value);
        } else if (key == "omp-iters") {
            o.solver.omp_iters = static_cast<int>(to_long(value, lineno, key));
        } else if (key == "sl0-sigma-min") {
            o.solver.sl0_sigma_min = to_double(value, lineno, key);
        } else if (key == "sl0-decrease") {
            o.solver.sl0_decrease = to_double(value, lineno, key);
        } else if (key == "sl0-inner-iters") {
            o.solver.sl0_inner_iters = static_cast<int>(to_long(value, lineno, key));
        } else if (key == "sl0-step") {
            o.solver.sl0_step = to_double(value, lineno, key);
        } else if (key == "bp-tol") {
            o.solver.bp_tol = to_double(value, lineno, key);
        } else if (key == "bp-max-iters") {
            o.solver.bp_max_iters = static_cast<int>(to_long(value, lineno, key));
        } else if (key == "workers") {
            o.workers = static_cast<int>(to_long(value, lineno, key));
        }
    }
}

csbound::SweepConfig to_config(const CliOptions& o) {
    csbound::SweepConfig cfg;
    cfg.model.m = o.m;
    cfg.model.n = o.n_grid.empty() ? 1 : o.n_grid.front();
    cfg.model.prior = {o.p, o.sigma, o.sigma0};
    cfg.model.sigma_e2 = o.sigma_e2;
    cfg.model.ensemble.sigma_r2 = o.sigma_r2;
    cfg.model.ensemble.kind = o.ensemble == "bernoulli"
                                  ? csbound::EnsembleKind::BernoulliPm1
                                  : csbound::EnsembleKind::Gaussian;
    cfg.n_grid = o.n_grid;
    cfg.trials = o.trials;
    cfg.master_seed = o.seed;
    cfg.solvers = o.solvers;
    cfg.solver_cfg = o.solver;
    cfg.workers = o.workers;
    return cfg;
}

class OutputStream {
  public:
    explicit OutputStream(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::invalid_argument("cannot open output file: " + path);
        }
    }
    std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

int run_bound(const CliOptions& o) {
    csbound::SweepConfig cfg = to_config(o);
    cfg.validate();
    auto rows = csbound::bound_table(cfg.model, cfg.n_grid);
    OutputStream out(o.out);
    csbound::write_config_echo(out.get(), cfg);
    csbound::write_bound_csv(out.get(), rows);
    return 0;
}

int run_verify(const CliOptions& o) {
    auto rows = csbound::run_verification(o.seed);
    OutputStream out(o.out);
    csbound::QuadratureSpec spec;
    out.get() << "# seed = " << o.seed << "\n";
    out.get() << "# quad-abs-tol = " << csbound::format_value(spec.abs_tol) << "\n";
    out.get() << "# quad-rel-tol = " << csbound::format_value(spec.rel_tol) << "\n";
    out.get() << "# quad-max-subdivisions = " << spec.max_subdivisions << "\n";
    out.get() << "# quad-truncation-radius = "
              << csbound::format_value(spec.truncation_radius) << "\n";
    csbound::write_verify_csv(out.get(), rows);
    return csbound::all_passed(rows) ? 0 : 1;
}

int run_sweep_cmd(const CliOptions& o) {
    csbound::SweepConfig cfg = to_config(o);
    cfg.validate();
    csbound::SweepResult result = csbound::run_sweep(cfg);
    {
        OutputStream out(o.out);
        csbound::write_config_echo(out.get(), cfg);
        csbound::write_sweep_csv(out.get(), result);
    }
    if (o.gnuplot) {
        if (o.out.empty()) std::cout << "\n";
        csbound::write_sweep_gnuplot(std::cout, result);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bayesian lower bounds and recovery benchmarks for noisy "
                 "compressed sensing"};
    app.require_subcommand(1);

    CliOptions bound_opts, verify_opts, sweep_opts;

    CLI::App* bound = app.add_subcommand("bound", "Evaluate the bound curves");
    add_model_options(bound, bound_opts);

    CLI::App* verify = app.add_subcommand("verify", "Run the oracle suite");
    verify->add_option("--seed", verify_opts.seed, "Master seed");
    verify->add_option("--out", verify_opts.out, "Write CSV to this file");

    CLI::App* sweep = app.add_subcommand("sweep", "Run the Monte Carlo benchmark");
    add_model_options(sweep, sweep_opts);
    add_sweep_options(sweep, sweep_opts);
    sweep->add_flag("--gnuplot", sweep_opts.gnuplot,
                    "Also print a wide table for plotting");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (bound->parsed()) {
            apply_config_file(bound_opts);
            return run_bound(bound_opts);
        }
        if (verify->parsed()) return run_verify(verify_opts);
        if (sweep->parsed()) {
            apply_config_file(sweep_opts);
            return run_sweep_cmd(sweep_opts);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
