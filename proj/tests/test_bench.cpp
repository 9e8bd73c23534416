#include <doctest.h>

#include <cmath>
#include <limits>

#include "csbound/bench.hpp"

using namespace csbound;

namespace {

SweepConfig small_config() {
    SweepConfig cfg;
    cfg.model.m = 32;
    cfg.model.n = 8;
    cfg.model.sigma_e2 = 1e-4;
    cfg.model.prior = {0.9, 0.5, 1e-5};
    cfg.n_grid = {8, 16};
    cfg.trials = 4;
    cfg.master_seed = 12345;
    cfg.workers = 1;
    return cfg;
}

}  // namespace

TEST_CASE("mse_db aggregation") {
    CHECK(mse_db(std::vector<double>(100, 1.0)) == doctest::Approx(0.0));
    CHECK(mse_db(std::vector<double>(7, 0.01)) == doctest::Approx(-20.0));
    CHECK(mse_db({0.0, 2.0}) == doctest::Approx(0.0));
    CHECK(std::isinf(mse_db({0.0, 0.0})));
    CHECK(mse_db({0.0, 0.0}) < 0);
    CHECK_THROWS_AS(mse_db({}), std::invalid_argument);
    CHECK_THROWS_AS(mse_db({-1.0}), std::invalid_argument);
}

TEST_CASE("run_trial is deterministic in the trial seed") {
    SweepConfig cfg = small_config();
    auto reg = default_solvers();
    const std::uint64_t seed = trial_seed(cfg.master_seed, 0, 3);
    auto a = run_trial(cfg.model, 16, cfg.solvers, reg, cfg.solver_cfg, seed);
    auto b = run_trial(cfg.model, 16, cfg.solvers, reg, cfg.solver_cfg, seed);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        REQUIRE(a[i].has_value());
        CHECK(*a[i] == *b[i]);
    }
}

TEST_CASE("square invertible instances recover exactly") {
    SweepConfig cfg = small_config();
    cfg.model.m = 8;
    cfg.model.sigma_e2 = 0.0;
    auto reg = default_solvers();
    auto errs = run_trial(cfg.model, 8, cfg.solvers, reg, cfg.solver_cfg,
                          trial_seed(9, 0, 0));
    for (const auto& e : errs) {
        REQUIRE(e.has_value());
        CHECK(*e <= 1e-8);
    }
}

TEST_CASE("sweep layout and determinism across worker counts") {
    SweepConfig cfg = small_config();
    SweepResult one = run_sweep(cfg);
    cfg.workers = 2;
    SweepResult two = run_sweep(cfg);

    CHECK(one.rows.size() == cfg.n_grid.size() * (cfg.solvers.size() + 2));
    REQUIRE(one.rows.size() == two.rows.size());
    for (std::size_t i = 0; i < one.rows.size(); ++i) {
        CHECK(one.rows[i].curve == two.rows[i].curve);
        CHECK(one.rows[i].n == two.rows[i].n);
        // bitwise equality, not approximate
        CHECK(std::memcmp(&one.rows[i].value_db, &two.rows[i].value_db,
                          sizeof(double)) == 0);
        CHECK(one.rows[i].failures == two.rows[i].failures);
    }
}

TEST_CASE("per-trial errors reproduce the tabulated cell") {
    SweepConfig cfg = small_config();
    cfg.keep_per_trial = true;
    SweepResult res = run_sweep(cfg);
    REQUIRE(res.per_trial.size() == cfg.n_grid.size());
    for (std::size_t ni = 0; ni < cfg.n_grid.size(); ++ni) {
        for (std::size_t s = 0; s < cfg.solvers.size(); ++s) {
            std::vector<double> ok;
            for (double e : res.per_trial[ni][s])
                if (!std::isnan(e)) ok.push_back(e);
            const SweepRow& row = res.rows[ni * (cfg.solvers.size() + 2) + s];
            CHECK(row.curve == cfg.solvers[s]);
            if (!ok.empty()) {
                const double again = mse_db(ok);
                CHECK(std::memcmp(&again, &row.value_db, sizeof(double)) == 0);
            }
        }
    }
}

TEST_CASE("bound rows are present and solver-independent") {
    SweepConfig cfg = small_config();
    SweepResult res = run_sweep(cfg);
    SweepConfig cfg2 = small_config();
    cfg2.solvers = {"omp"};
    SweepResult res2 = run_sweep(cfg2);

    auto find_bound = [](const SweepResult& r, int n, const std::string& c) {
        for (const auto& row : r.rows)
            if (row.n == n && row.curve == c) return row.value_db;
        return std::numeric_limits<double>::quiet_NaN();
    };
    for (int n : cfg.n_grid) {
        CHECK(find_bound(res, n, "bcrb_nonblind") ==
              find_bound(res2, n, "bcrb_nonblind"));
        CHECK(find_bound(res, n, "bcrb_blind") ==
              find_bound(res2, n, "bcrb_blind"));
    }
}

TEST_CASE("bernoulli ensembles sweep with an undefined blind line") {
    SweepConfig cfg = small_config();
    cfg.model.ensemble.kind = EnsembleKind::BernoulliPm1;
    SweepResult res = run_sweep(cfg);
    int blind_rows = 0;
    for (const auto& row : res.rows) {
        if (row.curve == "bcrb_blind") {
            ++blind_rows;
            CHECK(std::isnan(row.value_db));
        }
        if (row.curve == "bcrb_nonblind") CHECK(std::isfinite(row.value_db));
    }
    CHECK(blind_rows == 2);
}

TEST_CASE("externally registered solvers join the sweep") {
    auto reg = default_solvers();
    // a support-oracle least-squares "solver" plugged in under a new name
    reg["oracle_ls"] = [](const Eigen::MatrixXd& d, const Eigen::VectorXd& y,
                          const SolverConfig&) {
        RecoveryOutput out;
        out.w_hat = d.transpose() * (d * d.transpose()).ldlt().solve(y);
        out.residual_norm = (y - d * out.w_hat).norm();
        return out;
    };
    SweepConfig cfg = small_config();
    cfg.solvers = {"omp", "oracle_ls"};
    SweepResult res = run_sweep(cfg, reg);
    bool found = false;
    for (const auto& row : res.rows)
        if (row.curve == "oracle_ls") found = true;
    CHECK(found);
}

TEST_CASE("config validation") {
    SweepConfig cfg = small_config();
    cfg.n_grid = {16, 8};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = small_config();
    cfg.trials = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = small_config();
    cfg.solvers = {"nope"};
    CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
}
