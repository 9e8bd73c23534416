#include "csbound/report.hpp"

#include <cmath>
#include <cstdio>
#include <map>

namespace csbound {

std::string format_value(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::Ok: return "ok";
        case Regime::OutOfRegime: return "out_of_regime";
        case Regime::Degenerate: return "degenerate";
    }
    return "unknown";
}

void write_config_echo(std::ostream& os, const SweepConfig& cfg) {
    os << "# m = " << cfg.model.m << "\n";
    os << "# p = " << format_value(cfg.model.prior.p) << "\n";
    os << "# sigma = " << format_value(cfg.model.prior.sigma) << "\n";
    os << "# sigma0 = " << format_value(cfg.model.prior.sigma0) << "\n";
    os << "# sigma-e2 = " << format_value(cfg.model.sigma_e2) << "\n";
    os << "# sigma-r2 = " << format_value(cfg.model.ensemble.sigma_r2) << "\n";
    os << "# ensemble = "
       << (cfg.model.ensemble.kind == EnsembleKind::Gaussian ? "gaussian"
                                                             : "bernoulli")
       << "\n";
    os << "# n-grid =";
    for (int n : cfg.n_grid) os << " " << n;
    os << "\n";
    os << "# trials = " << cfg.trials << "\n";
    os << "# seed = " << cfg.master_seed << "\n";
    os << "# solvers =";
    for (const auto& s : cfg.solvers) os << " " << s;
    os << "\n";
    os << "# omp-iters = " << cfg.solver_cfg.omp_iters << "\n";
    os << "# sl0-sigma-min = " << format_value(cfg.solver_cfg.sl0_sigma_min) << "\n";
    os << "# sl0-decrease = " << format_value(cfg.solver_cfg.sl0_decrease) << "\n";
    os << "# sl0-inner-iters = " << cfg.solver_cfg.sl0_inner_iters << "\n";
    os << "# sl0-step = " << format_value(cfg.solver_cfg.sl0_step) << "\n";
    os << "# bp-tol = " << format_value(cfg.solver_cfg.bp_tol) << "\n";
    os << "# bp-max-iters = " << cfg.solver_cfg.bp_max_iters << "\n";
}

std::vector<BoundTableRow> bound_table(const CsModel& model,
                                       const std::vector<int>& n_grid) {
    std::vector<BoundTableRow> rows;
    rows.reserve(n_grid.size());
    const BoundReport blind = blind_bcrb(model);
    for (int n : n_grid) {
        CsModel at_n = model;
        at_n.n = n;
        const BoundReport nonblind = nonblind_bcrb_bg(at_n);
        BoundTableRow row;
        row.n = n;
        row.nonblind_per_coeff = nonblind.avg_bound;
        row.nonblind_bound_db = 10.0 * std::log10(at_n.m * nonblind.avg_bound);
        row.blind_per_coeff = blind.avg_bound;
        row.blind_bound_db =
            std::isinf(blind.avg_bound)
                ? blind.avg_bound
                : 10.0 * std::log10(at_n.m * blind.avg_bound);
        row.a1 = blind.intermediates->a1;
        row.a2 = blind.intermediates->a2;
        row.a = blind.intermediates->inter.a;
        row.regime = blind.regime;
        rows.push_back(row);
    }
    return rows;
}

void write_bound_csv(std::ostream& os, const std::vector<BoundTableRow>& rows) {
    os << "n,nonblind_bound_db,blind_bound_db,nonblind_per_coeff,"
          "blind_per_coeff,A1,A2,a,regime\n";
    for (const auto& r : rows) {
        os << r.n << ',' << format_value(r.nonblind_bound_db) << ','
           << format_value(r.blind_bound_db) << ','
           << format_value(r.nonblind_per_coeff) << ','
           << format_value(r.blind_per_coeff) << ',' << format_value(r.a1)
           << ',' << format_value(r.a2) << ',' << format_value(r.a) << ','
           << regime_name(r.regime) << "\n";
    }
}

void write_sweep_csv(std::ostream& os, const SweepResult& result) {
    os << "n,curve,mse_db,trials,failures,seed\n";
    for (const auto& row : result.rows) {
        os << row.n << ',' << row.curve << ',' << format_value(row.value_db)
           << ',' << row.trials << ',' << row.failures << ','
           << result.master_seed << "\n";
    }
}

void write_sweep_gnuplot(std::ostream& os, const SweepResult& result) {
    std::vector<std::string> curves = result.solver_names;
    curves.push_back("bcrb_nonblind");
    curves.push_back("bcrb_blind");

    std::map<std::pair<int, std::string>, double> cell;
    for (const auto& row : result.rows)
        cell[{row.n, row.curve}] = row.value_db;

    os << "# n";
    for (const auto& c : curves) os << ' ' << c;
    os << "\n";
    for (int n : result.n_grid) {
        os << n;
        for (const auto& c : curves) {
            auto it = cell.find({n, c});
            os << ' ' << (it == cell.end() ? "nan" : format_value(it->second));
        }
        os << "\n";
    }
}

void write_verify_csv(std::ostream& os, const std::vector<VerifyRow>& rows) {
    os << "check,computed,expected,tolerance,status\n";
    for (const auto& r : rows) {
        os << r.name << ',' << format_value(r.computed) << ','
           << format_value(r.expected) << ',' << format_value(r.tolerance)
           << ',' << (r.pass ? "pass" : "fail") << "\n";
    }
}

}  // namespace csbound
