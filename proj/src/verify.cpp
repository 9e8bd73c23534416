#include "csbound/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "csbound/bounds.hpp"
#include "csbound/oracles.hpp"
#include "csbound/special.hpp"

namespace csbound {

namespace {

std::string fmt_a(double a) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", a);
    return buf;
}

VerifyRow rel_check(const std::string& name, double computed, double expected,
                    double rel_tol) {
    VerifyRow row{name, computed, expected, rel_tol, false};
    row.pass = std::abs(computed - expected) <= rel_tol * std::abs(expected);
    return row;
}

VerifyRow abs_check(const std::string& name, double computed, double expected,
                    double abs_tol) {
    VerifyRow row{name, computed, expected, abs_tol, false};
    row.pass = std::abs(computed - expected) <= abs_tol;
    return row;
}

}  // namespace

std::vector<VerifyRow> run_verification(std::uint64_t seed) {
    std::vector<VerifyRow> rows;
    QuadratureSpec spec;

    // erfcx against its integral representation
    for (double a : {0.0, 0.5, 1.0, 3.0, 5.0, 10.0, 25.0, 50.0}) {
        rows.push_back(rel_check("erfcx_vs_quad_a=" + fmt_a(a), erfcx(a),
                                 quad_erfcx(a, spec), 1e-12));
    }

    // closed C1/C2 against quadrature on a 20-point log grid over [0.01, 10]
    for (int i = 0; i < 20; ++i) {
        const double a =
            std::pow(10.0, -2.0 + 3.0 * static_cast<double>(i) / 19.0);
        rows.push_back(rel_check("c1_closed_vs_quad_a=" + fmt_a(a), c1(a),
                                 quad_c1(a, spec), 1e-8));
        rows.push_back(rel_check("c2_closed_vs_quad_a=" + fmt_a(a), c2(a),
                                 quad_c2(a, spec), 1e-8));
    }

    // published smoothed-prior integrals at p=0.9, sigma=1, sigma0=1e-5
    {
        BgPrior prior{0.9, 1.0, 1e-5};
        const PriorInfoBreakdown pb = prior_info_breakdown(prior, spec);
        rows.push_back(rel_check("D1_paper", std::abs(pb.d1), 4.7990e-25, 0.01));
        rows.push_back(rel_check("D2_paper", std::abs(pb.d2), 2.7673e-19, 0.01));
    }

    // slab-term quadrature converges to the prior information constant
    {
        double prev_deficit = 0.0;
        bool monotone = true;
        double last_d3 = 0.0;
        const double target = 0.4;  // (1-p)/sigma^2 at p=0.9, sigma=0.5
        bool first = true;
        for (double s0 : {1e-3, 1e-4, 1e-5}) {
            BgPrior prior{0.9, 0.5, s0};
            const PriorInfoBreakdown pb = prior_info_breakdown(prior, spec);
            const double deficit = std::abs(pb.d3 - target);
            if (!first && deficit >= prev_deficit) monotone = false;
            prev_deficit = deficit;
            first = false;
            last_d3 = pb.d3;
        }
        rows.push_back(rel_check("jpii_slab_vs_bg_const", last_d3, target, 1e-3));
        VerifyRow mono{"jpii_slab_sigma0_monotone", prev_deficit, 0.0, 0.0,
                       monotone};
        rows.push_back(mono);
    }

    // integral of p'' vanishes (normalized by the cancelling mass scale)
    {
        BgPrior prior{0.9, 0.5, 1e-5};
        const double scale = prior.p / (prior.sigma0 * prior.sigma0) +
                             (1.0 - prior.p) / (prior.sigma * prior.sigma);
        rows.push_back(abs_check("d2p_dw2_mass_normalized",
                                 second_derivative_mass(prior, spec) / scale,
                                 0.0, 1e-9));
    }

    // closed blind data information against Monte Carlo, small-(1-p) regime
    {
        BgPrior prior{0.999, 0.5, 1e-5};
        const double sigma_e2 = 0.01, sigma_r2 = 1.0;
        const int m = 16;
        const double closed =
            2.0 * sigma_r2 / m *
            blind_info_difference(prior, sigma_e2, sigma_r2, m);
        Rng rng = Rng::substream(seed, 101);
        const McEstimate mc =
            mc_blind_jd(prior, sigma_e2, sigma_r2, m, 1000000, rng);
        const double z = std::abs(closed - mc.value) / mc.std_err;
        rows.push_back(abs_check("blind_jd_mc_zscore", z, 0.0, 3.0));

        // the two algebraic routes to A1 - sigma_e^2 A2 agree in regime
        const ACoeffs ac = blind_a_coeffs(prior, sigma_e2, sigma_r2, m);
        rows.push_back(rel_check(
            "blind_info_stable_vs_assembled",
            blind_info_difference(prior, sigma_e2, sigma_r2, m),
            ac.a1 - sigma_e2 * ac.a2, 1e-9));
    }

    // off-diagonal terms vanish
    {
        BgPrior prior{0.9, 0.5, 1e-5};
        Rng rng = Rng::substream(seed, 102);
        const McEstimate mc =
            mc_offdiag_check(prior, 0.01, 1.0, 8, 100000, rng, false);
        rows.push_back(abs_check("offdiag_mc_zscore",
                                 std::abs(mc.value) / mc.std_err, 0.0, 3.0));
        Rng rng2 = Rng::substream(seed, 103);
        const McEstimate anti =
            mc_offdiag_check(prior, 0.01, 1.0, 8, 10000, rng2, true);
        rows.push_back(abs_check("offdiag_antithetic", anti.value, 0.0, 0.0));
    }

    // A1 - sigma_e^2 A2 stays nonnegative where the expansion is valid
    {
        double min_value = std::numeric_limits<double>::infinity();
        for (int m : {4, 8, 16, 32, 64}) {
            for (double scale : {0.2, 0.5, 1.0}) {
                const double p = 1.0 - 0.1 * scale / m;  // m(1-p) <= 0.1
                for (double sigma_e2 : {1e-4, 1e-2, 1.0}) {
                    for (double sigma : {0.5, 2.0}) {
                        BgPrior prior{p, sigma, 1e-6};
                        min_value = std::min(
                            min_value,
                            blind_info_difference(prior, sigma_e2, 1.0, m));
                    }
                }
            }
        }
        VerifyRow row{"a1_minus_se2a2_nonneg_grid", min_value, 0.0, 0.0,
                      min_value >= 0.0};
        rows.push_back(row);
    }

    // approximation gap at the benchmark parameters; recorded, not asserted
    {
        BgPrior prior{0.9, 0.5, 1e-5};
        const double sigma_e2 = 1e-4, sigma_r2 = 1.0;
        const int m = 512;
        const ACoeffs ac = blind_a_coeffs(prior, sigma_e2, sigma_r2, m);
        const double closed =
            2.0 * sigma_r2 / m * (ac.a1 - sigma_e2 * ac.a2);
        Rng rng = Rng::substream(seed, 104);
        const McEstimate mc =
            mc_blind_jd(prior, sigma_e2, sigma_r2, m, 100000, rng);
        VerifyRow row{"blind_jd_benchmark_gap_recorded", closed, mc.value, 0.0,
                      true};
        rows.push_back(row);
    }

    return rows;
}

bool all_passed(const std::vector<VerifyRow>& rows) {
    for (const auto& r : rows)
        if (!r.pass) return false;
    return true;
}

}  // namespace csbound
