#include "csbound/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace csbound {

namespace {

// log(A exp(-w^2/2s0^2) + B exp(-w^2/2s^2)) without underflow
double log_density(double w, double log_a, double s0, double log_b, double s) {
    const double x = log_a - w * w / (2.0 * s0 * s0);
    const double y = log_b - w * w / (2.0 * s * s);
    const double hi = std::max(x, y);
    return hi + std::log1p(std::exp(std::min(x, y) - hi));
}

std::vector<double> spike_breakpoints(double s0, double s, double radius) {
    // [-k s0, k s0] with k = 40 resolves the spike; coarser panels outside
    std::vector<double> pos = {s0,        5.0 * s0, 10.0 * s0, 40.0 * s0,
                               1000.0 * s0, 0.1 * s, s,         3.0 * s,
                               radius * s};
    std::sort(pos.begin(), pos.end());
    pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
    std::vector<double> full;
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) full.push_back(-*it);
    full.push_back(0.0);
    for (double x : pos) full.push_back(x);
    return full;
}

}  // namespace

double quad_c1(double a, const QuadratureSpec& spec) {
    if (!(a > 0.0)) throw std::invalid_argument("quad_c1: a must be positive");
    const double r = spec.truncation_radius;
    std::vector<double> pts = {-r, -1.0, -5.0 * a, -a, 0.0, a, 5.0 * a, 1.0, r};
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    pts.erase(std::remove_if(pts.begin(), pts.end(),
                             [&](double x) { return x < -r || x > r; }),
              pts.end());
    auto f = [a](double x) { return std::exp(-x * x) / (a * a + x * x); };
    return integrate_segmented(f, pts, spec).value;
}

double quad_c2(double a, const QuadratureSpec& spec) {
    if (!(a > 0.0)) throw std::invalid_argument("quad_c2: a must be positive");
    const double r = spec.truncation_radius;
    std::vector<double> pts = {-r, -1.0, -5.0 * a, -a, 0.0, a, 5.0 * a, 1.0, r};
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    pts.erase(std::remove_if(pts.begin(), pts.end(),
                             [&](double x) { return x < -r || x > r; }),
              pts.end());
    auto f = [a](double x) {
        const double q = a * a + x * x;
        return std::exp(-x * x) / (q * q);
    };
    return integrate_segmented(f, pts, spec).value;
}

double quad_erfcx(double a, const QuadratureSpec& user_spec) {
    if (!(a >= 0.0)) throw std::invalid_argument("quad_erfcx: a must be nonnegative");
    // the closed form is checked to 1e-12 relative, so push the quadrature
    // to its roundoff floor
    QuadratureSpec spec = user_spec;
    spec.abs_tol = 0.0;
    spec.rel_tol = std::min(user_spec.rel_tol, 1e-14);
    // integrand exp(-s^2 - 2as); scale of decay is min(1, 1/2a)
    const double scale = a > 0.5 ? 1.0 / (2.0 * a) : 1.0;
    std::vector<double> pts;
    for (double t : {0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0})
        pts.push_back(t * scale);
    const double hi = std::max(30.0, 30.0 * scale);
    pts.push_back(hi);
    pts.erase(std::remove_if(pts.begin(), pts.end(),
                             [&](double x) { return x > hi; }),
              pts.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto f = [a](double s) { return std::exp(-s * s - 2.0 * a * s); };
    return 2.0 / std::sqrt(M_PI) * integrate_segmented(f, pts, spec).value;
}

PriorInfoBreakdown prior_info_breakdown(const BgPrior& prior,
                                        const QuadratureSpec& spec) {
    prior.validate();
    const double p = prior.p;
    const double s0 = prior.sigma0;
    const double s = prior.sigma;
    const double root2pi = std::sqrt(2.0 * M_PI);

    PriorInfoBreakdown out;
    if (p == 0.0) {
        // pure Gaussian prior: Fisher information 1/sigma^2 exactly, but
        // evaluate d3 by quadrature anyway so the oracle stays independent
        const double log_b = std::log(1.0 / (s * root2pi));
        auto f3 = [&](double w) {
            const double lnum = log_b * 2.0 + std::log(w * w) - 4.0 * std::log(s) -
                                w * w / (s * s);
            const double lden = log_b - w * w / (2.0 * s * s);
            return w == 0.0 ? 0.0 : std::exp(lnum - lden);
        };
        const double r = spec.truncation_radius * s;
        out.d3 = integrate_segmented(f3, {-r, 0.0, r}, spec).value;
        out.j_pii = out.d3;
        return out;
    }

    const double log_a = std::log(p / (s0 * root2pi));
    const double log_b = p == 1.0 ? -std::numeric_limits<double>::infinity()
                                  : std::log((1.0 - p) / (s * root2pi));

    auto make_term = [&](double log_coeff, double gauss_scale) {
        // integrand: coeff * w^2 * exp(-w^2 / gauss_scale) / density
        return [=](double w) {
            if (w == 0.0) return 0.0;
            const double lnum =
                log_coeff + std::log(w * w) - w * w / gauss_scale;
            const double lden = log_density(w, log_a, s0, log_b, s);
            const double le = lnum - lden;
            return le < -745.0 ? 0.0 : std::exp(le);
        };
    };

    const auto pts = spike_breakpoints(s0, s, spec.truncation_radius);

    // (p')^2 expands into spike^2, cross, slab^2 pieces
    const double l1 = 2.0 * log_a - 4.0 * std::log(s0);
    out.d1 = integrate_segmented(make_term(l1, s0 * s0), pts, spec).value;

    if (p < 1.0) {
        const double l2 = std::log(2.0) + log_a + log_b - 2.0 * std::log(s0) -
                          2.0 * std::log(s);
        const double cross_scale = 1.0 / (0.5 / (s0 * s0) + 0.5 / (s * s));
        out.d2 = integrate_segmented(make_term(l2, cross_scale), pts, spec).value;

        const double l3 = 2.0 * log_b - 4.0 * std::log(s);
        out.d3 = integrate_segmented(make_term(l3, s * s), pts, spec).value;
    }

    out.j_pii = out.d1 + out.d2 + out.d3;
    return out;
}

double second_derivative_mass(const BgPrior& prior, const QuadratureSpec& user_spec) {
    prior.validate();
    const double s0 = prior.sigma0;
    const double s = prior.sigma;
    const double root2pi = std::sqrt(2.0 * M_PI);
    const double a = prior.p / (s0 * root2pi);
    const double b = (1.0 - prior.p) / (s * root2pi);

    // the two halves of each term cancel masses of order p/s0^2, so the
    // achievable absolute accuracy is relative to that scale
    const double scale = prior.p / (s0 * s0) + (1.0 - prior.p) / (s * s);
    QuadratureSpec spec = user_spec;
    spec.abs_tol = std::max(user_spec.abs_tol, 1e-12 * scale);

    auto f = [&](double w) {
        const double g0 = std::exp(-w * w / (2.0 * s0 * s0));
        const double g = std::exp(-w * w / (2.0 * s * s));
        const double t0 = a * (w * w / (s0 * s0 * s0 * s0) - 1.0 / (s0 * s0)) * g0;
        const double t1 = b * (w * w / (s * s * s * s) - 1.0 / (s * s)) * g;
        return t0 + t1;
    };
    return integrate_segmented(f, spike_breakpoints(s0, s, spec.truncation_radius),
                               spec).value;
}

McEstimate mc_blind_jd(const BgPrior& prior, double sigma_e2, double sigma_r2,
                       int m, long samples, Rng& rng) {
    prior.validate();
    if (samples < 1) throw std::invalid_argument("mc_blind_jd: samples must be >= 1");
    if (!(sigma_e2 > 0.0) || !(sigma_r2 > 0.0))
        throw std::invalid_argument("mc_blind_jd: variances must be positive");

    double sum = 0.0, sumsq = 0.0;
    Eigen::VectorXd w;
    for (long k = 0; k < samples; ++k) {
        w = sample_signal(prior, m, rng);
        const double nsq = w.squaredNorm();
        const double denom = sigma_e2 + sigma_r2 * nsq;
        // symmetrized over coordinates: mean over i of w_i^2 = |w|^2 / m
        const double v = 2.0 * sigma_r2 * sigma_r2 * nsq / (m * denom * denom);
        sum += v;
        sumsq += v * v;
    }
    McEstimate est;
    est.samples = samples;
    est.value = sum / samples;
    const double var = std::max(0.0, sumsq / samples - est.value * est.value);
    est.std_err = std::sqrt(var / samples);
    return est;
}

McEstimate mc_offdiag_check(const BgPrior& prior, double sigma_e2,
                            double sigma_r2, int m, long samples, Rng& rng,
                            bool antithetic) {
    prior.validate();
    if (m < 2) throw std::invalid_argument("mc_offdiag_check: m must be >= 2");
    if (samples < 1)
        throw std::invalid_argument("mc_offdiag_check: samples must be >= 1");

    auto integrand = [&](const Eigen::VectorXd& w) {
        const double denom = sigma_e2 + sigma_r2 * w.squaredNorm();
        return 2.0 * sigma_r2 * sigma_r2 * w[0] * w[1] / (denom * denom);
    };

    double sum = 0.0, sumsq = 0.0;
    Eigen::VectorXd w;
    for (long k = 0; k < samples; ++k) {
        w = sample_signal(prior, m, rng);
        double v = integrand(w);
        if (antithetic) {
            // pair with the single-coordinate flip; |w| is unchanged and the
            // integrand is odd in w_0, so the pair cancels exactly
            w[0] = -w[0];
            v = 0.5 * (v + integrand(w));
        }
        sum += v;
        sumsq += v * v;
    }
    McEstimate est;
    est.samples = samples;
    est.value = sum / samples;
    const double var = std::max(0.0, sumsq / samples - est.value * est.value);
    est.std_err = std::sqrt(var / samples);
    return est;
}

}  // namespace csbound
