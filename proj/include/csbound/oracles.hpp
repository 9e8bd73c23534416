#pragma once

#include "csbound/model.hpp"
#include "csbound/quadrature.hpp"
#include "csbound/rng.hpp"

namespace csbound {

// Brute-force counterparts of the closed forms in bounds.hpp. These share no
// code with the closed-form path: plain adaptive quadrature of the defining
// integrals.

double quad_c1(double a, const QuadratureSpec& spec);
double quad_c2(double a, const QuadratureSpec& spec);

// erfcx via exp(a^2) erfc(a) = (2/sqrt(pi)) * integral_0^inf exp(-s^2 - 2as) ds,
// which never forms exp(a^2).
double quad_erfcx(double a, const QuadratureSpec& spec);

// Components of the smoothed Bernoulli-Gaussian prior information
// J_P,ii = integral (p'(w))^2 / p(w) dw with
// p(w) = A exp(-w^2/2 sigma0^2) + B exp(-w^2/2 sigma^2),
// A = p/(sigma0 sqrt(2 pi)), B = (1-p)/(sigma sqrt(2 pi)).
//
// d1, d2, d3 are the spike-squared, cross, and slab-squared numerator terms,
// each integrated against the full smoothed density (magnitudes reported).
// d3 is the term that survives as sigma0 -> 0 and tends to (1-p)/sigma^2;
// d1 carries the spike's own information and grows as p/sigma0^2.
struct PriorInfoBreakdown {
    double d1 = 0.0;
    double d2 = 0.0;
    double d3 = 0.0;
    double j_pii = 0.0;  // d1 + d2 + d3
};

PriorInfoBreakdown prior_info_breakdown(const BgPrior& prior,
                                        const QuadratureSpec& spec);

// integral of p''(w) dw; identically zero, evaluated as a quadrature check.
double second_derivative_mass(const BgPrior& prior, const QuadratureSpec& spec);

struct McEstimate {
    double value = 0.0;
    double std_err = 0.0;
    long samples = 0;
};

// Monte Carlo estimate of the blind data information diagonal
// J_D,ii = 2 sigma_r^4 E[ w_i^2 / (sigma_e^2 + sigma_r^2 |w|^2)^2 ],
// symmetrized over coordinates, with w drawn from the exact BG prior.
McEstimate mc_blind_jd(const BgPrior& prior, double sigma_e2, double sigma_r2,
                       int m, long samples, Rng& rng);

// Monte Carlo estimate of an off-diagonal entry (i != j). With antithetic
// pairing the sign of w_i is flipped in the paired draw, which cancels the
// odd integrand exactly.
McEstimate mc_offdiag_check(const BgPrior& prior, double sigma_e2,
                            double sigma_r2, int m, long samples, Rng& rng,
                            bool antithetic = false);

}  // namespace csbound
