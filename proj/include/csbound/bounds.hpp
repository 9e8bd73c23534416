#pragma once

#include <Eigen/Dense>
#include <optional>

#include "csbound/model.hpp"

namespace csbound {

// C1(a) = integral of exp(-x^2) / (a^2 + x^2) over the real line.
double c1(double a);

// C2(a) = integral of exp(-x^2) / (a^2 + x^2)^2 over the real line.
double c2(double a);

struct BlindIntermediates {
    double a = 0.0;   // sigma_e / (sqrt(2) sigma_r sigma)
    double c1 = 0.0;
    double c2 = 0.0;
    double b1 = 0.0;
    double b2 = 0.0;
};

struct ACoeffs {
    double a1 = 0.0;
    double a2 = 0.0;
    BlindIntermediates inter;
};

// First-order (small 1-p) closed forms of the m-dimensional integrals
// A1 = E[1/(sigma_e^2 + sigma_r^2 |w|^2)] and A2 = E[1/(...)^2].
// All exp(a^2) factors are carried through erfcx and p^m through the log
// domain, so no intermediate can overflow or underflow.
ACoeffs blind_a_coeffs(const BgPrior& prior, double sigma_e2, double sigma_r2,
                       int m);

// A1 - sigma_e^2 A2 with the common p^m/sigma_e^2 terms cancelled
// algebraically: the difference reduces to
//   S * (pi (1+2a^2) erfcx(a) / 2a - sqrt(pi)) / (sqrt(2) sigma sigma_r^2),
// S = m p^(m-1) (1-p) / (sigma sqrt(2 pi)), which is nonnegative by
// construction. The assembled subtraction loses all precision when the
// p^m terms dominate; this form does not.
double blind_info_difference(const BgPrior& prior, double sigma_e2,
                             double sigma_r2, int m);

// Data information of the known-dictionary case: n (sigma_r^2/sigma_e^2) Psi'Psi.
Eigen::MatrixXd nonblind_data_info(int n, double sigma_r2, double sigma_e2,
                                   const Eigen::MatrixXd& psi, int m);

// diag(1 / sigma_i^2) for a per-coefficient Gaussian prior.
Eigen::MatrixXd gaussian_prior_info(const Eigen::VectorXd& sigmas2);

// Bernoulli-Gaussian prior information constant (1-p)/sigma^2.
double bg_prior_info(const BgPrior& prior);

enum class BoundCase { NonBlind, Blind };

// Regime marker for the blind bound, whose data term rests on a first-order
// expansion in (1-p).
enum class Regime { Ok, OutOfRegime, Degenerate };

struct FisherDecomposition {
    Eigen::MatrixXd j_data;
    Eigen::MatrixXd j_prior;
};

struct BoundReport {
    BoundCase kind = BoundCase::NonBlind;
    Eigen::VectorXd per_coeff_bound;
    double avg_bound = 0.0;  // (1/m) trace(J^-1)
    FisherDecomposition components;
    std::optional<ACoeffs> intermediates;  // blind case only
    Regime regime = Regime::Ok;
};

// Lower bound on E[(w_i - w_hat_i)^2] with a known dictionary, for an
// arbitrary diagonal prior information.
BoundReport nonblind_bcrb(const CsModel& model,
                          const Eigen::VectorXd& prior_info_diag);

// Same with the Bernoulli-Gaussian prior constant on the diagonal.
BoundReport nonblind_bcrb_bg(const CsModel& model);

// Lower bound for the unknown-dictionary (blind) case. Only derived for
// Gaussian measurement ensembles.
BoundReport blind_bcrb(const CsModel& model);

}  // namespace csbound
