#pragma once

#include <Eigen/Dense>

#include "csbound/rng.hpp"

namespace csbound {

// Bernoulli-Gaussian prior: a coefficient is zero with probability p,
// otherwise drawn from N(0, sigma^2). sigma0 is the width of the Gaussian
// that stands in for the delta spike in the prior-information analysis;
// sampling always emits exact zeros.
struct BgPrior {
    double p = 0.9;
    double sigma = 0.5;
    double sigma0 = 1e-5;

    void validate() const;
    // expected number of active coefficients in an m-vector
    double expected_active(int m) const { return (1.0 - p) * m; }
};

enum class EnsembleKind { Gaussian, BernoulliPm1 };

struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::Gaussian;
    double sigma_r2 = 1.0;  // variance of each matrix element

    void validate() const;
};

// Noisy compressed sensing problem: y = Phi Psi w + e, D = Phi Psi.
// An empty psi means the identity basis.
struct CsModel {
    int m = 512;
    int n = 100;
    Eigen::MatrixXd psi;  // m x m, unit-norm columns; empty = identity
    EnsembleSpec ensemble;
    double sigma_e2 = 1e-4;
    BgPrior prior;

    void validate() const;
    bool identity_basis() const { return psi.size() == 0; }
};

Eigen::VectorXd sample_signal(const BgPrior& prior, int m, Rng& rng);

Eigen::MatrixXd sample_matrix(const EnsembleSpec& spec, int n, int m, Rng& rng);

struct Measurement {
    Eigen::VectorXd y;  // length n
    Eigen::MatrixXd d;  // n x m effective dictionary Phi * Psi
};

Measurement measure(const CsModel& model, const Eigen::MatrixXd& phi,
                    const Eigen::VectorXd& w, Rng& rng);

}  // namespace csbound
