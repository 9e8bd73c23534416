#pragma once

#include <Eigen/Dense>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace csbound {

struct SolverConfig {
    int omp_iters = 50;
    double sl0_sigma_min = 0.001;
    double sl0_decrease = 0.9;
    int sl0_inner_iters = 3;
    double sl0_step = 2.0;
    double bp_tol = 1e-6;
    int bp_max_iters = 50;

    void validate() const {
        if (omp_iters < 1) throw std::invalid_argument("omp_iters must be >= 1");
        if (!(sl0_decrease > 0.0 && sl0_decrease < 1.0))
            throw std::invalid_argument("sl0_decrease must lie in (0,1)");
        if (!(sl0_sigma_min > 0.0))
            throw std::invalid_argument("sl0_sigma_min must be positive");
        if (sl0_inner_iters < 1)
            throw std::invalid_argument("sl0_inner_iters must be >= 1");
        if (!(bp_tol > 0.0)) throw std::invalid_argument("bp_tol must be positive");
        if (bp_max_iters < 1) throw std::invalid_argument("bp_max_iters must be >= 1");
    }
};

struct RecoveryOutput {
    Eigen::VectorXd w_hat;
    int iterations = 0;
    double residual_norm = 0.0;   // |y - D w_hat|
    std::vector<int> support;     // OMP only
    bool converged = true;
};

class RankDeficientError : public std::runtime_error {
  public:
    RankDeficientError(const std::string& what, int rank)
        : std::runtime_error(what), rank(rank) {}
    int rank;
};

class InfeasibleError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Least squares via a column-pivoted Householder QR. Throws
// RankDeficientError when the columns are numerically dependent.
Eigen::VectorXd least_squares(const Eigen::MatrixXd& columns,
                              const Eigen::VectorXd& y);

// Orthogonal matching pursuit with normalized-correlation selection and a
// full least-squares refit per iteration.
RecoveryOutput omp_solve(const Eigen::MatrixXd& d, const Eigen::VectorXd& y,
                         const SolverConfig& cfg);

// Smoothed-L0 with a geometric sigma schedule and feasibility projection
// after every gradient step (equality-constrained variant).
RecoveryOutput sl0_solve(const Eigen::MatrixXd& d, const Eigen::VectorXd& y,
                         const SolverConfig& cfg);

// Basis pursuit: min |w|_1 s.t. D w = y, by a primal-dual interior point
// method. bp_tol bounds both the surrogate duality gap and the constraint
// residual.
RecoveryOutput bp_l1(const Eigen::MatrixXd& d, const Eigen::VectorXd& y,
                     const SolverConfig& cfg);

// Named solver registry so sweeps can pick up externally provided
// algorithms alongside the built-in three.
using Solver = std::function<RecoveryOutput(
    const Eigen::MatrixXd&, const Eigen::VectorXd&, const SolverConfig&)>;

std::map<std::string, Solver> default_solvers();

}  // namespace csbound
