#include "csbound/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace csbound {

namespace {

int matrix_rank(const Eigen::MatrixXd& a) {
    return static_cast<int>(Eigen::ColPivHouseholderQR<Eigen::MatrixXd>(a).rank());
}

}  // namespace

Eigen::VectorXd least_squares(const Eigen::MatrixXd& columns,
                              const Eigen::VectorXd& y) {
    if (columns.rows() != y.size())
        throw std::invalid_argument("least_squares: row count must match y");
    if (columns.cols() > columns.rows())
        throw std::invalid_argument("least_squares: need at most as many columns as rows");

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(columns);
    const int rank = static_cast<int>(qr.rank());
    if (rank < columns.cols())
        throw RankDeficientError("least_squares: numerically rank-deficient system", rank);
    return qr.solve(y);
}

RecoveryOutput omp_solve(const Eigen::MatrixXd& d, const Eigen::VectorXd& y,
                         const SolverConfig& cfg) {
    cfg.validate();
    const int n = static_cast<int>(d.rows());
    const int m = static_cast<int>(d.cols());
    if (y.size() != n) throw std::invalid_argument("omp: y length must match rows of d");

    Eigen::VectorXd col_norms(m);
    for (int j = 0; j < m; ++j) {
        col_norms[j] = d.col(j).norm();
        if (col_norms[j] == 0.0)
            throw std::invalid_argument("omp: dictionary has a zero column");
    }

    RecoveryOutput out;
    out.w_hat = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd residual = y;
    const double y_norm = y.norm();
    const double stop = 1e-12 * y_norm;

    std::vector<char> selected(m, 0);
    Eigen::MatrixXd sub(n, std::min(cfg.omp_iters, std::min(n, m)));
    Eigen::VectorXd coeffs;

    const int max_iters = std::min(cfg.omp_iters, std::min(n, m));
    for (int it = 0; it < max_iters; ++it) {
        if (residual.norm() <= stop) break;

        // normalized correlation; ties resolve to the lowest column index
        int best = -1;
        double best_score = -1.0;
        Eigen::VectorXd corr = d.transpose() * residual;
        for (int j = 0; j < m; ++j) {
            if (selected[j]) continue;
            const double score = std::abs(corr[j]) / col_norms[j];
            if (score > best_score) {
                best_score = score;
                best = j;
            }
        }
        if (best < 0) break;

        const int k = static_cast<int>(out.support.size());
        sub.col(k) = d.col(best);
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(sub.leftCols(k + 1));
        if (static_cast<int>(qr.rank()) < k + 1) {
            // the new column is dependent on the chosen ones: drop it and stop
            break;
        }
        selected[best] = 1;
        out.support.push_back(best);
        coeffs = qr.solve(y);
        residual = y - sub.leftCols(k + 1) * coeffs;
        out.iterations = it + 1;
    }

    for (std::size_t k = 0; k < out.support.size(); ++k)
        out.w_hat[out.support[k]] = coeffs.size() ? coeffs[static_cast<int>(k)] : 0.0;
    out.residual_norm = (y - d * out.w_hat).norm();
    return out;
}

RecoveryOutput sl0_solve(const Eigen::MatrixXd& d, const Eigen::VectorXd& y,
                         const SolverConfig& cfg) {
    cfg.validate();
    const int n = static_cast<int>(d.rows());
    if (y.size() != n) throw std::invalid_argument("sl0: y length must match rows of d");

    Eigen::MatrixXd gram = d * d.transpose();
    Eigen::LLT<Eigen::MatrixXd> llt(gram);
    if (llt.info() != Eigen::Success)
        throw RankDeficientError("sl0: measurement matrix is row-rank deficient",
                                 matrix_rank(d));

    auto project = [&](Eigen::VectorXd& w) {
        w -= d.transpose() * llt.solve(d * w - y);
    };

    RecoveryOutput out;
    Eigen::VectorXd w = d.transpose() * llt.solve(y);  // minimum-energy start
    double sigma = 2.0 * w.cwiseAbs().maxCoeff();

    int iters = 0;
    while (sigma > cfg.sl0_sigma_min) {
        for (int l = 0; l < cfg.sl0_inner_iters; ++l) {
            const double two_s2 = 2.0 * sigma * sigma;
            Eigen::VectorXd delta =
                w.array() * (-w.array().square() / two_s2).exp();
            w -= cfg.sl0_step * delta;
            project(w);
            ++iters;
        }
        sigma *= cfg.sl0_decrease;
    }

    out.w_hat = std::move(w);
    out.iterations = iters;
    out.residual_norm = (y - d * out.w_hat).norm();
    return out;
}

RecoveryOutput bp_l1(const Eigen::MatrixXd& d, const Eigen::VectorXd& y,
                     const SolverConfig& cfg) {
    cfg.validate();
    const int n = static_cast<int>(d.rows());
    const int m = static_cast<int>(d.cols());
    if (y.size() != n) throw std::invalid_argument("bp: y length must match rows of d");

    RecoveryOutput out;
    if (y.norm() == 0.0) {
        out.w_hat = Eigen::VectorXd::Zero(m);
        return out;
    }

    // minimum-energy feasible start
    Eigen::MatrixXd gram = d * d.transpose();
    Eigen::LDLT<Eigen::MatrixXd> gram_ldlt(gram);
    Eigen::VectorXd x = d.transpose() * gram_ldlt.solve(y);
    if ((d * x - y).norm() > 1e-8 * (1.0 + y.norm()))
        throw InfeasibleError("bp: y is not in the range of the dictionary");

    const double mu = 10.0;
    const double alpha = 0.01;
    const double beta = 0.5;

    Eigen::VectorXd u = 0.95 * x.cwiseAbs() +
                        Eigen::VectorXd::Constant(m, 0.10 * x.cwiseAbs().maxCoeff());
    Eigen::VectorXd f1 = x - u;          // <= 0
    Eigen::VectorXd f2 = -x - u;         // <= 0
    Eigen::VectorXd lam1 = -f1.cwiseInverse();
    Eigen::VectorXd lam2 = -f2.cwiseInverse();
    Eigen::VectorXd nu = -d * (lam1 - lam2);

    auto residual_norm = [&](const Eigen::VectorXd& x_, const Eigen::VectorXd& u_,
                             const Eigen::VectorXd& f1_, const Eigen::VectorXd& f2_,
                             const Eigen::VectorXd& l1_, const Eigen::VectorXd& l2_,
                             const Eigen::VectorXd& nu_, double tau) {
        Eigen::VectorXd rd_x = l1_ - l2_ + d.transpose() * nu_;
        Eigen::VectorXd rd_u = Eigen::VectorXd::Ones(m) - l1_ - l2_;
        Eigen::VectorXd rc1 = -l1_.cwiseProduct(f1_).array() - 1.0 / tau;
        Eigen::VectorXd rc2 = -l2_.cwiseProduct(f2_).array() - 1.0 / tau;
        Eigen::VectorXd rp = d * x_ - y;
        return std::sqrt(rd_x.squaredNorm() + rd_u.squaredNorm() +
                         rc1.squaredNorm() + rc2.squaredNorm() + rp.squaredNorm());
    };

    // the surrogate gap bounds objective suboptimality, so test it against
    // the contract scale bp_tol * (1 + |x|_1)
    auto gap_target = [&](const Eigen::VectorXd& x_) {
        return cfg.bp_tol * (1.0 + x_.lpNorm<1>());
    };
    double sdg = -(f1.dot(lam1) + f2.dot(lam2));
    int iter = 0;
    for (; iter < cfg.bp_max_iters && sdg >= gap_target(x); ++iter) {
        const double tau = mu * 2.0 * m / sdg;

        Eigen::ArrayXd inv_f1 = f1.array().inverse();
        Eigen::ArrayXd inv_f2 = f2.array().inverse();
        Eigen::VectorXd w1 =
            (-(1.0 / tau) * (-inv_f1 + inv_f2)).matrix() - d.transpose() * nu;
        Eigen::VectorXd w2 = (-1.0 - (1.0 / tau) * (inv_f1 + inv_f2)).matrix();
        Eigen::VectorXd w3 = y - d * x;

        Eigen::ArrayXd lf1 = lam1.array() * inv_f1;  // lam1 / f1 (negative)
        Eigen::ArrayXd lf2 = lam2.array() * inv_f2;
        Eigen::ArrayXd sig1 = -lf1 - lf2;
        Eigen::ArrayXd sig2 = lf1 - lf2;
        Eigen::ArrayXd sigx = sig1 - sig2.square() / sig1;

        Eigen::VectorXd w1p = w1.array() - sig2 / sig1 * w2.array();
        Eigen::MatrixXd h =
            d * (d.transpose().array().colwise() * sigx.inverse()).matrix();
        Eigen::LDLT<Eigen::MatrixXd> h_ldlt(h);
        Eigen::VectorXd dnu =
            h_ldlt.solve(d * (w1p.array() / sigx).matrix() - w3);

        Eigen::VectorXd dx =
            ((w1p - d.transpose() * dnu).array() / sigx).matrix();
        Eigen::VectorXd du = ((w2 - sig2.matrix().cwiseProduct(dx)).array() / sig1).matrix();
        Eigen::VectorXd df1 = dx - du;
        Eigen::VectorXd df2 = -dx - du;
        Eigen::VectorXd dlam1 =
            (-lf1 * df1.array() - lam1.array() - (1.0 / tau) * inv_f1).matrix();
        Eigen::VectorXd dlam2 =
            (-lf2 * df2.array() - lam2.array() - (1.0 / tau) * inv_f2).matrix();

        // largest step keeping lambda > 0 and f < 0
        double s = 1.0;
        for (int i = 0; i < m; ++i) {
            if (dlam1[i] < 0.0) s = std::min(s, -lam1[i] / dlam1[i]);
            if (dlam2[i] < 0.0) s = std::min(s, -lam2[i] / dlam2[i]);
            if (df1[i] > 0.0) s = std::min(s, -f1[i] / df1[i]);
            if (df2[i] > 0.0) s = std::min(s, -f2[i] / df2[i]);
        }
        s *= 0.99;

        const double res0 = residual_norm(x, u, f1, f2, lam1, lam2, nu, tau);
        Eigen::VectorXd xn, un, f1n, f2n, l1n, l2n, nun;
        bool accepted = false;
        for (int bt = 0; bt < 32; ++bt) {
            xn = x + s * dx;
            un = u + s * du;
            f1n = xn - un;
            f2n = -xn - un;
            l1n = lam1 + s * dlam1;
            l2n = lam2 + s * dlam2;
            nun = nu + s * dnu;
            if (residual_norm(xn, un, f1n, f2n, l1n, l2n, nun, tau) <=
                (1.0 - alpha * s) * res0) {
                accepted = true;
                break;
            }
            s *= beta;
        }
        if (!accepted) break;

        x = xn; u = un; f1 = f1n; f2 = f2n; lam1 = l1n; lam2 = l2n; nu = nun;
        sdg = -(f1.dot(lam1) + f2.dot(lam2));
    }

    out.w_hat = x;
    out.iterations = iter;
    out.residual_norm = (y - d * x).norm();
    out.converged = sdg < gap_target(x) &&
                    out.residual_norm <= cfg.bp_tol * (1.0 + y.norm());
    return out;
}

std::map<std::string, Solver> default_solvers() {
    return {
        {"omp", omp_solve},
        {"sl0", sl0_solve},
        {"bp", bp_l1},
    };
}

}  // namespace csbound
