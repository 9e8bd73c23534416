#include "csbound/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "csbound/special.hpp"

namespace csbound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_sum_exp(double a, double b) {
    if (a == -kInf) return b;
    if (b == -kInf) return a;
    const double hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

bool psi_is_orthonormal(const CsModel& model) {
    if (model.identity_basis()) return true;
    Eigen::MatrixXd gram = model.psi.transpose() * model.psi;
    return (gram - Eigen::MatrixXd::Identity(model.m, model.m)).cwiseAbs().maxCoeff() < 1e-9;
}

}  // namespace

double c1(double a) {
    if (!(a > 0.0)) throw std::invalid_argument("c1: a must be positive");
    return M_PI / a * erfcx(a);
}

double c2(double a) {
    if (!(a > 0.0)) throw std::invalid_argument("c2: a must be positive");
    if (a <= 20.0) {
        // (pi / 2a^3) [ (1 - 2a^2) erfcx(a) + 2a/sqrt(pi) ]; every exp(a^2)
        // stays inside erfcx
        return M_PI / (2.0 * a * a * a) *
               ((1.0 - 2.0 * a * a) * erfcx(a) + 2.0 * a / std::sqrt(M_PI));
    }
    // The grouped form loses ~2 log10(a) digits to cancellation, so switch
    // to the asymptotic series sqrt(pi)/a^4 * sum (-1)^k (k+1)(2k-1)!!/(2a^2)^k.
    const double inv2a2 = 1.0 / (2.0 * a * a);
    double dfact = 1.0;  // (2k-1)!!
    double pow = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 12; ++k) {
        dfact *= static_cast<double>(2 * k - 1);
        pow *= -inv2a2;
        const double term = (k + 1) * dfact * pow;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return std::sqrt(M_PI) / (a * a * a * a) * sum;
}

ACoeffs blind_a_coeffs(const BgPrior& prior, double sigma_e2, double sigma_r2,
                       int m) {
    prior.validate();
    if (!(sigma_e2 > 0.0))
        throw std::invalid_argument("blind_a_coeffs: sigma_e2 must be positive");
    if (!(sigma_r2 > 0.0))
        throw std::invalid_argument("blind_a_coeffs: sigma_r2 must be positive");
    if (m < 1) throw std::invalid_argument("blind_a_coeffs: m must be >= 1");

    const double p = prior.p;
    const double sigma = prior.sigma;
    const double sigma_e = std::sqrt(sigma_e2);
    const double sigma_r = std::sqrt(sigma_r2);

    ACoeffs out;
    out.inter.a = sigma_e / (std::sqrt(2.0) * sigma_r * sigma);
    out.inter.c1 = c1(out.inter.a);
    out.inter.c2 = c2(out.inter.a);
    out.inter.b1 = out.inter.c1 / (std::sqrt(2.0) * sigma * sigma_r2);
    out.inter.b2 = out.inter.c2 / (2.0 * std::sqrt(2.0) * sigma * sigma * sigma *
                                   sigma_r2 * sigma_r2);

    if (p == 1.0) {
        out.a1 = 1.0 / sigma_e2;
        out.a2 = 1.0 / (sigma_e2 * sigma_e2);
        return out;
    }

    const double log_slab = std::log(static_cast<double>(m)) + std::log1p(-p) -
                            std::log(sigma * std::sqrt(2.0 * M_PI));
    // p = 0: the all-zero term vanishes; p^(m-1) survives only for m = 1
    const double log_pm = (p == 0.0) ? -kInf : m * std::log(p);
    const double log_pm1 = (p == 0.0) ? (m == 1 ? 0.0 : -kInf)
                                      : (m - 1) * std::log(p);

    const double t1_a1 = log_pm - std::log(sigma_e2);
    const double t2_a1 = log_pm1 + log_slab + std::log(out.inter.b1);
    out.a1 = std::exp(log_sum_exp(t1_a1, t2_a1));

    const double t1_a2 = log_pm - 2.0 * std::log(sigma_e2);
    const double t2_a2 = log_pm1 + log_slab + std::log(out.inter.b2);
    out.a2 = std::exp(log_sum_exp(t1_a2, t2_a2));
    return out;
}

double blind_info_difference(const BgPrior& prior, double sigma_e2,
                             double sigma_r2, int m) {
    prior.validate();
    if (!(sigma_e2 > 0.0))
        throw std::invalid_argument("blind_info_difference: sigma_e2 must be positive");
    if (!(sigma_r2 > 0.0))
        throw std::invalid_argument("blind_info_difference: sigma_r2 must be positive");
    if (m < 1) throw std::invalid_argument("blind_info_difference: m must be >= 1");

    const double p = prior.p;
    const double sigma = prior.sigma;
    if (p == 1.0) return 0.0;
    if (p == 0.0 && m >= 2) return 0.0;

    const double a =
        std::sqrt(sigma_e2) / (std::sqrt(2.0) * std::sqrt(sigma_r2) * sigma);

    // pi (1+2a^2) erfcx(a) / 2a - sqrt(pi) = sqrt(pi) (1/2a^4 - 3/2a^6 + ...)
    double bracket;
    if (a <= 20.0) {
        bracket = M_PI * (1.0 + 2.0 * a * a) * erfcx(a) / (2.0 * a) -
                  std::sqrt(M_PI);
    } else {
        const double inv_a2 = 1.0 / (a * a);
        bracket = std::sqrt(M_PI) * inv_a2 * inv_a2 *
                  (0.5 + inv_a2 * (-1.5 + inv_a2 * (45.0 / 8.0)));
    }

    const double log_s = std::log(static_cast<double>(m)) +
                         (m - 1) * (p == 0.0 ? 0.0 : std::log(p)) +
                         std::log1p(-p) -
                         std::log(sigma * std::sqrt(2.0 * M_PI));
    return std::exp(log_s) * bracket /
           (std::sqrt(2.0) * sigma * sigma_r2);
}

Eigen::MatrixXd nonblind_data_info(int n, double sigma_r2, double sigma_e2,
                                   const Eigen::MatrixXd& psi, int m) {
    if (n < 0) throw std::invalid_argument("nonblind_data_info: n must be >= 0");
    if (!(sigma_r2 > 0.0))
        throw std::invalid_argument("nonblind_data_info: sigma_r2 must be positive");
    if (!(sigma_e2 > 0.0))
        throw std::invalid_argument("nonblind_data_info: sigma_e2 must be positive");
    const double scale = n * sigma_r2 / sigma_e2;
    if (psi.size() == 0)
        return scale * Eigen::MatrixXd::Identity(m, m);
    return scale * (psi.transpose() * psi);
}

Eigen::MatrixXd gaussian_prior_info(const Eigen::VectorXd& sigmas2) {
    const Eigen::Index m = sigmas2.size();
    Eigen::MatrixXd jp = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        if (!(sigmas2[i] > 0.0))
            throw std::invalid_argument("gaussian_prior_info: variances must be positive");
        jp(i, i) = 1.0 / sigmas2[i];
    }
    return jp;
}

double bg_prior_info(const BgPrior& prior) {
    prior.validate();
    return (1.0 - prior.p) / (prior.sigma * prior.sigma);
}

BoundReport nonblind_bcrb(const CsModel& model,
                          const Eigen::VectorXd& prior_info_diag) {
    model.validate();
    if (prior_info_diag.size() != model.m)
        throw std::invalid_argument("nonblind_bcrb: prior information must have length m");

    BoundReport report;
    report.kind = BoundCase::NonBlind;
    report.components.j_data = nonblind_data_info(
        model.n, model.ensemble.sigma_r2, model.sigma_e2, model.psi, model.m);
    report.components.j_prior = prior_info_diag.asDiagonal();

    report.per_coeff_bound.resize(model.m);
    if (psi_is_orthonormal(model)) {
        const double jd = model.n * model.ensemble.sigma_r2 / model.sigma_e2;
        double trace = 0.0;
        for (int i = 0; i < model.m; ++i) {
            const double j = jd + prior_info_diag[i];
            report.per_coeff_bound[i] = j > 0.0 ? 1.0 / j : kInf;
            trace += report.per_coeff_bound[i];
        }
        report.avg_bound = trace / model.m;
    } else {
        Eigen::MatrixXd j = report.components.j_data + report.components.j_prior;
        Eigen::MatrixXd jinv = j.ldlt().solve(Eigen::MatrixXd::Identity(model.m, model.m));
        report.per_coeff_bound = jinv.diagonal();
        report.avg_bound = jinv.trace() / model.m;
    }
    return report;
}

BoundReport nonblind_bcrb_bg(const CsModel& model) {
    const double jp = bg_prior_info(model.prior);
    return nonblind_bcrb(model, Eigen::VectorXd::Constant(model.m, jp));
}

BoundReport blind_bcrb(const CsModel& model) {
    model.validate();
    if (model.ensemble.kind != EnsembleKind::Gaussian)
        throw std::invalid_argument(
            "blind_bcrb: only derived for Gaussian measurement ensembles");
    if (!(model.sigma_e2 > 0.0))
        throw std::invalid_argument("blind_bcrb: sigma_e2 must be positive");

    BoundReport report;
    report.kind = BoundCase::Blind;
    report.intermediates = blind_a_coeffs(model.prior, model.sigma_e2,
                                          model.ensemble.sigma_r2, model.m);

    double info = blind_info_difference(model.prior, model.sigma_e2,
                                        model.ensemble.sigma_r2, model.m);
    double jd = 2.0 * model.ensemble.sigma_r2 / model.m * info;
    if (info < 0.0) {
        // The exact quantity is an integral of a nonnegative function; a
        // negative value means the evaluation left its valid range.
        report.regime = Regime::OutOfRegime;
        jd = 0.0;
    }
    const double jp = bg_prior_info(model.prior);
    const double j = jd + jp;
    if (j <= 0.0) report.regime = Regime::Degenerate;

    report.components.j_data = jd * Eigen::MatrixXd::Identity(model.m, model.m);
    report.components.j_prior = jp * Eigen::MatrixXd::Identity(model.m, model.m);
    const double bound = j > 0.0 ? 1.0 / j : kInf;
    report.per_coeff_bound = Eigen::VectorXd::Constant(model.m, bound);
    report.avg_bound = bound;
    return report;
}

}  // namespace csbound
