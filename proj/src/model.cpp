#include "csbound/model.hpp"

#include <stdexcept>

namespace csbound {

void BgPrior::validate() const {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("BgPrior: p must lie in [0,1]");
    if (!(sigma > 0.0))
        throw std::invalid_argument("BgPrior: sigma must be positive");
    if (!(sigma0 > 0.0))
        throw std::invalid_argument("BgPrior: sigma0 must be positive");
    if (!(sigma0 < sigma))
        throw std::invalid_argument("BgPrior: sigma0 must be smaller than sigma");
}

void EnsembleSpec::validate() const {
    if (!(sigma_r2 > 0.0))
        throw std::invalid_argument("EnsembleSpec: sigma_r2 must be positive");
}

void CsModel::validate() const {
    if (m < 1) throw std::invalid_argument("CsModel: m must be >= 1");
    if (n < 1) throw std::invalid_argument("CsModel: n must be >= 1");
    if (!(sigma_e2 >= 0.0))
        throw std::invalid_argument("CsModel: sigma_e2 must be nonnegative");
    ensemble.validate();
    prior.validate();
    if (psi.size() != 0) {
        if (psi.rows() != m || psi.cols() != m)
            throw std::invalid_argument("CsModel: psi must be m x m");
        for (int j = 0; j < m; ++j) {
            if (std::abs(psi.col(j).norm() - 1.0) > 1e-9)
                throw std::invalid_argument("CsModel: psi columns must have unit norm");
        }
    }
}

Eigen::VectorXd sample_signal(const BgPrior& prior, int m, Rng& rng) {
    prior.validate();
    if (m < 1) throw std::invalid_argument("sample_signal: m must be >= 1");
    Eigen::VectorXd w = Eigen::VectorXd::Zero(m);
    for (int i = 0; i < m; ++i) {
        if (!rng.bernoulli(prior.p)) w[i] = prior.sigma * rng.normal();
    }
    return w;
}

Eigen::MatrixXd sample_matrix(const EnsembleSpec& spec, int n, int m, Rng& rng) {
    spec.validate();
    if (n < 1 || m < 1)
        throw std::invalid_argument("sample_matrix: dimensions must be >= 1");
    const double sigma_r = std::sqrt(spec.sigma_r2);
    Eigen::MatrixXd phi(n, m);
    // column-major fill, matching storage order
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < n; ++i) {
            if (spec.kind == EnsembleKind::Gaussian) {
                phi(i, j) = sigma_r * rng.normal();
            } else {
                phi(i, j) = rng.bernoulli(0.5) ? sigma_r : -sigma_r;
            }
        }
    }
    return phi;
}

Measurement measure(const CsModel& model, const Eigen::MatrixXd& phi,
                    const Eigen::VectorXd& w, Rng& rng) {
    if (phi.cols() != model.m)
        throw std::invalid_argument("measure: phi must have m columns");
    if (w.size() != model.m)
        throw std::invalid_argument("measure: w must have length m");

    Measurement out;
    out.d = model.identity_basis() ? phi : Eigen::MatrixXd(phi * model.psi);
    out.y = out.d * w;
    if (model.sigma_e2 > 0.0) {
        const double sigma_e = std::sqrt(model.sigma_e2);
        for (Eigen::Index i = 0; i < out.y.size(); ++i)
            out.y[i] += sigma_e * rng.normal();
    }
    return out;
}

}  // namespace csbound
