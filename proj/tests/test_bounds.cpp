#include <doctest.h>

#include <cmath>
#include <limits>

#include "csbound/bounds.hpp"

using namespace csbound;

TEST_CASE("c1 and c2 against high-precision references") {
    // 30-digit quadrature of the defining integrals, frozen
    CHECK(c1(1.0) == doctest::Approx(1.3432934216467351704).epsilon(1e-12));
    CHECK(c2(1.0) == doctest::Approx(1.1008071400821484421).epsilon(1e-12));
    CHECK(c1(0.01) == doctest::Approx(310.64553881791939967).epsilon(1e-12));
    CHECK(c2(0.01) == doctest::Approx(1570641.5870598342392).epsilon(1e-12));
    CHECK(c1(10.0) == doctest::Approx(0.017637213036923092479).epsilon(1e-12));
    CHECK(c2(10.0) == doctest::Approx(0.00017551153731668325674).epsilon(1e-12));
}

TEST_CASE("a c1(a) approaches pi as a -> 0") {
    // erfcx(a) = 1 - 2a/sqrt(pi) + O(a^2), so the gap at a is ~1.13 a
    CHECK(0.01 * c1(0.01) == doctest::Approx(M_PI).epsilon(0.012));
    CHECK(1e-4 * c1(1e-4) == doctest::Approx(M_PI).epsilon(2e-4));
}

TEST_CASE("c1 and c2 reject nonpositive arguments") {
    CHECK_THROWS_AS(c1(0.0), std::invalid_argument);
    CHECK_THROWS_AS(c2(-1.0), std::invalid_argument);
}

TEST_CASE("c2 branch switch is seamless") {
    // both branches should agree near the crossover
    const double lo = c2(19.999999);
    const double hi = c2(20.000001);
    CHECK(lo == doctest::Approx(hi).epsilon(1e-10));
}

TEST_CASE("nonblind data information") {
    Eigen::MatrixXd empty;
    Eigen::MatrixXd j = nonblind_data_info(100, 1.0, 0.01, empty, 4);
    CHECK((j - 10000.0 * Eigen::MatrixXd::Identity(4, 4)).norm() == 0.0);

    Eigen::MatrixXd z = nonblind_data_info(0, 1.0, 1.0, empty, 3);
    CHECK(z.isZero(0.0));

    // orthonormal non-identity basis: a rotation
    Eigen::MatrixXd rot(2, 2);
    const double c = std::cos(0.3), s = std::sin(0.3);
    rot << c, -s, s, c;
    Eigen::MatrixXd j2 = nonblind_data_info(50, 2.0, 1.0, rot, 2);
    CHECK((j2 - 100.0 * Eigen::MatrixXd::Identity(2, 2)).norm() < 1e-12);

    CHECK_THROWS_AS(nonblind_data_info(10, 1.0, 0.0, empty, 2),
                    std::invalid_argument);
}

TEST_CASE("gaussian prior information") {
    Eigen::VectorXd ones = Eigen::VectorXd::Ones(3);
    CHECK((gaussian_prior_info(ones) - Eigen::MatrixXd::Identity(3, 3)).norm() == 0.0);

    Eigen::VectorXd v(2);
    v << 0.25, 4.0;
    Eigen::MatrixXd jp = gaussian_prior_info(v);
    CHECK(jp(0, 0) == doctest::Approx(4.0));
    CHECK(jp(1, 1) == doctest::Approx(0.25));

    Eigen::VectorXd tiny = Eigen::VectorXd::Constant(2, 1e-8);
    CHECK(gaussian_prior_info(tiny)(0, 0) == doctest::Approx(1e8));

    Eigen::VectorXd bad(1);
    bad << 0.0;
    CHECK_THROWS_AS(gaussian_prior_info(bad), std::invalid_argument);
}

TEST_CASE("bg prior information constant") {
    CHECK(bg_prior_info({0.9, 0.5, 1e-5}) == doctest::Approx(0.4));
    CHECK(bg_prior_info({1.0, 1.0, 1e-5}) == 0.0);
    CHECK(bg_prior_info({0.0, 1.0, 1e-5}) == doctest::Approx(1.0));

    // consistency with the per-coefficient Gaussian prior at full activity
    Eigen::VectorXd v = Eigen::VectorXd::Constant(4, 0.25);
    CHECK(gaussian_prior_info(v)(2, 2) ==
          doctest::Approx(bg_prior_info({0.0, 0.5, 1e-5})));
}

TEST_CASE("blind A coefficients: degenerate and frozen references") {
    BgPrior spike_only{1.0, 0.5, 1e-5};
    ACoeffs ac = blind_a_coeffs(spike_only, 0.04, 1.0, 32);
    CHECK(ac.a1 == doctest::Approx(25.0).epsilon(1e-14));
    CHECK(ac.a2 == doctest::Approx(625.0).epsilon(1e-14));

    // small-(1-p) point, frozen from 30-digit arithmetic
    BgPrior prior{0.999, 0.5, 1e-5};
    ACoeffs r = blind_a_coeffs(prior, 0.01, 1.0, 16);
    CHECK(r.inter.a == doctest::Approx(0.1414213562373095).epsilon(1e-14));
    CHECK(r.inter.c1 == doctest::Approx(19.070622203788693).epsilon(1e-12));
    CHECK(r.inter.c2 == doctest::Approx(546.31762543620443).epsilon(1e-12));
    CHECK(r.inter.b1 == doctest::Approx(26.969932563491452).epsilon(1e-12));
    CHECK(r.inter.b2 == doctest::Approx(1545.2195905106898).epsilon(1e-12));
    CHECK(r.a1 == doctest::Approx(98.751117927616577).epsilon(1e-12));
    CHECK(r.a2 == doctest::Approx(9860.6270925152821).epsilon(1e-12));

    // benchmark parameters: p^m ~ 3.75e-24 must survive assembly
    BgPrior bench{0.9, 0.5, 1e-5};
    ACoeffs b = blind_a_coeffs(bench, 1e-4, 1.0, 512);
    CHECK(b.a1 == doctest::Approx(8.97454631132e-20).epsilon(1e-9));
    CHECK(b.a2 == doctest::Approx(6.39566796859e-16).epsilon(1e-9));
}

TEST_CASE("blind A coefficients stay finite in extreme noise") {
    BgPrior prior{0.9, 0.5, 1e-5};
    ACoeffs ac = blind_a_coeffs(prior, 1e8, 1.0, 4);
    CHECK(std::isfinite(ac.a1));
    CHECK(ac.a1 > 0.0);
    CHECK(std::isfinite(ac.a2));
}

TEST_CASE("stable A1 - sigma_e^2 A2 evaluation") {
    BgPrior prior{0.999, 0.5, 1e-5};
    const double sigma_e2 = 0.01;
    // frozen from 30-digit arithmetic
    const double info = blind_info_difference(prior, sigma_e2, 1.0, 16);
    CHECK(info == doctest::Approx(0.14484700246375615).epsilon(1e-12));

    // agrees with the assembled route while that route still has digits
    ACoeffs ac = blind_a_coeffs(prior, sigma_e2, 1.0, 16);
    CHECK(info == doctest::Approx(ac.a1 - sigma_e2 * ac.a2).epsilon(1e-10));

    BgPrior bench{0.9, 0.5, 1e-5};
    const double info_bench = blind_info_difference(bench, 1e-4, 1.0, 512);
    CHECK(info_bench == doctest::Approx(2.5788783227e-20).epsilon(1e-9));

    // degenerate cases and extreme noise stay nonnegative and finite
    CHECK(blind_info_difference({1.0, 0.5, 1e-5}, 0.01, 1.0, 8) == 0.0);
    const double extreme = blind_info_difference(bench, 1e8, 1.0, 8);
    CHECK(std::isfinite(extreme));
    CHECK(extreme >= 0.0);

    // series branch is continuous at the crossover
    BgPrior wide{0.99, 0.5, 1e-5};
    const double a20 = 2.0 * 20.0 * 20.0 * 0.25;  // sigma_e2 giving a = 20
    CHECK(blind_info_difference(wide, a20 * (1.0 - 1e-7), 1.0, 8) ==
          doctest::Approx(blind_info_difference(wide, a20 * (1.0 + 1e-7), 1.0, 8))
              .epsilon(1e-6));
}

TEST_CASE("blind data information halves when m doubles at fixed A1, A2") {
    BgPrior prior{0.999, 0.5, 1e-5};
    ACoeffs ac = blind_a_coeffs(prior, 0.01, 1.0, 16);
    const double info = ac.a1 - 0.01 * ac.a2;
    const double jd16 = 2.0 * 1.0 / 16 * info;
    const double jd32 = 2.0 * 1.0 / 32 * info;
    CHECK(jd16 == 2.0 * jd32);
}

TEST_CASE("nonblind bound closed form") {
    CsModel model;
    model.m = 8;
    model.n = 100;
    model.sigma_e2 = 0.01;
    model.prior = {0.9, 0.5, 1e-5};
    BoundReport r = nonblind_bcrb_bg(model);
    CHECK(r.per_coeff_bound[0] ==
          doctest::Approx(1.0 / 10000.4).epsilon(1e-12));
    CHECK(r.avg_bound == doctest::Approx(1.0 / 10000.4).epsilon(1e-12));

    // prior-only bound at n = 0 measurements is sigma^2/(1-p)
    Eigen::MatrixXd jd = nonblind_data_info(0, 1.0, 0.01, Eigen::MatrixXd(), 8);
    CHECK(jd.isZero(0.0));
    const double prior_only = 1.0 / bg_prior_info(model.prior);
    CHECK(prior_only == doctest::Approx(2.5));

    CsModel twice = model;
    twice.n = 200;
    BoundReport r2 = nonblind_bcrb_bg(twice);
    CHECK(r2.avg_bound / r.avg_bound == doctest::Approx(0.5).epsilon(1e-4));
}

TEST_CASE("nonblind bound with a non-orthonormal basis inverts the full matrix") {
    CsModel model;
    model.m = 2;
    model.n = 10;
    model.sigma_e2 = 1.0;
    model.prior = {0.5, 1.0, 1e-5};
    model.psi.resize(2, 2);
    model.psi << 1.0, 0.6, 0.0, 0.8;  // unit columns, not orthogonal
    BoundReport r = nonblind_bcrb(model, Eigen::VectorXd::Constant(2, 0.5));

    Eigen::MatrixXd j = 10.0 * (model.psi.transpose() * model.psi) +
                        0.5 * Eigen::MatrixXd::Identity(2, 2);
    Eigen::MatrixXd jinv = j.inverse();
    CHECK(r.per_coeff_bound[0] == doctest::Approx(jinv(0, 0)).epsilon(1e-12));
    CHECK(r.per_coeff_bound[1] == doctest::Approx(jinv(1, 1)).epsilon(1e-12));
    CHECK(r.avg_bound == doctest::Approx(0.5 * jinv.trace()).epsilon(1e-12));
}

TEST_CASE("blind bound degenerates at p = 1 and is reported unbounded") {
    CsModel model;
    model.m = 16;
    model.n = 10;
    model.sigma_e2 = 0.01;
    model.prior = {1.0, 1.0, 1e-5};
    BoundReport r = blind_bcrb(model);
    CHECK(std::isinf(r.avg_bound));
    CHECK(r.regime == Regime::Degenerate);
    CHECK(std::isinf(r.per_coeff_bound[0]));
}

TEST_CASE("blind bound exceeds the nonblind bound at benchmark parameters") {
    CsModel model;
    model.m = 512;
    model.sigma_e2 = 1e-4;
    model.prior = {0.9, 0.5, 1e-5};
    BoundReport blind = blind_bcrb(model);
    for (int n = 60; n <= 200; n += 20) {
        CsModel at_n = model;
        at_n.n = n;
        BoundReport nonblind = nonblind_bcrb_bg(at_n);
        CHECK(blind.avg_bound > nonblind.avg_bound);
    }
}

TEST_CASE("blind bound requires a gaussian ensemble") {
    CsModel model;
    model.m = 8;
    model.n = 4;
    model.ensemble.kind = EnsembleKind::BernoulliPm1;
    CHECK_THROWS_AS(blind_bcrb(model), std::invalid_argument);
}

TEST_CASE("nonblind bound is monotone in n and sigma_e2") {
    CsModel model;
    model.m = 4;
    model.prior = {0.9, 0.5, 1e-5};
    double prev = std::numeric_limits<double>::infinity();
    for (int n : {10, 20, 40, 80}) {
        model.n = n;
        model.sigma_e2 = 0.01;
        const double b = nonblind_bcrb_bg(model).avg_bound;
        CHECK(b < prev);
        prev = b;
    }
    model.n = 50;
    prev = 0.0;
    for (double se2 : {1e-4, 1e-3, 1e-2, 1e-1}) {
        model.sigma_e2 = se2;
        const double b = nonblind_bcrb_bg(model).avg_bound;
        CHECK(b > prev);
        prev = b;
    }
}
