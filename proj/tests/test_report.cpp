#include <doctest.h>

#include <cstring>
#include <limits>
#include <sstream>

#include "csbound/report.hpp"
#include "csbound/verify.hpp"

using namespace csbound;

TEST_CASE("format_value round-trips doubles and spells infinities") {
    for (double v : {1.0 / 3.0, 2.5e-13, -9.99960001599936e-05, 1e300}) {
        const double back = std::stod(format_value(v));
        CHECK(std::memcmp(&back, &v, sizeof(double)) == 0);
    }
    CHECK(format_value(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_value(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("bound table matches the bound functions and flags degeneracy") {
    CsModel model;
    model.m = 16;
    model.n = 60;
    model.sigma_e2 = 1e-4;
    model.prior = {0.9, 0.5, 1e-5};
    auto rows = bound_table(model, {60, 100});
    REQUIRE(rows.size() == 2);
    CsModel at_n = model;
    at_n.n = 100;
    CHECK(rows[1].nonblind_per_coeff ==
          doctest::Approx(nonblind_bcrb_bg(at_n).avg_bound).epsilon(1e-15));
    CHECK(rows[0].regime == Regime::Ok);

    CsModel degenerate = model;
    degenerate.prior = {1.0, 0.5, 1e-5};
    auto drows = bound_table(degenerate, {60});
    CHECK(drows[0].regime == Regime::Degenerate);
    CHECK(std::isinf(drows[0].blind_per_coeff));

    std::ostringstream os;
    write_bound_csv(os, drows);
    CHECK(os.str().find(",inf,") != std::string::npos);
    CHECK(os.str().find(",degenerate") != std::string::npos);
}

TEST_CASE("csv headers and formats") {
    CsModel model;
    model.m = 8;
    model.n = 4;
    model.prior = {0.9, 0.5, 1e-5};
    auto rows = bound_table(model, {4});
    std::ostringstream os;
    write_bound_csv(os, rows);
    CHECK(os.str().rfind("n,nonblind_bound_db,blind_bound_db,", 0) == 0);

    std::ostringstream vs;
    write_verify_csv(vs, {{"demo", 1.0, 1.0, 0.1, true}});
    CHECK(vs.str() ==
          "check,computed,expected,tolerance,status\ndemo,1,1,"
          "0.10000000000000001,pass\n");
}

TEST_CASE("gnuplot table has one column per curve") {
    SweepResult res;
    res.n_grid = {8};
    res.solver_names = {"omp"};
    res.rows = {{8, "omp", -1.5, 4, 0}, {8, "bcrb_nonblind", -20.0, 0, 0},
                {8, "bcrb_blind", 30.0, 0, 0}};
    std::ostringstream os;
    write_sweep_gnuplot(os, res);
    CHECK(os.str() == "# n omp bcrb_nonblind bcrb_blind\n8 -1.5 -20 30\n");
}
