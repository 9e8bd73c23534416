#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "csbound/special.hpp"

using csbound::erfcx;

namespace {
// high-precision references (30-digit arithmetic, frozen)
struct Ref {
    double a;
    double value;
};
constexpr Ref kRefs[] = {
    {0.0, 1.0},
    {0.5, 0.61569034419292587487},
    {1.0, 0.42758357615580700441},
    {3.0, 0.17900115118138995042},
    {5.0, 0.11070463773306862637},
    {10.0, 0.056140992743822585858},
    {25.0, 0.022549572432641358944},
    {26.0, 0.021683584850562906616},  // first point past the series switch
    {50.0, 0.0112815362653237725},
    {100.0, 0.0056416137829894329036},
    {10000.0, 0.000056418958072680841152},
};
}  // namespace

TEST_CASE("erfcx against frozen references") {
    for (const auto& r : kRefs) {
        CHECK(erfcx(r.a) == doctest::Approx(r.value).epsilon(1e-13));
    }
}

TEST_CASE("erfcx times exp(-a^2) reproduces erfc") {
    for (double a : {0.1, 0.3, 1.0, 2.0, 3.5, 5.0}) {
        const double lhs = erfcx(a) * std::exp(-a * a);
        CHECK(lhs == doctest::Approx(std::erfc(a)).epsilon(5e-15));
    }
}

TEST_CASE("erfcx never overflows") {
    const double huge = 1e8;
    const double v = erfcx(huge);
    CHECK(std::isfinite(v));
    CHECK(v == doctest::Approx(1.0 / (huge * std::sqrt(M_PI))).epsilon(1e-10));
    CHECK(std::isfinite(erfcx(1e300)));
}

TEST_CASE("erfcx rejects negative arguments") {
    CHECK_THROWS_AS(erfcx(-0.5), std::invalid_argument);
    CHECK_THROWS_AS(erfcx(std::nan("")), std::invalid_argument);
}
