#pragma once

#include <cmath>
#include <stdexcept>

namespace csbound {

// Scaled complementary error function exp(a^2) * erfc(a) for a >= 0.
//
// Below the switch point the direct product is exact to a few ulp and both
// factors stay inside normal double range (erfc underflows only past ~26.5).
// Above it an asymptotic series carries the value without ever forming
// exp(a^2), so the function cannot overflow for any representable a.
inline double erfcx(double a) {
    if (!(a >= 0.0))
        throw std::invalid_argument("erfcx: argument must be nonnegative");
    if (a <= 25.0)
        return std::exp(a * a) * std::erfc(a);

    // erfcx(a) ~ 1/(a sqrt(pi)) * sum_k (-1)^k (2k-1)!! / (2a^2)^k
    const double inv2a2 = 1.0 / (2.0 * a * a);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 12; ++k) {
        term *= -static_cast<double>(2 * k - 1) * inv2a2;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum / (a * std::sqrt(M_PI));
}

}  // namespace csbound
