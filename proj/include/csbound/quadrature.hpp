#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace csbound {

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 4000;
    // integration limits +/- R in standardized (unit-variance) variables
    double truncation_radius = 12.0;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions = 0;
};

class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string& what, double estimate, double error)
        : std::runtime_error(what), estimate(estimate), error(error) {}
    double estimate;
    double error;
};

// Adaptive Gauss-Kronrod 7-15 over [lo, hi].
QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, const QuadratureSpec& spec);

// Same, with caller-provided initial breakpoints (must be increasing and
// span the domain). Needed when the integrand has features far narrower
// than the interval, e.g. a spike of width sigma0 on a unit-scale domain.
QuadratureResult integrate_segmented(const std::function<double(double)>& f,
                                     const std::vector<double>& breakpoints,
                                     const QuadratureSpec& spec);

}  // namespace csbound
