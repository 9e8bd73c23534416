#include "csbound/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace csbound {
namespace {

// QUADPACK dqk15 nodes and weights (positive half).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
    double lo, hi;
    double value;
    double error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gk15(const std::function<double(double)>& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    const double fc = f(center);
    double result_gauss = kWg[3] * fc;
    double result_kronrod = kWgk[7] * fc;

    for (int j = 0; j < 7; ++j) {
        const double x = half * kXgk[j];
        const double f1 = f(center - x);
        const double f2 = f(center + x);
        result_kronrod += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) result_gauss += kWg[j / 2] * (f1 + f2);
    }

    Segment s;
    s.lo = lo;
    s.hi = hi;
    s.value = result_kronrod * half;
    s.error = std::abs((result_kronrod - result_gauss) * half);
    return s;
}

}  // namespace

QuadratureResult integrate_segmented(const std::function<double(double)>& f,
                                     const std::vector<double>& breakpoints,
                                     const QuadratureSpec& spec) {
    if (breakpoints.size() < 2)
        throw std::invalid_argument("integrate_segmented: need at least two breakpoints");

    std::priority_queue<Segment> queue;
    double total = 0.0;
    double total_error = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw std::invalid_argument("integrate_segmented: breakpoints must increase");
        Segment s = gk15(f, breakpoints[i], breakpoints[i + 1]);
        total += s.value;
        total_error += s.error;
        queue.push(s);
    }

    int subdivisions = static_cast<int>(breakpoints.size()) - 1;
    while (total_error > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
        if (subdivisions >= spec.max_subdivisions)
            throw QuadratureError("quadrature failed to converge", total, total_error);
        Segment worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi)
            throw QuadratureError("quadrature interval collapsed", total, total_error);
        Segment left = gk15(f, worst.lo, mid);
        Segment right = gk15(f, mid, worst.hi);
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++subdivisions;
    }

    QuadratureResult r;
    r.value = total;
    r.error_estimate = total_error;
    r.subdivisions = subdivisions;
    return r;
}

QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, const QuadratureSpec& spec) {
    return integrate_segmented(f, {lo, hi}, spec);
}

}  // namespace csbound
