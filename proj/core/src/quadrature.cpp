#include "couponlab/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace couponlab {

void validate(const QuadratureSpec& spec) {
    if (!(spec.rel_tol > 0.0) || !(spec.abs_tol > 0.0)) {
        throw std::domain_error("quadrature tolerances must be positive");
    }
    if (spec.max_doublings < 1) {
        throw std::domain_error("quadrature needs max_doublings >= 1");
    }
}

namespace {

// Adaptive 61-point Gauss-Kronrod on [a, b]; accumulates the error estimate.
double integrate_segment(const std::function<double(double)>& f, double a, double b, double tol, double& err) {
    using boost::math::quadrature::gauss_kronrod;
    double e = 0.0;
    const double v = gauss_kronrod<double, 61>::integrate(f, a, b, 15, tol, &e);
    err += e;
    return v;
}

}  // namespace

QuadratureResult integrate_half_line(const std::function<double(double)>& f,
                                     const std::function<double(double)>& tail_bound, double t0,
                                     const QuadratureSpec& spec) {
    validate(spec);
    if (!(t0 > 0.0)) {
        t0 = 1.0;
    }
    QuadratureResult out;
    double upper = t0;
    double value = integrate_segment(f, 0.0, upper, spec.rel_tol, out.error_estimate);
    for (int doubling = 0;; ++doubling) {
        const double tail = tail_bound(upper);
        const double target = std::max(spec.abs_tol, spec.rel_tol * std::abs(value));
        if (tail <= target) {
            if (!(out.error_estimate <= target)) {
                throw ConvergenceError("quadrature error estimate " + std::to_string(out.error_estimate) +
                                       " above target " + std::to_string(target));
            }
            out.value = value;
            out.error_estimate += tail;
            out.upper_limit = upper;
            return out;
        }
        if (doubling >= spec.max_doublings) {
            throw ConvergenceError("quadrature tail bound " + std::to_string(tail) + " still above " +
                                   std::to_string(target) + " at T* = " + std::to_string(upper));
        }
        value += integrate_segment(f, upper, 2.0 * upper, spec.rel_tol, out.error_estimate);
        upper *= 2.0;
    }
}

}  // namespace couponlab
