#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace couponlab {

/// Thrown when a numerical or series evaluation cannot meet its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct QuadratureSpec {
    double rel_tol = 1e-12;
    double abs_tol = 1e-14;
    int max_doublings = 40;
};

void validate(const QuadratureSpec& spec);

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;  ///< Gauss-Kronrod estimate plus the truncated tail
    double upper_limit = 0.0;     ///< final T*
};

/// Integral of f over [0, inf). The upper limit T* starts at t0 and doubles
/// until tail_bound(T*) (an upper bound on the integral over [T*, inf)) falls
/// below the tolerance; [0, T*] is integrated by adaptive Gauss-Kronrod.
/// Throws ConvergenceError if max_doublings is exhausted or the segment error
/// estimate misses the target.
QuadratureResult integrate_half_line(const std::function<double(double)>& f,
                                     const std::function<double(double)>& tail_bound, double t0,
                                     const QuadratureSpec& spec);

}  // namespace couponlab
