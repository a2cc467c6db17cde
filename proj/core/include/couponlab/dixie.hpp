#pragma once

#include <vector>

#include "couponlab/quadrature.hpp"
#include "couponlab/rational.hpp"

namespace couponlab {

/// Truncated law of the completion time T for d coupon types and h copies each.
/// pmf[i] is P(T = support_min + i); tail_bound = 1 - sum(pmf) exactly.
struct Distribution {
    long d = 1;
    long h = 1;
    long support_min = 1;  ///< d*h
    std::vector<ExactRational> pmf;
    ExactRational tail_bound;

    long n_max() const { return support_min + static_cast<long>(pmf.size()) - 1; }

    /// 0 outside [support_min, n_max()].
    ExactRational at(long n) const;
};

/// P(T = n) = (d!/d^n) C(n-1, h-1) T(n-h, d-1, h); 0 off-support.
ExactRational completion_pmf(long d, long h, long n);

/// Extends the pmf until the missing mass is below mass_tol.
/// Throws ConvergenceError past max_n.
Distribution completion_distribution(long d, long h, double mass_tol, long max_n = 200000);

/// P_h(x) = E[x^T] via its integral representation, 0 < x <= 1.
double pgf_numeric(long d, long h, double x, const QuadratureSpec& quad = {});

/// Closed form of P_1(x): x d sum_j C(d-1,j) (-1)^{d-1-j} / (d - j x).
/// Throws std::domain_error at a pole x = d/j.
ExactRational pgf_classical(long d, const ExactRational& x);

/// sum_n T(n,k,h) t^n through its Laplace-transform integral, 0 < t < 1/k.
double assoc_stirling_ogf_numeric(long k, long h, double t, const QuadratureSpec& quad = {});

/// Finite alternating double sum for E[T] with h = 2, d >= 1.
ExactRational expected_T2_exact(long d);

/// E[T] for h = 1: d H_d.
ExactRational expected_T1_exact(long d);

/// An exact rational with a one-sided certificate: the true quantity lies in
/// [value, value + error_bound].
struct CertifiedValue {
    ExactRational value;
    ExactRational error_bound;

    double to_double() const { return value.to_double(); }
};

/// E[T] = sum_{m>=0} P(T > m), summed exactly until a certified bound on the
/// remaining terms drops below tol. Throws ConvergenceError past max_n.
CertifiedValue expected_T(long d, long h, double tol, long max_n = 2000000);

/// d ln d + (h-1) d ln ln d. Needs d >= 2, and d >= 3 once h >= 2.
double asymptotic_T(long d, long h);

}  // namespace couponlab
