#pragma once

#include <vector>

#include "couponlab/quadrature.hpp"
#include "couponlab/rational.hpp"

namespace couponlab {

/// P(T = n and exactly j types are held once at T), h = 1.
/// 0 off-support (j outside 1..d or n < d).
ExactRational joint_singleton_pmf(long n, long j, long d);

enum class MarginalMethod { ExactTermwise, Quadrature };

/// F(j) = P(j singletons at completion) for j = 1..d. probs[j-1] holds F(j);
/// exact[j-1] is filled only by the termwise method.
struct SingletonMarginal {
    long d = 1;
    MarginalMethod method = MarginalMethod::ExactTermwise;
    std::vector<double> probs;
    std::vector<ExactRational> exact;
    double tolerance = 0.0;  ///< 0 for exact results

    double prob(long j) const { return j >= 1 && j <= d ? probs[static_cast<std::size_t>(j - 1)] : 0.0; }
};

/// Termwise: binomial expansion of the integrand, each piece integrated in
/// closed form. Quadrature: numerical integration to within tol per entry.
SingletonMarginal singleton_marginal(long d, MarginalMethod method, double tol = 1e-12);

/// The exact termwise value of F(j).
ExactRational singleton_marginal_exact(long d, long j);

/// Expected number of singletons at completion, H_d. Also sums j F(j) termwise
/// and throws std::logic_error if the two disagree.
ExactRational mean_singletons(long d);

/// sum_k (-1)^k C(n,k)/(x+k) == 1/(x C(x+n, n)), both sides exact.
/// Throws std::domain_error for x in {0, -1, ..., -n}.
bool gould_identity_check(long n, const ExactRational& x);

}  // namespace couponlab
