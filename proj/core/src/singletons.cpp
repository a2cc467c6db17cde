#include "couponlab/singletons.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "couponlab/stirling.hpp"

namespace couponlab {

ExactRational joint_singleton_pmf(long n, long j, long d) {
    if (d < 1 || j < 1 || j > d || n < d) {
        return 0;
    }
    // the last coupon is always one of the j singletons, hence C(n-1, j-1)
    BigInt num = factorial(static_cast<unsigned>(d)) * binomial(n - 1, j - 1) * assoc_stirling(n - j, d - j, 2);
    return ExactRational(num, ipow(d, static_cast<unsigned long>(n)));
}

ExactRational singleton_marginal_exact(long d, long j) {
    if (d < 1 || j < 1 || j > d) {
        throw std::domain_error("singleton_marginal_exact: need 1 <= j <= d");
    }
    // x^{j-1} (e^x - 1 - x)^m e^{-dx} = sum_a C(m,a) (-1)^a x^{j-1} (1+x)^a e^{-(j+a)x},
    // then int x^c e^{-sx} dx = c!/s^{c+1} term by term
    const long m = d - j;
    ExactRational sum = 0;
    for (long a = 0; a <= m; ++a) {
        ExactRational inner = 0;
        for (long c = 0; c <= a; ++c) {
            inner += ExactRational(binomial(a, c) * factorial(static_cast<unsigned>(j - 1 + c)),
                                   ipow(j + a, static_cast<unsigned long>(j + c)));
        }
        inner *= ExactRational(binomial(m, a));
        if (sign_pow(a) > 0) {
            sum += inner;
        } else {
            sum -= inner;
        }
    }
    return ExactRational(BigInt(binomial(d, j) * j)) * sum;
}

SingletonMarginal singleton_marginal(long d, MarginalMethod method, double tol) {
    if (d < 1) {
        throw std::domain_error("singleton_marginal: need d >= 1");
    }
    SingletonMarginal out;
    out.d = d;
    out.method = method;
    if (method == MarginalMethod::ExactTermwise) {
        for (long j = 1; j <= d; ++j) {
            out.exact.push_back(singleton_marginal_exact(d, j));
            out.probs.push_back(out.exact.back().to_double());
        }
        return out;
    }

    if (!(tol > 0.0)) {
        throw std::domain_error("singleton_marginal: need tol > 0");
    }
    out.tolerance = tol;
    QuadratureSpec spec;
    spec.abs_tol = tol / 4.0;
    spec.rel_tol = std::min(1e-10, tol);
    for (long j = 1; j <= d; ++j) {
        const double jd = static_cast<double>(j);
        const double md = static_cast<double>(d - j);
        // log of j C(d,j)
        const double log_front = std::log(jd) + std::lgamma(static_cast<double>(d) + 1.0) -
                                 std::lgamma(jd + 1.0) - std::lgamma(md + 1.0);
        // (e^x - 1 - x) e^{-x} is the lower incomplete gamma ratio P(2, x)
        auto f = [=](double x) {
            if (x <= 0.0) {
                return j == 1 && d == 1 ? std::exp(log_front) : 0.0;
            }
            double log_v = log_front + (jd - 1.0) * std::log(x) - jd * x;
            if (d > j) {
                const double q = boost::math::gamma_p(2.0, x);
                if (q <= 0.0) {
                    return 0.0;
                }
                log_v += md * std::log(q);
            }
            return std::exp(log_v);
        };
        auto tail = [=](double big_x) {
            return std::exp(log_front + std::lgamma(jd) - jd * std::log(jd)) * boost::math::gamma_q(jd, jd * big_x);
        };
        out.probs.push_back(integrate_half_line(f, tail, std::max(1.0, std::log(static_cast<double>(d)) + 1.0), spec).value);
    }
    return out;
}

ExactRational mean_singletons(long d) {
    if (d < 1) {
        throw std::domain_error("mean_singletons: need d >= 1");
    }
    const ExactRational h = harmonic_number(d);
    ExactRational mean = 0;
    for (long j = 1; j <= d; ++j) {
        mean += ExactRational(j) * singleton_marginal_exact(d, j);
    }
    if (mean != h) {
        throw std::logic_error("mean_singletons: sum j F(j) = " + mean.to_string() + " differs from H_d = " +
                               h.to_string());
    }
    return h;
}

bool gould_identity_check(long n, const ExactRational& x) {
    if (n < 0) {
        throw std::domain_error("gould_identity_check: need n >= 0");
    }
    for (long k = 0; k <= n; ++k) {
        if ((x + ExactRational(k)).is_zero()) {
            throw std::domain_error("gould_identity_check: x = -" + std::to_string(k) + " is a pole");
        }
    }
    ExactRational lhs = 0;
    for (long k = 0; k <= n; ++k) {
        ExactRational term = ExactRational(binomial(n, k)) / (x + ExactRational(k));
        if (sign_pow(k) > 0) {
            lhs += term;
        } else {
            lhs -= term;
        }
    }
    // C(x+n, n) = prod_{i=1}^n (x+i)/i
    ExactRational choose = 1;
    for (long i = 1; i <= n; ++i) {
        choose *= (x + ExactRational(i)) / ExactRational(i);
    }
    return lhs == ExactRational(1) / (x * choose);
}

}  // namespace couponlab
