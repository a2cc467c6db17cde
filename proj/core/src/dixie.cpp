#include "couponlab/dixie.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "couponlab/stirling.hpp"

namespace couponlab {

namespace {

void require_dh(long d, long h) {
    if (d < 1 || h < 1) {
        throw std::domain_error("need d >= 1 and h >= 1, got d=" + std::to_string(d) + " h=" + std::to_string(h));
    }
}

// d^n P(T = n) as an integer, driven by a stream of T(., d-1, h) rows.
// Call next(n) for n = 1, 2, 3, ... in order.
class PmfNumerators {
public:
    PmfNumerators(long d, long h) : h_(h), k_(d - 1), d_fact_(factorial(static_cast<unsigned>(d))), stream_(d - 1, h) {}

    void next(long n, BigInt& out) {
        if (n < h_) {
            out = 0;
            return;
        }
        // stream row n - h
        while (stream_.n() < n - h_) {
            stream_.advance();
        }
        const BigInt& t = stream_.at(k_);
        if (sgn(t) == 0) {
            out = 0;
            return;
        }
        out = d_fact_ * t;
        if (h_ > 1) {
            out *= binomial(n - 1, h_ - 1);
        }
    }

private:
    long h_;
    long k_;
    BigInt d_fact_;
    AssocStirlingStream stream_;
};

}  // namespace

ExactRational Distribution::at(long n) const {
    if (n < support_min || n > n_max()) {
        return 0;
    }
    return pmf[static_cast<std::size_t>(n - support_min)];
}

ExactRational completion_pmf(long d, long h, long n) {
    require_dh(d, h);
    if (n < d * h) {
        return 0;
    }
    BigInt num = factorial(static_cast<unsigned>(d)) * binomial(n - 1, h - 1) * assoc_stirling(n - h, d - 1, h);
    return ExactRational(num, ipow(d, static_cast<unsigned long>(n)));
}

Distribution completion_distribution(long d, long h, double mass_tol, long max_n) {
    require_dh(d, h);
    if (!(mass_tol > 0.0 && mass_tol < 1.0)) {
        throw std::domain_error("completion_distribution: need 0 < mass_tol < 1");
    }
    const mpq_class tol = ExactRational::from_double(mass_tol).raw();

    Distribution dist;
    dist.d = d;
    dist.h = h;
    dist.support_min = d * h;

    PmfNumerators numerators(d, h);
    BigInt scale = 1;   // d^n
    BigInt missing = 1; // d^n (1 - sum_{m<=n} pmf(m))
    BigInt num;
    for (long n = 1; n <= max_n; ++n) {
        numerators.next(n, num);
        scale *= d;
        missing = missing * d - num;
        if (n < dist.support_min) {
            continue;
        }
        dist.pmf.emplace_back(num, scale);
        if (mpq_class(missing, scale) < tol) {
            dist.tail_bound = ExactRational(missing, scale);
            return dist;
        }
    }
    throw ConvergenceError("completion_distribution: missing mass still >= " + std::to_string(mass_tol) +
                           " at n = " + std::to_string(max_n));
}

double pgf_numeric(long d, long h, double x, const QuadratureSpec& quad) {
    require_dh(d, h);
    if (!(x > 0.0 && x <= 1.0)) {
        throw std::domain_error("pgf_numeric: need 0 < x <= 1");
    }
    // (e^t - sum_{i<h} t^i/i!) = e^t Q(t) with Q the regularized lower incomplete
    // gamma, so the integrand is t^{h-1} e^{-lambda t} Q^{d-1} with lambda >= 1.
    const double lambda = static_cast<double>(d) / x - static_cast<double>(d - 1);
    const double hd = static_cast<double>(h);
    const double log_front = std::log(static_cast<double>(d)) - std::lgamma(hd);
    auto f = [=](double t) {
        if (t <= 0.0) {
            return h == 1 && d == 1 ? std::exp(log_front) : 0.0;
        }
        const double q = boost::math::gamma_p(hd, t);
        if (q <= 0.0) {
            return 0.0;
        }
        return std::exp(log_front + (hd - 1.0) * std::log(t) - lambda * t + static_cast<double>(d - 1) * std::log(q));
    };
    // Q <= 1 leaves d/(h-1)! int_T^inf t^{h-1} e^{-lambda t} dt.
    auto tail = [=](double big_t) {
        return static_cast<double>(d) / std::pow(lambda, hd) * boost::math::gamma_q(hd, lambda * big_t);
    };
    const double t0 = std::max(1.0, (hd + std::log(static_cast<double>(d))) / lambda);
    return integrate_half_line(f, tail, t0, quad).value;
}

ExactRational pgf_classical(long d, const ExactRational& x) {
    require_dh(d, 1);
    ExactRational sum = 0;
    for (long j = 0; j <= d - 1; ++j) {
        const ExactRational denom = ExactRational(d) - ExactRational(j) * x;
        if (denom.is_zero()) {
            throw std::domain_error("pgf_classical: x is a pole (x = " + std::to_string(d) + "/" + std::to_string(j) + ")");
        }
        ExactRational term = ExactRational(binomial(d - 1, j)) / denom;
        if (sign_pow(d - 1 - j) > 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return x * ExactRational(d) * sum;
}

double assoc_stirling_ogf_numeric(long k, long h, double t, const QuadratureSpec& quad) {
    if (k < 0 || h < 1) {
        throw std::domain_error("assoc_stirling_ogf_numeric: need k >= 0, h >= 1");
    }
    if (!(t > 0.0) || !(t * static_cast<double>(k) < 1.0)) {
        throw std::domain_error("assoc_stirling_ogf_numeric: need 0 < t < 1/k");
    }
    // sum_n T(n,k,h) t^n = int_0^inf e^{-u} E(tu) du with E the EGF; put v = tu.
    const double lambda = 1.0 / t - static_cast<double>(k);
    const double hd = static_cast<double>(h);
    const double log_front = -std::log(t) - std::lgamma(static_cast<double>(k) + 1.0);
    auto f = [=](double v) {
        if (k == 0) {
            return std::exp(log_front - lambda * v);
        }
        if (v <= 0.0) {
            return 0.0;
        }
        const double q = boost::math::gamma_p(hd, v);
        if (q <= 0.0) {
            return 0.0;
        }
        return std::exp(log_front - lambda * v + static_cast<double>(k) * std::log(q));
    };
    auto tail = [=](double big_v) { return std::exp(log_front - lambda * big_v) / lambda; };
    return integrate_half_line(f, tail, std::max(1.0, 1.0 / lambda), quad).value;
}

ExactRational expected_T2_exact(long d) {
    if (d < 1) {
        throw std::domain_error("expected_T2_exact: need d >= 1");
    }
    ExactRational sum = 0;
    for (long m = 0; m <= d - 1; ++m) {
        const BigInt outer = binomial(d - 1, m);
        ExactRational inner = 0;
        for (long j = 0; j <= m; ++j) {
            inner += ExactRational(binomial(m, j) * factorial(static_cast<unsigned>(j + 2)),
                                   ipow(m + 1, static_cast<unsigned long>(j + 3)));
        }
        inner *= ExactRational(outer);
        if (sign_pow(m) > 0) {
            sum += inner;
        } else {
            sum -= inner;
        }
    }
    return ExactRational(d * d) * sum;
}

ExactRational expected_T1_exact(long d) {
    require_dh(d, 1);
    return ExactRational(d) * harmonic_number(d);
}

namespace {

// Certified bound on sum_{m>n} P(T > m) from the union bound
// P(T > m) <= d sum_{i<h} C(m,i) d^{-i} (1-1/d)^{m-i}. Each i-series has a
// term ratio (m+1)/(m+1-i) (1-1/d) that falls with m; requires n + 2 > (h-1) d.
double remainder_bound_estimate(long d, long h, long n) {
    const double dd = static_cast<double>(d);
    if (d == 1) {
        return 0.0;
    }
    double total = 0.0;
    for (long i = 0; i < h; ++i) {
        const double a = static_cast<double>(n + 2 - i) * dd;
        const double b = static_cast<double>(n + 2 - i * d);
        const double log_c = std::lgamma(static_cast<double>(n + 2)) - std::lgamma(static_cast<double>(i + 1)) -
                             std::lgamma(static_cast<double>(n + 2 - i));
        total += std::exp(std::log(dd) + log_c + static_cast<double>(n + 1 - i) * std::log(dd - 1.0) -
                          static_cast<double>(n + 1) * std::log(dd) + std::log(a / b));
    }
    return total;
}

ExactRational remainder_bound_exact(long d, long h, long n) {
    ExactRational total = 0;
    for (long i = 0; i < h; ++i) {
        BigInt num = BigInt(d) * binomial(n + 1, i) * ipow(d - 1, static_cast<unsigned long>(n + 1 - i)) * (n + 2 - i) * d;
        BigInt den = ipow(d, static_cast<unsigned long>(n + 1)) * (n + 2 - i * d);
        total += ExactRational(num, den);
    }
    return total;
}

}  // namespace

CertifiedValue expected_T(long d, long h, double tol, long max_n) {
    require_dh(d, h);
    if (!(tol > 0.0)) {
        throw std::domain_error("expected_T: need tol > 0");
    }
    if (d == 1) {
        return {ExactRational(h), ExactRational(0)};
    }
    const ExactRational exact_tol = ExactRational::from_double(tol);

    // With D = d^n: survive = D P(T > n), acc = D sum_{m<=n} P(T > m).
    PmfNumerators numerators(d, h);
    BigInt scale = 1;
    BigInt survive = 1;
    BigInt acc = 1;
    BigInt num;
    const long first_check = d * h;
    long next_exact = first_check;
    for (long n = 1; n <= max_n; ++n) {
        numerators.next(n, num);
        scale *= d;
        survive = survive * d - num;
        acc = acc * d + survive;
        if (n < next_exact) {
            continue;
        }
        if (remainder_bound_estimate(d, h, n) > 0.5 * tol) {
            continue;
        }
        ExactRational bound = remainder_bound_exact(d, h, n);
        if (bound < exact_tol) {
            return {ExactRational(acc, scale), bound};
        }
        next_exact = n + std::max(1L, n / 32);
    }
    throw ConvergenceError("expected_T: remainder bound still >= " + std::to_string(tol) +
                           " at n = " + std::to_string(max_n));
}

double asymptotic_T(long d, long h) {
    if (h < 1) {
        throw std::domain_error("asymptotic_T: need h >= 1");
    }
    if (d < 2 || (h >= 2 && d < 3)) {
        throw std::domain_error("asymptotic_T: need d >= 2, and d >= 3 when h >= 2 (ln ln d must be positive)");
    }
    const double dd = static_cast<double>(d);
    const double ld = std::log(dd);
    return dd * ld + static_cast<double>(h - 1) * dd * std::log(ld);
}

}  // namespace couponlab
