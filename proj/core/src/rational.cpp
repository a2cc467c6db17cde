#include "couponlab/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace couponlab {

ExactRational::ExactRational(const BigInt& numerator, const BigInt& denominator) {
    if (sgn(denominator) == 0) {
        throw std::domain_error("ExactRational: zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

ExactRational::ExactRational(long numerator, long denominator)
    : ExactRational(BigInt(numerator), BigInt(denominator)) {}

ExactRational ExactRational::parse(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return ExactRational(BigInt(std::string(text), 10));
        }
        return ExactRational(BigInt(std::string(text.substr(0, slash)), 10),
                             BigInt(std::string(text.substr(slash + 1)), 10));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("ExactRational: cannot parse '" + std::string(text) + "'");
    }
}

ExactRational ExactRational::from_double(double value) {
    if (!std::isfinite(value)) {
        throw std::domain_error("ExactRational::from_double: value is not finite");
    }
    return ExactRational(mpq_class(value));
}

std::string ExactRational::to_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

namespace {

// round(|num| * 10^shift / den) half away from zero; shift may be negative.
BigInt scaled_round(const BigInt& num, const BigInt& den, long shift) {
    BigInt n = abs(num);
    BigInt d = den;
    BigInt ten_pow;
    if (shift >= 0) {
        mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(shift));
        n *= ten_pow;
    } else {
        mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
        d *= ten_pow;
    }
    BigInt q = n / d;
    BigInt r = n - q * d;
    if (2 * r >= d) {
        q += 1;
    }
    return q;
}

std::string place_point(std::string digits, long places) {
    if (places <= 0) {
        return digits + std::string(static_cast<std::size_t>(-places), '0');
    }
    const auto p = static_cast<std::size_t>(places);
    if (digits.size() <= p) {
        digits.insert(0, p - digits.size() + 1, '0');
    }
    digits.insert(digits.size() - p, ".");
    return digits;
}

}  // namespace

std::string ExactRational::to_fixed(int places) const {
    if (places < 0) {
        throw std::invalid_argument("to_fixed: negative places");
    }
    const BigInt q = scaled_round(value_.get_num(), value_.get_den(), places);
    std::string out = place_point(q.get_str(), places);
    if (sign() < 0 && sgn(q) != 0) {
        out.insert(0, "-");
    }
    return out;
}

std::string ExactRational::to_significant(int digits) const {
    if (digits < 1) {
        throw std::invalid_argument("to_significant: digits must be >= 1");
    }
    if (is_zero()) {
        return "0";
    }
    // exponent e with 10^e <= |x| < 10^(e+1)
    const BigInt num = abs(value_.get_num());
    const BigInt& den = value_.get_den();
    long e = static_cast<long>(num.get_str().size()) - static_cast<long>(den.get_str().size());
    auto below = [&](long ex) {  // |x| < 10^ex
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(ex >= 0 ? ex : -ex));
        return ex >= 0 ? num < p * den : num * p < den;
    };
    while (below(e)) --e;
    while (!below(e + 1)) ++e;

    long places = digits - 1 - e;
    BigInt q = scaled_round(value_.get_num(), den, places);
    // rounding may carry into a new digit (9.99 -> 10.0)
    if (q.get_str().size() > static_cast<std::size_t>(digits)) {
        --places;
        q = scaled_round(value_.get_num(), den, places);
    }
    std::string out = place_point(q.get_str(), places);
    if (sign() < 0) {
        out.insert(0, "-");
    }
    return out;
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
    value_ += rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("ExactRational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

ExactRational ExactRational::operator-() const { return ExactRational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const ExactRational& value) { return os << value.to_string(); }

ExactRational abs(const ExactRational& value) { return value.sign() < 0 ? -value : value; }

BigInt factorial(unsigned n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

BigInt ipow(long base, unsigned long exponent) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), BigInt(base).get_mpz_t(), exponent);
    return out;
}

ExactRational harmonic_number(long n) {
    mpq_class sum = 0;
    for (long k = 1; k <= n; ++k) {
        sum += mpq_class(1, static_cast<unsigned long>(k));
    }
    return ExactRational(BigInt(sum.get_num()), BigInt(sum.get_den()));
}

ExactRational rpow(const ExactRational& base, unsigned long exponent) {
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exponent);
    return ExactRational(num, den);
}

}  // namespace couponlab
