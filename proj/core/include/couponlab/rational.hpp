#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace couponlab {

using BigInt = mpz_class;

/// Exact rational number kept in canonical form: reduced, with a positive
/// denominator. Division by zero throws std::domain_error.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    ExactRational(int value) : value_(static_cast<long>(value)) {}  // NOLINT
    explicit ExactRational(const BigInt& integer) : value_(integer) {}
    ExactRational(const BigInt& numerator, const BigInt& denominator);
    ExactRational(long numerator, long denominator);

    /// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
    static ExactRational parse(std::string_view text);

    /// The exact binary value of a finite double.
    static ExactRational from_double(double value);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    double to_double() const { return value_.get_d(); }

    /// Lossless "numerator/denominator"; integers keep the "/1".
    std::string to_string() const;

    /// Decimal rendering correctly rounded (half away from zero) to the given
    /// number of significant digits.
    std::string to_significant(int digits) const;

    /// Decimal rendering correctly rounded to a fixed number of places.
    std::string to_fixed(int places) const;

    ExactRational& operator+=(const ExactRational& rhs);
    ExactRational& operator-=(const ExactRational& rhs);
    ExactRational& operator*=(const ExactRational& rhs);
    ExactRational& operator/=(const ExactRational& rhs);

    friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
    friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
    friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
    friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
    ExactRational operator-() const;

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return value_; }

private:
    explicit ExactRational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactRational& value);

ExactRational abs(const ExactRational& value);

/// Integer helpers; all exact.
BigInt factorial(unsigned n);
BigInt binomial(long n, long k);  ///< 0 when k < 0 or k > n or n < 0.
BigInt ipow(long base, unsigned long exponent);
ExactRational rpow(const ExactRational& base, unsigned long exponent);

/// H_n = 1 + 1/2 + ... + 1/n; H_0 = 0.
ExactRational harmonic_number(long n);

/// (-1)^e for any integer e.
inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace couponlab
