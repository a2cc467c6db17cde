#pragma once

#include <deque>
#include <map>
#include <shared_mutex>
#include <vector>

#include "couponlab/rational.hpp"

namespace couponlab {

/// Memoized tables of h-associated Stirling numbers of the second kind:
/// the number of partitions of an n-set into k blocks of size >= h.
/// h = 1 gives the ordinary Stirling numbers {n brace k}.
///
/// Rows are dense per h and grow on demand. Lookups may run concurrently;
/// growth takes an exclusive lock. Returned references stay valid for the
/// lifetime of the cache (rows are never reallocated).
class StirlingCache {
public:
    StirlingCache() = default;
    StirlingCache(const StirlingCache&) = delete;
    StirlingCache& operator=(const StirlingCache&) = delete;

    const BigInt& get(long n, long k, long h = 1);

    /// Eagerly fills rows 0..n_max for the given h.
    void reserve(long n_max, long h = 1);

    long rows(long h) const;

private:
    using Table = std::deque<std::vector<BigInt>>;

    void extend_locked(Table& table, long n_max, long h);

    mutable std::shared_mutex mutex_;
    std::map<long, Table> tables_;
};

/// Process-wide cache used by the free functions below.
StirlingCache& default_stirling_cache();

/// {n brace k} via the triangular recurrence (cached).
BigInt stirling2(long n, long k);

/// {n brace k} via (1/k!) sum_r (-1)^{k-r} C(k,r) r^n, no cache.
BigInt stirling2_explicit(long n, long k);

/// Partitions of an n-set into k blocks, each of size >= h.
BigInt assoc_stirling(long n, long k, long h);

/// A_{k,r} = (-1)^{k-r} r^k C(k,r) / k!, so that {n brace k} = sum_r A_{k,r} r^{n-k}.
ExactRational coeff_A(long k, long r);

/// x^k / prod_{m=1}^k (1 - m x): the ordinary generating function of {n brace k}.
ExactRational stirling2_gf(long k, const ExactRational& x);

/// x^k sum_{r,s=1}^k A_{k,r} A_{k,s} / (1 - r s x): the generating function of
/// the squares {n brace k}^2, exact as a rational function.
ExactRational stirling2_sq_gf(long k, const ExactRational& x);

/// Partial fraction coefficient of 1/prod_{m=a}^b (1 - m x) at the pole 1/m:
/// (-1)^{b-m} m^{b-a} C(b-a, m-a) / (b-a)!.
ExactRational partial_fraction_B(long a, long b, long m);

/// Streams rows of T(n, k, h) for k = 0..k_max and n = 0, 1, 2, ... while
/// holding only the last h+1 rows. Used where n runs into the thousands.
class AssocStirlingStream {
public:
    AssocStirlingStream(long k_max, long h);

    /// Current row index n.
    long n() const { return n_; }

    /// T(n(), k, h); zero outside the stored range.
    const BigInt& at(long k) const;

    /// Advances to row n()+1.
    void advance();

private:
    std::vector<BigInt>& row(long n) { return ring_[static_cast<std::size_t>(n % static_cast<long>(ring_.size()))]; }
    const std::vector<BigInt>& row(long n) const {
        return ring_[static_cast<std::size_t>(n % static_cast<long>(ring_.size()))];
    }

    long k_max_;
    long h_;
    long n_ = 0;
    std::vector<std::vector<BigInt>> ring_;
};

}  // namespace couponlab
