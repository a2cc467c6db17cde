#include "couponlab/stirling.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

namespace couponlab {

namespace {

const BigInt& zero_int() {
    static const BigInt zero{0};
    return zero;
}

void require_h(long h) {
    if (h < 1) {
        throw std::domain_error("block size bound h must be >= 1, got " + std::to_string(h));
    }
}

}  // namespace

// T(n,k,h) = k T(n-1,k,h) + C(n-1,h-1) T(n-h,k-1,h): element n either joins one
// of the k existing blocks, or founds a block of exactly h elements with h-1
// companions chosen from the other n-1.
void StirlingCache::extend_locked(Table& table, long n_max, long h) {
    while (static_cast<long>(table.size()) <= n_max) {
        const long n = static_cast<long>(table.size());
        std::vector<BigInt> row(static_cast<std::size_t>(n / h + 1));
        if (n == 0) {
            row[0] = 1;
        } else {
            const BigInt founders = binomial(n - 1, h - 1);
            const auto& prev = table[static_cast<std::size_t>(n - 1)];
            const std::vector<BigInt>* back = n >= h ? &table[static_cast<std::size_t>(n - h)] : nullptr;
            for (long k = 1; k < static_cast<long>(row.size()); ++k) {
                BigInt value = 0;
                if (k < static_cast<long>(prev.size())) {
                    value = k * prev[static_cast<std::size_t>(k)];
                }
                if (back != nullptr && k - 1 < static_cast<long>(back->size())) {
                    value += founders * (*back)[static_cast<std::size_t>(k - 1)];
                }
                row[static_cast<std::size_t>(k)] = std::move(value);
            }
        }
        table.push_back(std::move(row));
    }
}

const BigInt& StirlingCache::get(long n, long k, long h) {
    require_h(h);
    if (n < 0 || k < 0 || k * h > n) {
        return zero_int();
    }
    {
        std::shared_lock lock(mutex_);
        auto it = tables_.find(h);
        if (it != tables_.end() && static_cast<long>(it->second.size()) > n) {
            return it->second[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
        }
    }
    std::unique_lock lock(mutex_);
    Table& table = tables_[h];
    extend_locked(table, n, h);
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

void StirlingCache::reserve(long n_max, long h) {
    require_h(h);
    std::unique_lock lock(mutex_);
    extend_locked(tables_[h], n_max, h);
}

long StirlingCache::rows(long h) const {
    std::shared_lock lock(mutex_);
    auto it = tables_.find(h);
    return it == tables_.end() ? 0 : static_cast<long>(it->second.size());
}

StirlingCache& default_stirling_cache() {
    static StirlingCache cache;
    return cache;
}

BigInt stirling2(long n, long k) { return default_stirling_cache().get(n, k, 1); }

BigInt stirling2_explicit(long n, long k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    if (k == 0) {
        return n == 0 ? 1 : 0;
    }
    BigInt sum = 0;
    for (long r = 1; r <= k; ++r) {
        BigInt term = binomial(k, r) * ipow(r, static_cast<unsigned long>(n));
        if (sign_pow(k - r) > 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum / factorial(static_cast<unsigned>(k));
}

BigInt assoc_stirling(long n, long k, long h) { return default_stirling_cache().get(n, k, h); }

ExactRational coeff_A(long k, long r) {
    if (k < 1 || r < 1 || r > k) {
        throw std::domain_error("coeff_A: need 1 <= r <= k");
    }
    BigInt num = binomial(k, r) * ipow(r, static_cast<unsigned long>(k));
    if (sign_pow(k - r) < 0) {
        num = -num;
    }
    return ExactRational(num, factorial(static_cast<unsigned>(k)));
}

ExactRational stirling2_gf(long k, const ExactRational& x) {
    if (k < 1) {
        throw std::domain_error("stirling2_gf: k must be >= 1");
    }
    ExactRational denom = 1;
    for (long m = 1; m <= k; ++m) {
        ExactRational factor = ExactRational(1) - ExactRational(m) * x;
        if (factor.is_zero()) {
            throw std::domain_error("stirling2_gf: x is a pole (x = 1/" + std::to_string(m) + ")");
        }
        denom *= factor;
    }
    return rpow(x, static_cast<unsigned long>(k)) / denom;
}

ExactRational stirling2_sq_gf(long k, const ExactRational& x) {
    if (k < 1) {
        throw std::domain_error("stirling2_sq_gf: k must be >= 1");
    }
    std::vector<ExactRational> a;
    a.reserve(static_cast<std::size_t>(k));
    for (long r = 1; r <= k; ++r) {
        a.push_back(coeff_A(k, r));
    }
    ExactRational sum = 0;
    for (long r = 1; r <= k; ++r) {
        for (long s = 1; s <= k; ++s) {
            ExactRational pole = ExactRational(1) - ExactRational(r * s) * x;
            if (pole.is_zero()) {
                throw std::domain_error("stirling2_sq_gf: x is a pole (x = 1/" + std::to_string(r * s) + ")");
            }
            sum += a[static_cast<std::size_t>(r - 1)] * a[static_cast<std::size_t>(s - 1)] / pole;
        }
    }
    return rpow(x, static_cast<unsigned long>(k)) * sum;
}

ExactRational partial_fraction_B(long a, long b, long m) {
    if (a < 0 || b < a || m < a || m > b) {
        throw std::domain_error("partial_fraction_B: need 0 <= a <= m <= b");
    }
    BigInt num = ipow(m, static_cast<unsigned long>(b - a)) * binomial(b - a, m - a);
    if (sign_pow(b - m) < 0) {
        num = -num;
    }
    return ExactRational(num, factorial(static_cast<unsigned>(b - a)));
}

AssocStirlingStream::AssocStirlingStream(long k_max, long h)
    : k_max_(k_max), h_(h), ring_(static_cast<std::size_t>(h + 1), std::vector<BigInt>(static_cast<std::size_t>(k_max + 1))) {
    require_h(h);
    if (k_max < 0) {
        throw std::domain_error("AssocStirlingStream: k_max must be >= 0");
    }
    row(0)[0] = 1;
}

const BigInt& AssocStirlingStream::at(long k) const {
    if (k < 0 || k > k_max_) {
        return zero_int();
    }
    return row(n_)[static_cast<std::size_t>(k)];
}

void AssocStirlingStream::advance() {
    const long n = n_ + 1;
    const BigInt founders = binomial(n - 1, h_ - 1);
    // row(n) reuses the slot of row(n - h - 1), which is no longer needed
    auto& out = row(n);
    const auto& prev = row(n - 1);
    const long k_top = std::min(k_max_, n / h_);
    out[0] = 0;
    for (long k = 1; k <= k_max_; ++k) {
        BigInt& value = out[static_cast<std::size_t>(k)];
        if (k > k_top) {
            value = 0;
            continue;
        }
        mpz_mul_ui(value.get_mpz_t(), prev[static_cast<std::size_t>(k)].get_mpz_t(), static_cast<unsigned long>(k));
        if (n >= h_) {
            mpz_addmul(value.get_mpz_t(), founders.get_mpz_t(), row(n - h_)[static_cast<std::size_t>(k - 1)].get_mpz_t());
        }
    }
    n_ = n;
}

}  // namespace couponlab
