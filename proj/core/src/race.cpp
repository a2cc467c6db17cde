#include "couponlab/race.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "couponlab/stirling.hpp"

namespace couponlab {

namespace {

unsigned ufact_arg(long n) { return static_cast<unsigned>(n); }

BigInt fact(long n) { return factorial(ufact_arg(n)); }

BigInt pow_d(long d, long e) { return ipow(d, static_cast<unsigned long>(e)); }

bool reachable(Vertex from, Vertex to) {
    const long di = to.step - from.step;
    const long dj = to.height - from.height;
    return di >= 0 && dj >= 0 && dj <= di;
}

// Closed form of the path sum; callers have checked reachability and heights.
ExactRational path_sum_closed(Vertex from, Vertex to, long d) {
    const long di = to.step - from.step;
    const long dj = to.height - from.height;
    if (di == 0) {
        return 1;
    }
    BigInt sum = 0;
    for (long m = from.height; m <= to.height; ++m) {
        BigInt term = ipow(m, static_cast<unsigned long>(di)) * binomial(dj, m - from.height);
        if (sign_pow(to.height - m) > 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return ExactRational(sum * fact(d - from.height),
                         fact(d - to.height) * fact(dj) * pow_d(d, di));
}

ExactRational path_sum_or_zero(Vertex from, Vertex to, long d) {
    if (!reachable(from, to)) {
        return 0;
    }
    return path_sum_closed(from, to, d);
}

void check_race_params(long d, long d1, long d2, long k, long n) {
    if (!(1 <= d1 && d1 <= d2 && d2 <= d - 1 && 1 <= k && k <= n - 2 && n >= d)) {
        throw std::domain_error("race parameters need 1 <= d1 <= d2 <= d-1, 1 <= k <= n-2, n >= d; got d=" +
                                std::to_string(d) + " d1=" + std::to_string(d1) + " d2=" + std::to_string(d2) +
                                " k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
}

}  // namespace

Vertex LatticePath::end() const {
    Vertex v = start;
    for (Step s : steps) {
        ++v.step;
        if (s == Step::Northeast) {
            ++v.height;
        }
    }
    return v;
}

std::vector<Vertex> LatticePath::vertices() const {
    std::vector<Vertex> out;
    out.reserve(steps.size() + 1);
    Vertex v = start;
    out.push_back(v);
    for (Step s : steps) {
        ++v.step;
        if (s == Step::Northeast) {
            ++v.height;
        }
        out.push_back(v);
    }
    return out;
}

ExactRational path_prob(const LatticePath& path, long d) {
    if (d < 1) {
        throw std::domain_error("path_prob: d must be >= 1");
    }
    long j = path.start.height;
    if (j < 0 || j > d) {
        throw std::domain_error("path_prob: start height outside [0, d]");
    }
    BigInt num = 1;
    for (Step s : path.steps) {
        if (s == Step::Horizontal) {
            num *= j;
        } else {
            num *= d - j;
            ++j;
            if (j > d) {
                throw std::domain_error("path_prob: path climbs above height d");
            }
        }
    }
    return ExactRational(num, pow_d(d, static_cast<long>(path.steps.size())));
}

ExactRational sum_paths_prob(Vertex from, Vertex to, long d) {
    if (d < 1) {
        throw std::domain_error("sum_paths_prob: d must be >= 1");
    }
    if (from.height < 0 || to.height > d || !reachable(from, to)) {
        throw std::domain_error("sum_paths_prob: no monotone path geometry from (" + std::to_string(from.step) + "," +
                                std::to_string(from.height) + ") to (" + std::to_string(to.step) + "," +
                                std::to_string(to.height) + ") with d=" + std::to_string(d));
    }
    return path_sum_closed(from, to, d);
}

GvMatrix gv_entries(long d, long d1, long d2, long k, long n) {
    check_race_params(d, d1, d2, k, n);
    const Vertex a1{k + 1, d1 + 1};
    const Vertex a2{k + 1, d1};
    const Vertex b1{n - 1, d - 1};
    const Vertex b2{n, d2};
    return GvMatrix{path_sum_or_zero(a1, b1, d), path_sum_or_zero(a1, b2, d), path_sum_or_zero(a2, b1, d),
                    path_sum_or_zero(a2, b2, d)};
}

ExactRational gv_det(long d, long d1, long d2, long k, long n) {
    check_race_params(d, d1, d2, k, n);
    const long span = n - k - 2;
    BigInt sum = 0;
    for (long l = d1; l <= d - 1; ++l) {
        const BigInt cl = binomial(d - d1 - 1, l - d1);
        const BigInt lp = ipow(l, static_cast<unsigned long>(span));
        for (long m = d1; m <= d2; ++m) {
            if (l == m) {
                continue;
            }
            BigInt term = cl * binomial(d2 - d1, m - d1) * lp * ipow(m, static_cast<unsigned long>(span + 1)) * (l - m);
            if (sign_pow(d - 1 - l + d2 - m) > 0) {
                sum += term;
            } else {
                sum -= term;
            }
        }
    }
    return ExactRational(sum * fact(d - d1),
                         pow_d(d, 2 * n - 2 * k - 3) * fact(d - d2) * fact(d2 - d1));
}

ExactRational init_seg(long d, long d1, long k) {
    if (d < 1 || d1 < 0 || d1 > d) {
        throw std::domain_error("init_seg: need 0 <= d1 <= d");
    }
    if (k < d1) {
        return 0;
    }
    if (d1 == 0) {
        return k == 0 ? 1 : 0;
    }
    BigInt sum = 0;
    for (long m = 1; m <= d1; ++m) {
        BigInt term = binomial(2 * d1, d1 + m) * ipow(m, static_cast<unsigned long>(2 * k));
        if (sign_pow(d1 - m) > 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    const BigInt df = fact(d);
    const BigInt rest = fact(d - d1);
    return ExactRational(2 * df * df * sum, rest * rest * pow_d(d, 2 * k) * fact(2 * d1));
}

ExactRational psi(long d, long r, long s, long t) {
    if (d < 2 || r < 1 || r > d - 1 || s < 1 || t < 1 || s * t >= d * d) {
        throw std::domain_error("psi: need 1 <= r <= d-1, s,t >= 1, s*t < d^2");
    }
    const BigInt dd = BigInt(d) * d;
    const BigInt rr = BigInt(r) * r;
    const BigInt st = BigInt(s) * t;
    const BigInt scale = pow_d(d, 2 * d - 2);
    if (rr == st) {
        const BigInt num = ipow(r, static_cast<unsigned long>(2 * d)) * (BigInt(d) * dd - 2 * dd - rr * d + 3 * rr);
        const BigInt gap = dd - rr;
        return ExactRational(num, scale * gap * gap * s * s * t);
    }
    const BigInt num = rr * rr * ipow(s * t, static_cast<unsigned long>(d - 1)) * (rr - dd) +
                       st * ipow(r, static_cast<unsigned long>(2 * d)) * (dd - st);
    return ExactRational(num, scale * (dd - st) * (dd - rr) * (rr - st) * rr * s);
}

BigInt loser_height_sum(long d, long d1, long t) {
    BigInt sum = 0;
    for (long d2 = d1; d2 <= d - 1; ++d2) {
        BigInt term = binomial(d - d1, d - d2) * binomial(d2 - d1, t - d1);
        if (sign_pow(d2) > 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

BigInt loser_height_sum_closed(long d, long d1, long t) {
    BigInt out = binomial(d - d1, d - t);
    return sign_pow(d + 1) > 0 ? out : BigInt(-out);
}

ExactRational simultaneous_finish_prob(long d) {
    if (d < 1) {
        throw std::domain_error("simultaneous_finish_prob: d must be >= 1");
    }
    if (d == 1) {
        return 1;
    }
    std::vector<ExactRational> a;
    for (long r = 1; r <= d - 1; ++r) {
        a.push_back(coeff_A(d - 1, r));
    }
    const long dd = d * d;
    ExactRational sum = 0;
    for (long r = 1; r <= d - 1; ++r) {
        for (long s = 1; s <= d - 1; ++s) {
            sum += a[static_cast<std::size_t>(r - 1)] * a[static_cast<std::size_t>(s - 1)] * ExactRational(dd, dd - r * s);
        }
    }
    const BigInt df = fact(d);
    return ExactRational(df * df, pow_d(d, 2 * d)) * sum;
}

// Tie-then-ahead for one labelling of the winner splits by the length of the
// tied prefix: either the loser lags from some step k <= n-2 (weight
// init_seg * gv_det summed over n, k, d1, d2), or the tie lasts to n-1. The
// n and k sums collapse into psi and the d2 sum into loser_height_sum_closed.
ExactRational tie_then_ahead_prob(long d) {
    if (d < 1) {
        throw std::domain_error("tie_then_ahead_prob: d must be >= 1");
    }
    if (d == 1) {
        return 1;
    }
    const BigInt df = fact(d);
    const BigInt df2 = df * df;

    ExactRational split_later = 0;
    for (long d1 = 1; d1 <= d - 1; ++d1) {
        ExactRational inner = 0;
        for (long t = d1; t <= d - 1; ++t) {
            const BigInt loser = loser_height_sum_closed(d, d1, t) * sign_pow(t);
            for (long s = d1; s <= d - 1; ++s) {
                if (s == t) {
                    continue;
                }
                const BigInt st_coeff = loser * binomial(d - d1 - 1, s - d1) * (s - t) * sign_pow(d - 1 - s);
                if (sgn(st_coeff) == 0) {
                    continue;
                }
                for (long r = 1; r <= d1; ++r) {
                    const BigInt c = st_coeff * binomial(2 * d1, d1 + r) * sign_pow(d1 - r);
                    inner += ExactRational(c) * psi(d, r, s, t);
                }
            }
        }
        const BigInt rest = fact(d - d1);
        split_later += ExactRational(2 * df2 * d1 * (d - d1), rest * rest * fact(2 * d1)) * inner;
    }

    // tie held through step n-1
    ExactRational split_last = 0;
    const long dd = d * d;
    for (long r = 1; r <= d - 1; ++r) {
        const BigInt num = binomial(2 * d - 2, d - 1 + r) * ipow(r, static_cast<unsigned long>(2 * d - 2)) * sign_pow(d - 1 - r);
        split_last += ExactRational(num, BigInt(dd - r * r));
    }
    split_last *= ExactRational(2 * (d - 1) * df2, pow_d(d, 2 * d - 2) * fact(2 * d - 2));

    return ExactRational(2) * (split_later + split_last);
}

ExactRational frame_prob(long i1, long j1, long i2, long j2, long d) {
    const long len = i2 - i1;
    const long rise = j2 - j1;
    if (!(len >= 2 && rise > 0 && rise <= len - 1 && j2 <= d && j1 >= 0)) {
        return 0;
    }
    if (j1 == 0) {
        return 0;  // the lower path would start with a weight-0 horizontal edge
    }
    BigInt sum = 0;
    for (long l = j1; l <= j2; ++l) {
        const BigInt cl = binomial(rise, l - j1);
        for (long m = j1; m <= j2; ++m) {
            if (m == l || m == j2) {
                continue;
            }
            BigInt term = cl * binomial(rise, m - j1) * ipow(l * m, static_cast<unsigned long>(len - 2)) * (j2 - m) * (m - l);
            if (sign_pow(l + m) > 0) {
                sum += term;
            } else {
                sum -= term;
            }
        }
    }
    const BigInt top = fact(d - j1);
    const BigInt bottom = fact(d - j2);
    const BigInt rf = fact(rise);
    return ExactRational(sum * j1 * j2 * top * top, pow_d(d, 2 * len) * bottom * bottom * rf * rf);
}

ExactRational tail_prob(long i1, long j1, long i2, long j2, long d) {
    const long len = i2 - i1;
    const long rise = j2 - j1;
    if (!(len >= 0 && rise >= 0 && rise <= len && j2 <= d && j1 >= 0)) {
        return 0;
    }
    if (len == 0) {
        return 1;
    }
    // sum of squared path weights is h_{len-rise}(j1^2, ..., j2^2) scaled; expand
    // 1/prod(1 - m^2 x) in partial fractions over m = j1..j2
    ExactRational sum = 0;
    for (long m = std::max(j1, 1L); m <= j2; ++m) {
        BigInt num = 2 * m * fact(m + j1 - 1) * ipow(m, static_cast<unsigned long>(2 * len));
        if (sign_pow(j2 - m) < 0) {
            num = -num;
        }
        sum += ExactRational(num, fact(m - j1) * fact(j2 - m) * fact(m + j2));
    }
    const BigInt top = fact(d - j1);
    const BigInt bottom = fact(d - j2);
    return ExactRational(top * top, bottom * bottom * pow_d(d, 2 * len)) * sum;
}

ExactRational ribbon_prob(long d, long dprime, long dpp, long k, long n) { return gv_det(d, dpp, dprime, k, n); }

}  // namespace couponlab
