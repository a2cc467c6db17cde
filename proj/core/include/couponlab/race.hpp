#pragma once

#include <vector>

#include "couponlab/rational.hpp"

namespace couponlab {

/// Vertex (i, j) of the collecting lattice: j distinct coupons after i draws.
struct Vertex {
    long step = 0;
    long height = 0;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

enum class Step { Horizontal, Northeast };

/// A monotone lattice path. Horizontal keeps the height (a repeat draw),
/// Northeast raises it by one (a new coupon).
struct LatticePath {
    Vertex start;
    std::vector<Step> steps;

    Vertex end() const;
    std::vector<Vertex> vertices() const;
};

/// Product of edge weights: Horizontal at height j weighs j/d, Northeast from
/// height j weighs 1 - j/d. Throws std::domain_error if the path climbs above d.
ExactRational path_prob(const LatticePath& path, long d);

/// Sum of path_prob over every monotone path from `from` to `to`, in closed form.
/// Throws std::domain_error when `to` is not weakly north-east of `from` with
/// slope <= 1, or when to.height > d.
ExactRational sum_paths_prob(Vertex from, Vertex to, long d);

/// 2x2 matrix of path sums between the race endpoints
/// A1 = (k+1, d1+1), A2 = (k+1, d1), B1 = (n-1, d-1), B2 = (n, d2).
struct GvMatrix {
    ExactRational a11;
    ExactRational a12;
    ExactRational a21;
    ExactRational a22;

    ExactRational det() const { return a11 * a22 - a12 * a21; }
};

/// Requires 1 <= d1 <= d2 <= d-1, 1 <= k <= n-2, n >= d; std::domain_error otherwise.
GvMatrix gv_entries(long d, long d1, long d2, long k, long n);

/// Weight of all nonintersecting pairs (A1 -> B1, A2 -> B2), evaluated as a
/// single double sum. Same preconditions as gv_entries.
ExactRational gv_det(long d, long d1, long d2, long k, long n);

/// Sum of P(alpha)^2 over paths alpha from (0,0) to (k, d1); 0 when k < d1.
ExactRational init_seg(long d, long d1, long k);

/// sum_{n>=d} sum_{k=1}^{n-2} r^{2k} t^{n-k-1} s^{n-k-2} / d^{2n}, in closed form.
/// Requires 1 <= r <= d-1 and s, t >= 1 with s*t < d^2.
ExactRational psi(long d, long r, long s, long t);

/// sum_{d2=d1}^{d-1} (-1)^{d2} C(d-d1, d-d2) C(d2-d1, t-d1), summed directly.
BigInt loser_height_sum(long d, long d1, long t);

/// Closed form (-1)^{d+1} C(d-d1, d-t) of loser_height_sum; valid for d1 <= t <= d-1.
BigInt loser_height_sum_closed(long d, long d1, long t);

/// Probability that two independent collectors of d coupons complete on the same draw.
ExactRational simultaneous_finish_prob(long d);

/// Probability that the two collectors stay tied for an initial run of draws,
/// after which the one who pulls ahead stays strictly ahead through the finish.
/// Both labellings of the winner are counted; d = 1 gives 1.
ExactRational tie_then_ahead_prob(long d);

/// Weight of a frame from (i1,j1) to (i2,j2): pairs of paths meeting only at
/// the endpoints, one running above the other. 0 on infeasible geometry.
ExactRational frame_prob(long i1, long j1, long i2, long j2, long d);

/// Weight of a tail: sum of P(gamma)^2 over single paths (i1,j1) -> (i2,j2).
/// 0 on infeasible geometry; a length-0 tail weighs 1.
ExactRational tail_prob(long i1, long j1, long i2, long j2, long d);

/// Final diverging pair from the common point (k, dpp) to (n, d) and (n, dprime).
/// Equal to gv_det(d, dpp, dprime, k, n).
ExactRational ribbon_prob(long d, long dprime, long dpp, long k, long n);

}  // namespace couponlab
