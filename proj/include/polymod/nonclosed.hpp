/*
   Copyright 2026 The polymod Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "polymod/bipoly.hpp"
#include "polymod/gamma.hpp"
#include "polymod/linalg.hpp"
#include "polymod/lognum.hpp"

// The module M generated by L = a_1 D + a_2 D^2 + ..., a_1 = 1 and
// a_n = -e_3(n), with x in the closure of M but not in M. Everything below
// works on log scale: a_n itself is never formed.

namespace polymod::nonclosed {

// ---- the limit e_3(n-1)^e(n) / e_3(n) -> 0 -------------------------------

/// ln(e_3(n-1)^e(n) / e_3(n)) = e(n) e_2(n-1) - e_2(n).
template <class R>
R e14_log_ratio(int n) {
    return e_tower_log(2, R(n)) * e_tower_log(3, R(n - 1)) - e_tower_log(3, R(n));
}

struct E14Row {
    int n = 0;
    Real log_ratio;
};

struct E14Report {
    std::vector<E14Row> rows;  // n = 2 .. n_max
    bool strictly_decreasing = false;
    std::optional<int> negative_from;
    bool negative_onward = false;  // negative at every n >= negative_from
};

/// RangeExceeded past the tower cap, InvalidArgument for n_max < 2.
E14Report verify_e14(int n_max);

// ---- the supremum bound on |x|, |y| <= e^n ------------------------------

/// The two pieces of sup |G_n(x,y) - x|:
///   linear = n^2 - e_2(n)                            (|g_n - x| term)
///   tail   = ln n + n^2 + 2n e_2(n-1) - e_2(n)       (sum over k of L^k g_n)
template <class R>
struct BoundTerms {
    BasicLogNum<R> linear;
    BasicLogNum<R> tail;
    BasicLogNum<R> total;
};

template <class R>
BoundTerms<R> bound_terms(int n, Rounding mode) {
    const R nn(n);
    const R e2 = e_tower_log(3, nn);
    const R e2_prev = e_tower_log(3, R(n - 1));
    const R square = nn * nn;
    const R ln_n = log(nn);

    R linear = square - e2;
    R tail = ln_n + square + 2 * nn * e2_prev - e2;
    if (mode == Rounding::upward) {
        linear = round_up(linear, square + e2);
        tail = round_up(tail, ln_n + square + 2 * nn * e2_prev + e2);
    }
    BoundTerms<R> out;
    out.linear = BasicLogNum<R>::from_log(std::move(linear), Sign::positive, mode);
    out.tail = BasicLogNum<R>::from_log(std::move(tail), Sign::positive, mode);
    out.total = log_add(out.linear, out.tail);
    return out;
}

/// One inequality the bound relies on, checked at a specific m (n or n-1).
struct SideCondition {
    std::string name;
    int m = 0;
    bool holds = false;
};

/// Every inequality used at n:
///   poly_sum_below_tower   (n+1) e(n^2) < e_2(n)
///   tower_step             e_2(n) < e_3(n-1)
///   factorial_power        m! * m <= m^m          (exact integers)
///   power_below_exp_square m^m < e(m^2)
///   square_below_exp       e(m^2) < e_2(m)
/// with the last three at m = n and m = n - 1.
std::vector<SideCondition> side_conditions(int n);

struct BoundReport {
    int n = 0;
    LogNum log_linear_term;
    LogNum log_tail_term;
    LogNum log_total;
    Real box_radius_log;  // |x|, |y| <= e^n
    bool certified = false;  // log_total < 0
    std::vector<SideCondition> conditions;
    /// n^2 < e_2(n-1) and 2n + 1 < e(n): the tail then sits below the
    /// e_3(n-1)^e(n) / e_3(n) ratio, which tends to zero.
    bool limit_chain = false;
    Real e14_log_ratio;
};

/// Certified (upward-rounded) bound. ThresholdUnmet if a side condition
/// fails at n, RangeExceeded past the cap, InvalidArgument for n < 1.
BoundReport sup_bound(int n);

/// sup_bound for n_min..n_max, ordered by n. The parallel path computes
/// each n on its own thread; results are identical to the serial path.
std::vector<BoundReport> sweep(int n_min, int n_max, Exec exec = Exec::parallel, std::stop_token stop = {});

/// Smallest n0 >= 0 with every side condition holding for n0 < n <= n_max.
int empirical_n0(int n_max);

/// Upper bound on ln ||L^k(g_n)||: (2k - 1) e_2(n-1) - e_2(n), 1 <= k <= n.
LogNum coeff_norm_chain(int n, int k);

// ---- x is not in M ------------------------------------------------------

struct Witness {
    bool member = false;
    int index = 0;  // coordinate where the recursion fails
    /// Leading term of [F]_1 - L([F]_0): only a_1 reaches the top degree, so
    /// this is exact without any tower value. For deg f = 1 it is the
    /// whole residual.
    std::optional<CoeffQ> residual_leading_coeff;
    std::optional<int> residual_degree;
};

/// Decides f in M for f in C[x] (F = f(x), no y): constants are members,
/// everything of degree >= 1 fails at n = 1.
Witness witness_not_in_m(const UniPoly& f);
Witness witness_x_not_in_m();

// ---- exact cross-check on a small table ---------------------------------

/// Norm-chain bounds for L = sum_i a_i D^i given ln|a_1..a_n|, applied to
/// g = x + eps x^n with eps = 1 / (|a_n| n!), on |x|, |y| <= e^radius_log:
///   ||L g||     <= eps * max_{i<n} |a_i| * n!
///   ||L^k g||   <= op^(k-1) ||L g||,   op = (n-1)! * sum_{i<n} |a_i|
///   sup|G - x|  <= eps e^(n r) + sum_k ||L^k g|| (n-k+1) e^(n r) / k!
/// where r = radius_log.
struct NormChainBounds {
    int n = 0;
    Real radius_log;
    LogNum log_eps;
    std::vector<LogNum> log_norm_lk;  // k = 1 .. n
    LogNum log_sup;
};

NormChainBounds norm_chain_bounds(const std::vector<Real>& log_abs_a, const Real& radius_log);

/// a_1 = 1, a_i = -10^(3(i-1)) for 2 <= i <= n.
GammaTable surrogate_table(int n);
/// x + eps x^n with eps = 1 / (|a_n| n!).
UniPoly surrogate_seed(int n);

struct BridgeReport {
    int n = 0;
    NormChainBounds bounds;
    BiPoly g_exact;                 // generate(surrogate_table(n), [surrogate_seed(n)])
    std::vector<Real> log_norm_lk;  // exact ||[G]_k||, k = 1 .. n
    std::vector<Real> log_deviation;  // ln |G(p) - x| at the probe points
    Real lg_gap;                    // bound - exact for ||L g||, tight up to rounding
    bool within_slack = false;
};

/// Compares the exact pipeline to the log pipeline for the surrogate table.
BridgeReport bridge(int n);

/// ln |c| for an exact Gaussian rational; nullopt for zero.
std::optional<Real> log_abs(const CoeffQ& c);

}  // namespace polymod::nonclosed
