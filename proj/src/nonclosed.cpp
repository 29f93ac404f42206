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

#include "polymod/nonclosed.hpp"

#include <exception>
#include <limits>

#include <gmpxx.h>

#include "polymod/error.hpp"

namespace polymod::nonclosed {

namespace {

// a < b with room for the rounding of both sides.
bool certainly_less(const Real& a, const Real& b) { return round_up(a, abs(a) + abs(b)) < b; }

Real log_factorial(int m) {
    Real out = 0;
    for (int i = 2; i <= m; ++i) out += log(Real(i));
    return out;
}

void require_n(int n, int lo, const char* what) {
    if (n < lo)
        throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be at least " + std::to_string(lo),
                    {{"n", n}});
}

void add_power_conditions(std::vector<SideCondition>& out, int m) {
    mpz_class fact = 1;
    for (int i = 2; i <= m; ++i) fact *= i;
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(m));
    const Real mm(m);
    out.push_back({"factorial_power", m, mpz_class(fact * m) <= power});
    out.push_back({"power_below_exp_square", m, certainly_less(mm * log(mm), mm * mm)});
    out.push_back({"square_below_exp", m, certainly_less(mm * mm, e_tower_log(2, mm))});
}

}  // namespace

E14Report verify_e14(int n_max) {
    widen_exponent_range();
    require_n(n_max, 2, "n_max");
    E14Report out;
    for (int n = 2; n <= n_max; ++n) out.rows.push_back({n, e14_log_ratio<Real>(n)});

    out.strictly_decreasing = true;
    for (std::size_t i = 1; i < out.rows.size(); ++i)
        if (!(out.rows[i].log_ratio < out.rows[i - 1].log_ratio)) out.strictly_decreasing = false;
    for (const auto& row : out.rows)
        if (row.log_ratio < 0) {
            out.negative_from = row.n;
            break;
        }
    if (out.negative_from) {
        out.negative_onward = true;
        for (const auto& row : out.rows)
            if (row.n >= *out.negative_from && !(row.log_ratio < 0)) out.negative_onward = false;
    }
    return out;
}

std::vector<SideCondition> side_conditions(int n) {
    widen_exponent_range();
    require_n(n, 1, "n");
    const Real nn(n);
    std::vector<SideCondition> out;
    out.push_back({"poly_sum_below_tower", n, certainly_less(log(nn + 1) + nn * nn, e_tower_log(2, nn))});
    out.push_back({"tower_step", n, certainly_less(e_tower_log(2, nn), e_tower_log(3, Real(n - 1)))});
    add_power_conditions(out, n);
    if (n >= 2) add_power_conditions(out, n - 1);
    return out;
}

BoundReport sup_bound(int n) {
    widen_exponent_range();
    require_n(n, 1, "n");
    BoundReport out;
    out.n = n;
    auto terms = bound_terms<Real>(n, Rounding::upward);
    out.conditions = side_conditions(n);

    nlohmann::json failed = nlohmann::json::array();
    for (const auto& c : out.conditions)
        if (!c.holds) failed.push_back({{"name", c.name}, {"m", c.m}});
    if (!failed.empty())
        throw Error(ErrorKind::ThresholdUnmet, "side conditions fail at n = " + std::to_string(n),
                    {{"n", n}, {"failed", failed}});

    out.log_linear_term = std::move(terms.linear);
    out.log_tail_term = std::move(terms.tail);
    out.log_total = std::move(terms.total);
    out.box_radius_log = n;
    out.certified = out.log_total.below_one();
    const Real nn(n);
    out.limit_chain = certainly_less(nn * nn, e_tower_log(3, Real(n - 1))) &&
                      certainly_less(2 * nn + 1, e_tower_log(2, nn));
    out.e14_log_ratio = e14_log_ratio<Real>(n);
    return out;
}

std::vector<BoundReport> sweep(int n_min, int n_max, Exec exec, std::stop_token stop) {
    require_n(n_min, 1, "n_min");
    if (n_max < n_min)
        throw Error(ErrorKind::InvalidArgument, "empty range", {{"n_min", n_min}, {"n_max", n_max}});
    const int count = n_max - n_min + 1;
    std::vector<BoundReport> out(static_cast<std::size_t>(count));

    if (exec == Exec::serial) {
        for (int i = 0; i < count; ++i) {
            throw_if_stopped(stop);
            out[static_cast<std::size_t>(i)] = sup_bound(n_min + i);
        }
        return out;
    }

    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
#pragma omp parallel
    {
        widen_exponent_range();
#pragma omp for schedule(dynamic, 1)
        for (int i = 0; i < count; ++i) {
            if (stop.stop_requested()) continue;
            try {
                out[static_cast<std::size_t>(i)] = sup_bound(n_min + i);
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    }
    throw_if_stopped(stop);
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

int empirical_n0(int n_max) {
    require_n(n_max, 1, "n_max");
    for (int n = n_max; n >= 1; --n)
        for (const auto& c : side_conditions(n))
            if (!c.holds) return n;
    return 0;
}

LogNum coeff_norm_chain(int n, int k) {
    widen_exponent_range();
    require_n(n, 1, "n");
    if (k < 1 || k > n)
        throw Error(ErrorKind::InvalidArgument, "k must lie in 1..n", {{"n", n}, {"k", k}});
    const Real prev = e_tower_log(3, Real(n - 1));
    const Real cur = e_tower_log(3, Real(n));
    const Real weight(2 * k - 1);
    Real l = round_up(Real(weight * prev - cur), weight * prev + cur);
    return LogNum::from_log(std::move(l), Sign::positive, Rounding::upward);
}

Witness witness_not_in_m(const UniPoly& f) {
    Witness out;
    const Degree deg = f.degree();
    if (deg < 1) {
        out.member = true;
        return out;
    }
    // [F]_1 = 0 but L(f) = a_1 f' + (lower degree), a_1 = 1.
    out.member = false;
    out.index = 1;
    out.residual_degree = deg.value() - 1;
    out.residual_leading_coeff = f.leading_coeff() * CoeffQ(deg.value());
    return out;
}

Witness witness_x_not_in_m() { return witness_not_in_m(UniPoly::x()); }

NormChainBounds norm_chain_bounds(const std::vector<Real>& log_abs_a, const Real& radius_log) {
    widen_exponent_range();
    const int n = static_cast<int>(log_abs_a.size());
    require_n(n, 2, "table length");
    const auto up = [](Real v) { return LogNum::from_log(std::move(v), Sign::positive, Rounding::upward); };
    const auto exact = [](Real v) { return LogNum::from_log(std::move(v), Sign::positive, Rounding::nearest); };

    NormChainBounds out;
    out.n = n;
    out.radius_log = radius_log;
    const Real log_nfact = log_factorial(n);
    out.log_eps = up(round_up(Real(-(log_abs_a.back() + log_nfact)), abs(log_abs_a.back()) + log_nfact));

    Real max_prev = log_abs_a.front();
    LogNum sum_prev;
    for (int i = 0; i + 1 < n; ++i) {
        max_prev = std::max(max_prev, log_abs_a[static_cast<std::size_t>(i)]);
        sum_prev = log_add(sum_prev, up(log_abs_a[static_cast<std::size_t>(i)]));
    }
    const LogNum lg = log_mul(log_mul(out.log_eps, exact(max_prev)), exact(log_nfact));
    const LogNum op = log_mul(exact(log_factorial(n - 1)), sum_prev);

    out.log_norm_lk.push_back(lg);
    for (int k = 2; k <= n; ++k) out.log_norm_lk.push_back(log_mul(out.log_norm_lk.back(), op));

    const Real spread = Real(n) * radius_log;
    LogNum sup = log_mul(out.log_eps, exact(spread));
    for (int k = 1; k <= n; ++k) {
        const Real factor = log(Real(n - k + 1)) + spread - log_factorial(k);
        sup = log_add(sup, log_mul(out.log_norm_lk[static_cast<std::size_t>(k - 1)], up(round_up(factor, spread))));
    }
    out.log_sup = sup;
    return out;
}

GammaTable surrogate_table(int n) {
    require_n(n, 2, "n");
    GammaTable g(1);
    g.set(1, 1, CoeffQ(1));
    mpz_class mag = 1;
    for (int i = 2; i <= n; ++i) {
        mag *= 1000;
        g.set(1, i, CoeffQ(Rational(-mag)));
    }
    return g;
}

UniPoly surrogate_seed(int n) {
    require_n(n, 2, "n");
    mpz_class denom = 1;
    for (int i = 2; i <= n; ++i) denom *= 1000;
    denom *= factorial(static_cast<unsigned>(n));
    std::vector<CoeffQ> coeffs(static_cast<std::size_t>(n) + 1, CoeffQ(0));
    coeffs[1] = CoeffQ(1);
    coeffs[static_cast<std::size_t>(n)] = CoeffQ(Rational(mpz_class(1), denom));
    return UniPoly(std::move(coeffs));
}

std::optional<Real> log_abs(const CoeffQ& c) {
    if (c.is_zero()) return std::nullopt;
    const Rational n2 = c.norm2();
    Real num;
    Real den;
    mpfr_set_z(num.backend().data(), n2.get_num_mpz_t(), MPFR_RNDN);
    mpfr_set_z(den.backend().data(), n2.get_den_mpz_t(), MPFR_RNDN);
    return (log(num) - log(den)) / 2;
}

BridgeReport bridge(int n) {
    widen_exponent_range();
    require_n(n, 2, "n");
    BridgeReport out;
    out.n = n;

    const GammaTable table = surrogate_table(n);
    const UniPoly seed = surrogate_seed(n);
    out.g_exact = generate(table, std::span<const UniPoly>(&seed, 1));

    std::vector<Real> log_a;
    for (int i = 1; i <= n; ++i) log_a.push_back(*log_abs(table.at(1, i)));
    out.bounds = norm_chain_bounds(log_a, Real(n));

    const Real neg_inf = -std::numeric_limits<Real>::infinity();
    bool ok = true;
    for (int k = 1; k <= n; ++k) {
        Real best = neg_inf;
        for (const auto& c : out.g_exact.coord(static_cast<std::size_t>(k)).coeffs())
            if (auto l = log_abs(c)) best = std::max(best, *l);
        out.log_norm_lk.push_back(best);
        if (!(best <= out.bounds.log_norm_lk[static_cast<std::size_t>(k - 1)].log_mag())) ok = false;
    }

    const Real lg_exact = out.log_norm_lk.front();
    out.lg_gap = out.bounds.log_norm_lk.front().log_mag() - lg_exact;
    const Real tight = abs(lg_exact) * ldexp(Real(1), -(slack_relative_bits - 4)) + ldexp(Real(1), -50);
    if (out.lg_gap < 0 || out.lg_gap > tight) ok = false;

    // Integer and Gaussian points inside |x|, |y| <= e^n.
    const Real radius = exp(Real(n));
    const CoeffQ r(Rational(mpz_class(static_cast<long>(radius.convert_to<double>()))));
    const CoeffQ ri(Rational(0), r.re());
    const std::vector<std::pair<CoeffQ, CoeffQ>> points = {
        {r, r}, {-r, r}, {r, -r}, {-r, -r}, {ri, ri}, {r, CoeffQ(0)},
        {CoeffQ(Rational(1, 3)), CoeffQ(Rational(-1, 2))},
    };
    for (const auto& [px, py] : points) {
        const CoeffQ dev = eval(out.g_exact, px, py) - px;
        const Real l = log_abs(dev).value_or(neg_inf);
        out.log_deviation.push_back(l);
        if (!(l <= out.bounds.log_sup.log_mag())) ok = false;
    }
    out.within_slack = ok;
    return out;
}

}  // namespace polymod::nonclosed
