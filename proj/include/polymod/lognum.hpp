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

#include <algorithm>
#include <cstdint>
#include <string>

#include <boost/multiprecision/mpfr.hpp>
#include <mpfr.h>

#include "polymod/error.hpp"

// Signed magnitudes kept as natural logarithms. Values like e_3(n) overflow
// any float format; their logs do not, provided MPFR's exponent range is
// widened (see widen_exponent_range).

namespace polymod {

/// ~133-bit mantissa.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<40>, boost::multiprecision::et_off>;
/// Twice the digits of Real, for cross-checking upward rounding.
using WideReal =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<80>, boost::multiprecision::et_off>;

/// Raises the calling thread's MPFR exponent range to the maximum. MPFR
/// keeps the range per thread, so worker threads must call this too.
inline void widen_exponent_range() {
    mpfr_set_emax(mpfr_get_emax_max());
    mpfr_set_emin(mpfr_get_emin_min());
}

/// Largest binary exponent a tower log may reach: 20 guard bits below emax.
inline std::int64_t tower_exponent_limit() { return static_cast<std::int64_t>(mpfr_get_emax_max() >> 20); }

enum class Sign : int { negative = -1, zero = 0, positive = 1 };
enum class Rounding { nearest, upward };

/// Relative and absolute slack added to every upward-rounded log.
inline constexpr int slack_relative_bits = 40;
inline constexpr int slack_absolute_bits = 60;

/// v rounded up: v + scale * 2^-40 + 2^-60, where scale bounds the
/// magnitude of every term that went into v.
template <class R>
R round_up(const R& v, const R& scale) {
    return v + abs(scale) * ldexp(R(1), -slack_relative_bits) + ldexp(R(1), -slack_absolute_bits);
}

template <class R>
class BasicLogNum {
  public:
    BasicLogNum() = default;

    static BasicLogNum from_log(R log_mag, Sign sign = Sign::positive, Rounding mode = Rounding::nearest) {
        BasicLogNum out;
        out.sign_ = sign;
        out.log_mag_ = sign == Sign::zero ? R(0) : std::move(log_mag);
        out.mode_ = mode;
        return out;
    }

    static BasicLogNum from_value(const R& v, Rounding mode = Rounding::nearest) {
        if (v == 0) return BasicLogNum{};
        R l = log(abs(v));
        if (mode == Rounding::upward) l = round_up(l, l);
        return from_log(std::move(l), v < 0 ? Sign::negative : Sign::positive, mode);
    }

    Sign sign() const { return sign_; }
    const R& log_mag() const { return log_mag_; }
    Rounding mode() const { return mode_; }
    bool is_zero() const { return sign_ == Sign::zero; }
    R log10_mag() const { return log_mag_ / log(R(10)); }

    /// |value| < 1.
    bool below_one() const { return is_zero() || log_mag_ < 0; }

  private:
    Sign sign_ = Sign::zero;
    R log_mag_{0};
    Rounding mode_ = Rounding::nearest;
};

using LogNum = BasicLogNum<Real>;

namespace detail {

inline Rounding combine(Rounding a, Rounding b) {
    return a == Rounding::upward || b == Rounding::upward ? Rounding::upward : Rounding::nearest;
}

inline Sign flip(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

}  // namespace detail

template <class R>
BasicLogNum<R> log_mul(const BasicLogNum<R>& a, const BasicLogNum<R>& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const Rounding mode = detail::combine(a.mode(), b.mode());
    R l = a.log_mag() + b.log_mag();
    if (mode == Rounding::upward) l = round_up(l, abs(a.log_mag()) + abs(b.log_mag()));
    const auto sign = static_cast<Sign>(static_cast<int>(a.sign()) * static_cast<int>(b.sign()));
    return BasicLogNum<R>::from_log(std::move(l), sign, mode);
}

/// Upward mode bounds |a| + |b| (always positive). Nearest mode is the
/// signed sum.
template <class R>
BasicLogNum<R> log_add(const BasicLogNum<R>& a, const BasicLogNum<R>& b) {
    const Rounding mode = detail::combine(a.mode(), b.mode());
    if (a.is_zero() || b.is_zero()) {
        const auto& other = a.is_zero() ? b : a;
        if (mode == Rounding::upward && other.sign() == Sign::negative)
            return BasicLogNum<R>::from_log(other.log_mag(), Sign::positive, mode);
        return BasicLogNum<R>::from_log(other.log_mag(), other.sign(), mode);
    }
    const bool a_hi = a.log_mag() >= b.log_mag();
    const auto& hi = a_hi ? a : b;
    const auto& lo = a_hi ? b : a;
    const R gap = lo.log_mag() - hi.log_mag();
    if (mode == Rounding::upward) {
        R l = hi.log_mag() + log1p(exp(gap));
        l = round_up(l, abs(hi.log_mag()) + 1);
        return BasicLogNum<R>::from_log(std::move(l), Sign::positive, mode);
    }
    if (hi.sign() == lo.sign()) return BasicLogNum<R>::from_log(hi.log_mag() + log1p(exp(gap)), hi.sign(), mode);
    if (gap == 0) return {};
    return BasicLogNum<R>::from_log(hi.log_mag() + log1p(-exp(gap)), hi.sign(), mode);
}

template <class R>
BasicLogNum<R> log_neg(const BasicLogNum<R>& a) {
    return BasicLogNum<R>::from_log(a.log_mag(), detail::flip(a.sign()), a.mode());
}

/// a^k for real k. A negative base needs an integer exponent.
template <class R>
BasicLogNum<R> log_pow(const BasicLogNum<R>& a, const R& k) {
    if (a.is_zero()) {
        if (k <= 0) throw Error(ErrorKind::InvalidArgument, "zero raised to a nonpositive power");
        return {};
    }
    Sign sign = Sign::positive;
    if (a.sign() == Sign::negative) {
        if (trunc(k) != k) throw Error(ErrorKind::InvalidArgument, "negative base with a non-integer exponent");
        if (fmod(abs(k), R(2)) == 1) sign = Sign::negative;
    }
    R l = a.log_mag() * k;
    if (a.mode() == Rounding::upward) l = round_up(l, l);
    return BasicLogNum<R>::from_log(std::move(l), sign, a.mode());
}

/// ln e_k(n): n, e^n, e^(e^n) for k = 1, 2, 3. RangeExceeded when the
/// result's binary exponent passes tower_exponent_limit(); for k = 3 that
/// is n > ~28.7.
template <class R>
R e_tower_log(int k, const R& n) {
    widen_exponent_range();
    if (k < 1 || k > 3) throw Error(ErrorKind::InvalidArgument, "tower height must be 1, 2 or 3", {{"k", k}});
    // exp(v) has binary exponent ~ v / ln 2, which must stay below the limit.
    const R limit = R(tower_exponent_limit()) * log(R(2));
    R v = n;
    for (int level = 1; level < k; ++level) {
        if (v > limit)
            throw Error(ErrorKind::RangeExceeded, "tower value outside the representable log range",
                        {{"k", k}, {"n", n.str(20)}});
        v = exp(v);
    }
    return v;
}

/// Decimal rendering with the given significant digits; exponents of tower
/// values are far outside double range, so output stays textual.
template <class R>
std::string decimal(const R& v, int digits = 20) {
    return v.str(digits, std::ios_base::scientific);
}

}  // namespace polymod
