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

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace polymod {

using Rational = mpq_class;

/// Parses the rational grammar `[+-]?[0-9]+(/[0-9]+)?` with a positive
/// denominator. Throws Error(Parse) on anything else.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

Rational factorial(unsigned n);

/// Exact Gaussian rational re + i*im. Both parts are kept in lowest terms
/// with positive denominators, so equality is structural.
class CoeffQ {
  public:
    CoeffQ() = default;
    CoeffQ(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    CoeffQ(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    CoeffQ(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static CoeffQ imag_unit() { return CoeffQ(Rational(0), Rational(1)); }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }

    CoeffQ conj() const { return CoeffQ(re_, -im_); }
    /// |z|^2, exact.
    Rational norm2() const { return re_ * re_ + im_ * im_; }
    CoeffQ inverse() const;

    CoeffQ& operator+=(const CoeffQ& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    CoeffQ& operator-=(const CoeffQ& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    CoeffQ& operator*=(const CoeffQ& o);
    CoeffQ& operator/=(const CoeffQ& o) { return *this *= o.inverse(); }

    friend CoeffQ operator+(CoeffQ a, const CoeffQ& b) { return a += b; }
    friend CoeffQ operator-(CoeffQ a, const CoeffQ& b) { return a -= b; }
    friend CoeffQ operator*(CoeffQ a, const CoeffQ& b) { return a *= b; }
    friend CoeffQ operator/(CoeffQ a, const CoeffQ& b) { return a /= b; }
    friend CoeffQ operator-(const CoeffQ& a) { return CoeffQ(-a.re_, -a.im_); }

    friend bool operator==(const CoeffQ& a, const CoeffQ& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  private:
    Rational re_{0};
    Rational im_{0};
};

std::string to_string(const CoeffQ& c);
std::ostream& operator<<(std::ostream& os, const CoeffQ& c);

}  // namespace polymod
