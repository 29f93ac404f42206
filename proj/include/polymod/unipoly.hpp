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

#include <compare>
#include <cstddef>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "polymod/coeff.hpp"

namespace polymod {

/// Polynomial degree with a dedicated sentinel for the zero polynomial that
/// orders below every integer.
class Degree {
  public:
    constexpr Degree() = default;
    constexpr explicit Degree(int value) : value_(value) {}

    static constexpr Degree neg_inf() { return Degree(); }

    constexpr bool is_neg_inf() const noexcept { return value_ == kNegInf; }
    /// Meaningless for neg_inf(); callers check first.
    constexpr int value() const noexcept { return value_; }

    friend constexpr auto operator<=>(Degree a, Degree b) = default;
    friend constexpr bool operator<(Degree a, int b) { return a.value_ < b; }
    friend constexpr bool operator>=(Degree a, int b) { return a.value_ >= b; }

  private:
    static constexpr int kNegInf = std::numeric_limits<int>::min();
    int value_ = kNegInf;
};

std::string to_string(Degree d);
std::ostream& operator<<(std::ostream& os, Degree d);

/// Dense univariate polynomial over CoeffQ; coeffs()[k] is the coefficient
/// of x^k. The highest stored coefficient is never zero.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<CoeffQ> coeffs);

    static UniPoly constant(const CoeffQ& c);
    static UniPoly monomial(const CoeffQ& c, std::size_t power);
    static UniPoly x() { return monomial(CoeffQ(1), 1); }

    std::span<const CoeffQ> coeffs() const noexcept { return coeffs_; }
    /// Zero beyond the stored range.
    CoeffQ coeff(std::size_t power) const;
    std::size_t size() const noexcept { return coeffs_.size(); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    Degree degree() const noexcept {
        return coeffs_.empty() ? Degree::neg_inf() : Degree(static_cast<int>(coeffs_.size()) - 1);
    }
    const CoeffQ& leading_coeff() const { return coeffs_.back(); }

    UniPoly derivative(unsigned order = 1) const;
    CoeffQ eval(const CoeffQ& x0) const;
    /// f(x + a).
    UniPoly taylor_shift(const CoeffQ& a) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const CoeffQ& c);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator-(UniPoly a) { return a *= CoeffQ(-1); }
    friend UniPoly operator*(UniPoly a, const CoeffQ& c) { return a *= c; }
    friend UniPoly operator*(const CoeffQ& c, UniPoly a) { return a *= c; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);

    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  private:
    void normalize();

    std::vector<CoeffQ> coeffs_;
};

std::string to_string(const UniPoly& f, char var = 'x');
std::ostream& operator<<(std::ostream& os, const UniPoly& f);

}  // namespace polymod
