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

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "polymod/unipoly.hpp"

namespace polymod {

/// Bivariate polynomial held as its coordinate polynomials:
///
///     F(x, y) = sum_n coords[n](x) * y^n / n!
///
/// With this factorial convention d/dy is a pure index shift. The last stored
/// coordinate is never zero, so the representation is unique.
class BiPoly {
  public:
    BiPoly() = default;

    static BiPoly from_coords(std::vector<UniPoly> coords);
    /// c * x^i * y^n in ordinary monomial terms.
    static BiPoly monomial(const CoeffQ& c, std::size_t i, std::size_t n);
    /// F(x, y) = f(x).
    static BiPoly from_x(const UniPoly& f) { return from_coords({f}); }

    std::span<const UniPoly> coords() const noexcept { return coords_; }
    const UniPoly& coord(std::size_t n) const;
    std::size_t coord_count() const noexcept { return coords_.size(); }
    bool is_zero() const noexcept { return coords_.empty(); }

    /// Coefficient of x^i y^n in ordinary monomial terms, i.e. [F]_n[i] / n!.
    CoeffQ monomial_coeff(std::size_t i, std::size_t n) const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const CoeffQ& c);

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator-(BiPoly a) { return a *= CoeffQ(-1); }
    friend BiPoly operator*(BiPoly a, const CoeffQ& c) { return a *= c; }
    friend BiPoly operator*(const CoeffQ& c, BiPoly a) { return a *= c; }

    friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

  private:
    void normalize();

    std::vector<UniPoly> coords_;
};

const UniPoly& coord(const BiPoly& f, std::size_t n);
inline BiPoly from_coords(std::vector<UniPoly> coords) { return BiPoly::from_coords(std::move(coords)); }

Degree deg_x(const BiPoly& f);
Degree deg_y(const BiPoly& f);

BiPoly d_dx(const BiPoly& f);
/// [result]_n = [f]_{n+1}.
BiPoly d_dy(const BiPoly& f);
/// G(x, y) = F(x + a, y + b), exact.
BiPoly shift(const BiPoly& f, const CoeffQ& a, const CoeffQ& b);
CoeffQ eval(const BiPoly& f, const CoeffQ& x0, const CoeffQ& y0);

/// Conventional monomial rendering, e.g. "x^2*y + 1/2*y^2".
std::string to_string(const BiPoly& f);
std::ostream& operator<<(std::ostream& os, const BiPoly& f);

}  // namespace polymod
