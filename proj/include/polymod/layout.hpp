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
#include <span>
#include <utility>
#include <vector>

#include "polymod/bipoly.hpp"
#include "polymod/linalg.hpp"

namespace polymod {

enum class MonomialOrder {
    graded_lex,        // total degree descending, then x-degree descending
    x_degree_first,    // x-degree descending, then y-degree descending
    coordinate_first,  // y-index ascending, then x-degree descending
};

/// Column indexing of the monomials x^i y^n in a box 0 <= i <= max_i,
/// 0 <= n <= max_n. Vectors hold ordinary monomial coefficients.
class MonomialLayout {
  public:
    MonomialLayout(std::size_t max_i, std::size_t max_n, MonomialOrder order);
    static MonomialLayout covering(std::span<const BiPoly> polys, MonomialOrder order, std::size_t min_i = 0,
                                   std::size_t min_n = 0);

    std::size_t size() const noexcept { return monomials_.size(); }
    std::size_t max_i() const noexcept { return max_i_; }
    std::size_t max_n() const noexcept { return max_n_; }
    std::size_t column(std::size_t i, std::size_t n) const { return column_[n * (max_i_ + 1) + i]; }
    std::pair<std::size_t, std::size_t> monomial(std::size_t col) const { return monomials_[col]; }

    Vec to_vec(const BiPoly& f) const;
    BiPoly to_poly(const Vec& v) const;
    Matrix to_matrix(std::span<const BiPoly> polys) const;

  private:
    std::size_t max_i_;
    std::size_t max_n_;
    std::vector<std::pair<std::size_t, std::size_t>> monomials_;
    std::vector<std::size_t> column_;
};

}  // namespace polymod
