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

#include "polymod/layout.hpp"

#include <algorithm>

#include "polymod/error.hpp"

namespace polymod {

MonomialLayout::MonomialLayout(std::size_t max_i, std::size_t max_n, MonomialOrder order)
    : max_i_(max_i), max_n_(max_n) {
    for (std::size_t n = 0; n <= max_n; ++n)
        for (std::size_t i = 0; i <= max_i; ++i) monomials_.emplace_back(i, n);
    auto key = [order](const std::pair<std::size_t, std::size_t>& m) {
        const auto [i, n] = m;
        switch (order) {
            case MonomialOrder::graded_lex: return std::pair<long, long>(-long(i + n), -long(i));
            case MonomialOrder::x_degree_first: return std::pair<long, long>(-long(i), -long(n));
            case MonomialOrder::coordinate_first: return std::pair<long, long>(long(n), -long(i));
        }
        return std::pair<long, long>(0, 0);
    };
    std::stable_sort(monomials_.begin(), monomials_.end(),
                     [&key](const auto& a, const auto& b) { return key(a) < key(b); });
    column_.assign(monomials_.size(), 0);
    for (std::size_t c = 0; c < monomials_.size(); ++c) {
        const auto [i, n] = monomials_[c];
        column_[n * (max_i_ + 1) + i] = c;
    }
}

MonomialLayout MonomialLayout::covering(std::span<const BiPoly> polys, MonomialOrder order, std::size_t min_i,
                                        std::size_t min_n) {
    std::size_t max_i = min_i;
    std::size_t max_n = min_n;
    for (const auto& f : polys) {
        if (f.is_zero()) continue;
        max_i = std::max<std::size_t>(max_i, static_cast<std::size_t>(deg_x(f).value()));
        max_n = std::max<std::size_t>(max_n, static_cast<std::size_t>(deg_y(f).value()));
    }
    return MonomialLayout(max_i, max_n, order);
}

Vec MonomialLayout::to_vec(const BiPoly& f) const {
    Vec v(size());
    for (std::size_t n = 0; n < f.coord_count(); ++n) {
        const UniPoly& c = f.coord(n);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c.coeffs()[i].is_zero()) continue;
            if (n > max_n_ || i > max_i_) throw Error(ErrorKind::InvalidArgument, "polynomial outside monomial layout");
            v[column(i, n)] = f.monomial_coeff(i, n);
        }
    }
    return v;
}

BiPoly MonomialLayout::to_poly(const Vec& v) const {
    BiPoly out;
    for (std::size_t c = 0; c < v.size(); ++c) {
        if (v[c].is_zero()) continue;
        const auto [i, n] = monomials_[c];
        out += BiPoly::monomial(v[c], i, n);
    }
    return out;
}

Matrix MonomialLayout::to_matrix(std::span<const BiPoly> polys) const {
    Matrix m(polys.size(), size());
    for (std::size_t r = 0; r < polys.size(); ++r) {
        Vec v = to_vec(polys[r]);
        for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = std::move(v[c]);
    }
    return m;
}

}  // namespace polymod
