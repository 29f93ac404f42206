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

#include "polymod/bipoly.hpp"

#include <algorithm>

namespace polymod {

namespace {
const UniPoly kZero{};
}

BiPoly BiPoly::from_coords(std::vector<UniPoly> coords) {
    BiPoly f;
    f.coords_ = std::move(coords);
    f.normalize();
    return f;
}

BiPoly BiPoly::monomial(const CoeffQ& c, std::size_t i, std::size_t n) {
    std::vector<UniPoly> coords(n + 1);
    coords[n] = UniPoly::monomial(c * CoeffQ(factorial(static_cast<unsigned>(n))), i);
    return from_coords(std::move(coords));
}

void BiPoly::normalize() {
    while (!coords_.empty() && coords_.back().is_zero()) coords_.pop_back();
}

const UniPoly& BiPoly::coord(std::size_t n) const { return n < coords_.size() ? coords_[n] : kZero; }

CoeffQ BiPoly::monomial_coeff(std::size_t i, std::size_t n) const {
    CoeffQ c = coord(n).coeff(i);
    if (n < 2 || c.is_zero()) return c;
    return c / CoeffQ(factorial(static_cast<unsigned>(n)));
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    if (o.coords_.size() > coords_.size()) coords_.resize(o.coords_.size());
    for (std::size_t n = 0; n < o.coords_.size(); ++n) coords_[n] += o.coords_[n];
    normalize();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    if (o.coords_.size() > coords_.size()) coords_.resize(o.coords_.size());
    for (std::size_t n = 0; n < o.coords_.size(); ++n) coords_[n] -= o.coords_[n];
    normalize();
    return *this;
}

BiPoly& BiPoly::operator*=(const CoeffQ& c) {
    for (auto& f : coords_) f *= c;
    normalize();
    return *this;
}

const UniPoly& coord(const BiPoly& f, std::size_t n) { return f.coord(n); }

Degree deg_x(const BiPoly& f) {
    Degree d = Degree::neg_inf();
    for (const auto& c : f.coords()) d = std::max(d, c.degree());
    return d;
}

Degree deg_y(const BiPoly& f) {
    return f.is_zero() ? Degree::neg_inf() : Degree(static_cast<int>(f.coord_count()) - 1);
}

BiPoly d_dx(const BiPoly& f) {
    std::vector<UniPoly> out;
    out.reserve(f.coord_count());
    for (const auto& c : f.coords()) out.push_back(c.derivative());
    return BiPoly::from_coords(std::move(out));
}

BiPoly d_dy(const BiPoly& f) {
    if (f.coord_count() <= 1) return {};
    return BiPoly::from_coords(std::vector<UniPoly>(f.coords().begin() + 1, f.coords().end()));
}

BiPoly shift(const BiPoly& f, const CoeffQ& a, const CoeffQ& b) {
    // F(x+a, y+b) = sum_n f_n(x+a) (y+b)^n / n!, and
    // (y+b)^n / n! = sum_m (y^m / m!) * b^(n-m) / (n-m)!, hence
    // [G]_m = sum_{n >= m} f_n(x+a) * b^(n-m) / (n-m)!.
    const std::size_t count = f.coord_count();
    std::vector<UniPoly> shifted;
    shifted.reserve(count);
    for (const auto& c : f.coords()) shifted.push_back(c.taylor_shift(a));
    if (b.is_zero()) return BiPoly::from_coords(std::move(shifted));

    std::vector<CoeffQ> weights(count);  // b^k / k!
    CoeffQ power(1);
    for (std::size_t k = 0; k < count; ++k) {
        weights[k] = power / CoeffQ(factorial(static_cast<unsigned>(k)));
        power *= b;
    }
    std::vector<UniPoly> out(count);
    for (std::size_t m = 0; m < count; ++m) {
        for (std::size_t n = m; n < count; ++n) out[m] += shifted[n] * weights[n - m];
    }
    return BiPoly::from_coords(std::move(out));
}

CoeffQ eval(const BiPoly& f, const CoeffQ& x0, const CoeffQ& y0) {
    CoeffQ acc;
    CoeffQ weight(1);  // y0^n / n!
    for (std::size_t n = 0; n < f.coord_count(); ++n) {
        if (n > 0) weight = weight * y0 / CoeffQ(static_cast<long>(n));
        acc += f.coord(n).eval(x0) * weight;
    }
    return acc;
}

std::string to_string(const BiPoly& f) {
    if (f.is_zero()) return "0";
    // graded order, highest total degree first; ties by x-degree.
    struct Term {
        std::size_t i, n;
        CoeffQ c;
    };
    std::vector<Term> terms;
    for (std::size_t n = 0; n < f.coord_count(); ++n) {
        for (std::size_t i = 0; i < f.coord(n).size(); ++i) {
            CoeffQ c = f.monomial_coeff(i, n);
            if (!c.is_zero()) terms.push_back({i, n, std::move(c)});
        }
    }
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        if (a.i + a.n != b.i + b.n) return a.i + a.n > b.i + b.n;
        return a.i > b.i;
    });
    std::string out;
    for (const auto& t : terms) {
        std::string cs = to_string(t.c);
        bool negative = cs.front() == '-';
        if (negative) cs.erase(0, 1);
        if (!out.empty()) out += negative ? " - " : " + ";
        else if (negative) out += "-";
        std::string mono;
        auto var = [&mono](char v, std::size_t p) {
            if (p == 0) return;
            if (!mono.empty()) mono += "*";
            mono += v;
            if (p > 1) mono += "^" + std::to_string(p);
        };
        var('x', t.i);
        var('y', t.n);
        if (mono.empty()) out += cs;
        else if (cs == "1") out += mono;
        else out += cs + "*" + mono;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const BiPoly& f) { return os << to_string(f); }

}  // namespace polymod
