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

#include "polymod/unipoly.hpp"

#include <algorithm>

namespace polymod {

std::string to_string(Degree d) { return d.is_neg_inf() ? std::string("-inf") : std::to_string(d.value()); }

std::ostream& operator<<(std::ostream& os, Degree d) { return os << to_string(d); }

UniPoly::UniPoly(std::vector<CoeffQ> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UniPoly UniPoly::constant(const CoeffQ& c) { return UniPoly(std::vector<CoeffQ>{c}); }

UniPoly UniPoly::monomial(const CoeffQ& c, std::size_t power) {
    std::vector<CoeffQ> v(power + 1);
    v[power] = c;
    return UniPoly(std::move(v));
}

void UniPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

CoeffQ UniPoly::coeff(std::size_t power) const { return power < coeffs_.size() ? coeffs_[power] : CoeffQ(); }

UniPoly UniPoly::derivative(unsigned order) const {
    if (order == 0) return *this;
    if (coeffs_.size() <= order) return {};
    std::vector<CoeffQ> out(coeffs_.size() - order);
    for (std::size_t k = order; k < coeffs_.size(); ++k) {
        // k * (k-1) * ... * (k-order+1)
        mpz_class falling(1);
        for (std::size_t t = 0; t < order; ++t) falling *= static_cast<unsigned long>(k - t);
        out[k - order] = coeffs_[k] * CoeffQ(Rational(falling));
    }
    return UniPoly(std::move(out));
}

CoeffQ UniPoly::eval(const CoeffQ& x0) const {
    CoeffQ acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x0;
        acc += *it;
    }
    return acc;
}

UniPoly UniPoly::taylor_shift(const CoeffQ& a) const {
    if (a.is_zero() || coeffs_.size() <= 1) return *this;
    // Horner in the shifted variable: repeated synthetic division by (x - a).
    std::vector<CoeffQ> c = coeffs_;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t k = n - 1; k-- > i;) c[k] += a * c[k + 1];
    }
    return UniPoly(std::move(c));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator*=(const CoeffQ& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<CoeffQ> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(out));
}

std::string to_string(const UniPoly& f, char var) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t k = f.size(); k-- > 0;) {
        const CoeffQ& c = f.coeffs()[k];
        if (c.is_zero()) continue;
        std::string cs = to_string(c);
        bool negative = cs.front() == '-';
        if (negative) cs.erase(0, 1);
        if (!out.empty()) out += negative ? " - " : " + ";
        else if (negative) out += "-";
        std::string mono;
        if (k >= 1) mono += var;
        if (k >= 2) mono += "^" + std::to_string(k);
        if (mono.empty()) out += cs;
        else if (cs == "1") out += mono;
        else out += cs + "*" + mono;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const UniPoly& f) { return os << to_string(f); }

}  // namespace polymod
