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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace oracle {

CoeffQ power(const CoeffQ& c, int k) {
    CoeffQ out(1);
    for (int i = 0; i < k; ++i) out = out * c;
    return out;
}

mpz_class fact(int n) {
    mpz_class out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

mpz_class binomial(int n, int k) { return fact(n) / (fact(k) * fact(n - k)); }

static CoeffQ q(const mpz_class& num, const mpz_class& den = 1) { return CoeffQ(Rational(num, den)); }

void add_term(Dict& d, int i, int j, const CoeffQ& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = d.try_emplace({i, j}, c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) d.erase(it);
    }
}

Dict to_dict(const BiPoly& f) {
    Dict out;
    const auto coords = f.coords();
    for (std::size_t n = 0; n < coords.size(); ++n) {
        const auto cs = coords[n].coeffs();
        for (std::size_t i = 0; i < cs.size(); ++i)
            add_term(out, static_cast<int>(i), static_cast<int>(n), cs[i] * q(1, fact(static_cast<int>(n))));
    }
    return out;
}

BiPoly from_dict(const Dict& d) {
    int max_j = -1;
    for (const auto& [key, c] : d) max_j = std::max(max_j, key.second);
    std::vector<std::vector<CoeffQ>> coords(static_cast<std::size_t>(max_j + 1));
    for (const auto& [key, c] : d) {
        auto& row = coords[static_cast<std::size_t>(key.second)];
        if (row.size() <= static_cast<std::size_t>(key.first)) row.resize(static_cast<std::size_t>(key.first) + 1);
        row[static_cast<std::size_t>(key.first)] = c * q(fact(key.second));
    }
    std::vector<UniPoly> polys;
    for (auto& row : coords) polys.emplace_back(std::move(row));
    return BiPoly::from_coords(std::move(polys));
}

Dict operator+(Dict a, const Dict& b) {
    for (const auto& [key, c] : b) add_term(a, key.first, key.second, c);
    return a;
}

Dict scaled(Dict a, const CoeffQ& c) {
    if (c.is_zero()) return {};
    for (auto& [key, v] : a) v = v * c;
    return a;
}

CoeffQ eval(const Dict& d, const CoeffQ& x, const CoeffQ& y) {
    CoeffQ out;
    for (const auto& [key, c] : d) out = out + c * power(x, key.first) * power(y, key.second);
    return out;
}

Dict shift(const Dict& d, const CoeffQ& a, const CoeffQ& b) {
    Dict out;
    for (const auto& [key, c] : d) {
        const auto [i, j] = key;
        for (int p = 0; p <= i; ++p)
            for (int r = 0; r <= j; ++r)
                add_term(out, p, r, c * q(binomial(i, p) * binomial(j, r)) * power(a, i - p) * power(b, j - r));
    }
    return out;
}

Dict d_dx(const Dict& d) {
    Dict out;
    for (const auto& [key, c] : d)
        if (key.first > 0) add_term(out, key.first - 1, key.second, c * CoeffQ(key.first));
    return out;
}

Dict d_dy(const Dict& d) {
    Dict out;
    for (const auto& [key, c] : d)
        if (key.second > 0) add_term(out, key.first, key.second - 1, c * CoeffQ(key.second));
    return out;
}

std::vector<Dict> all_partials(const Dict& d) {
    std::vector<Dict> out;
    for (Dict dx = d; !dx.empty(); dx = d_dx(dx))
        for (Dict dy = dx; !dy.empty(); dy = d_dy(dy)) out.push_back(dy);
    return out;
}

UniPoly derive(const UniPoly& f, int j) {
    const auto cs = f.coeffs();
    std::vector<CoeffQ> out;
    for (std::size_t k = static_cast<std::size_t>(j); k < cs.size(); ++k) {
        mpz_class falling = 1;
        for (int t = 0; t < j; ++t) falling *= static_cast<long>(k) - t;
        out.push_back(cs[k] * q(falling));
    }
    return UniPoly(std::move(out));
}

UniPoly apply_table(const GammaTable& g, const std::vector<UniPoly>& tuple) {
    UniPoly out;
    for (const auto& [key, a] : g.entries())
        out = out + a * derive(tuple[static_cast<std::size_t>(key.first - 1)], key.second);
    return out;
}

BiPoly recurse(const GammaTable& g, const std::vector<UniPoly>& seeds) {
    const auto s = static_cast<std::size_t>(g.order());
    std::vector<UniPoly> coords = seeds;
    std::size_t zeros = 0;
    for (const auto& c : seeds) zeros = c.is_zero() ? zeros + 1 : 0;
    while (zeros < s) {
        std::vector<UniPoly> window(coords.end() - static_cast<std::ptrdiff_t>(s), coords.end());
        coords.push_back(apply_table(g, window));
        zeros = coords.back().is_zero() ? zeros + 1 : 0;
    }
    return BiPoly::from_coords(std::move(coords));
}

std::size_t rank(std::vector<std::vector<CoeffQ>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        const CoeffQ inv = rows[r][c].inverse();
        for (std::size_t k = r + 1; k < rows.size(); ++k) {
            if (rows[k][c].is_zero()) continue;
            const CoeffQ f = rows[k][c] * inv;
            for (std::size_t t = c; t < cols; ++t) rows[k][t] = rows[k][t] - f * rows[r][t];
        }
        ++r;
    }
    return r;
}

std::size_t rank(const std::vector<Dict>& polys) {
    std::set<std::pair<int, int>> keys;
    for (const auto& p : polys)
        for (const auto& [key, c] : p) keys.insert(key);
    std::vector<std::vector<CoeffQ>> rows;
    for (const auto& p : polys) {
        std::vector<CoeffQ> row;
        for (const auto& key : keys) {
            auto it = p.find(key);
            row.push_back(it == p.end() ? CoeffQ() : it->second);
        }
        rows.push_back(std::move(row));
    }
    return rank(std::move(rows));
}

bool in_span(const std::vector<Dict>& polys, const Dict& target) {
    auto with = polys;
    with.push_back(target);
    return rank(with) == rank(polys);
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = out(i, j) + a(i, k) * b(k, j);
        }
    return out;
}

static std::size_t matrix_rank(const Matrix& m) {
    std::vector<std::vector<CoeffQ>> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<CoeffQ> row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rank(std::move(rows));
}

std::vector<int> jordan_blocks(const Matrix& d) {
    const std::size_t n = d.rows();
    std::vector<std::size_t> ranks{n};
    Matrix p = Matrix::identity(n);
    while (ranks.back() > 0) {
        p = multiply(p, d);
        ranks.push_back(matrix_rank(p));
        if (ranks.size() > n + 2) break;
    }
    std::vector<int> at_least;  // at_least[k-1] = blocks of size >= k
    for (std::size_t k = 1; k < ranks.size(); ++k) at_least.push_back(static_cast<int>(ranks[k - 1] - ranks[k]));
    std::vector<int> sizes;
    for (std::size_t k = 0; k < at_least.size(); ++k) {
        const int next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
        for (int c = 0; c < at_least[k] - next; ++c) sizes.push_back(static_cast<int>(k) + 1);
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

int Rng::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

bool Rng::coin(double p) { return std::bernoulli_distribution(p)(gen_); }

Rational Rng::small_rational() { return Rational(uniform(-9, 9), uniform(1, 5)); }

CoeffQ Rng::small_coeff(bool gaussian) {
    Rational re = small_rational();
    Rational im = gaussian && coin(0.3) ? small_rational() : Rational(0);
    return CoeffQ(std::move(re), std::move(im));
}

CoeffQ Rng::nonzero_coeff(bool gaussian) {
    CoeffQ c;
    while (c.is_zero()) c = small_coeff(gaussian);
    return c;
}

UniPoly Rng::unipoly(int max_degree, bool gaussian) {
    std::vector<CoeffQ> cs;
    const int deg = uniform(0, max_degree);
    for (int i = 0; i <= deg; ++i) cs.push_back(coin(0.7) ? small_coeff(gaussian) : CoeffQ());
    return UniPoly(std::move(cs));
}

BiPoly Rng::bipoly(int max_x, int max_y, bool gaussian) {
    std::vector<UniPoly> coords;
    const int h = uniform(0, max_y);
    for (int n = 0; n <= h; ++n) coords.push_back(unipoly(max_x, gaussian));
    return BiPoly::from_coords(std::move(coords));
}

GammaTable Rng::gamma(int s, int max_j, bool gaussian) {
    GammaTable g(s);
    for (int i = 1; i <= s; ++i)
        for (int j = 1; j <= max_j; ++j)
            if (coin(0.6)) g.set(i, j, small_coeff(gaussian));
    return g;
}

static Matrix inverse_local(Matrix m) {
    const std::size_t n = m.rows();
    Matrix inv = Matrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (m(p, c).is_zero()) ++p;
        m.swap_rows(p, c);
        inv.swap_rows(p, c);
        const CoeffQ s = m(c, c).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) = m(c, j) * s;
            inv(c, j) = inv(c, j) * s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m(r, c).is_zero()) continue;
            const CoeffQ f = m(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(r, j) = m(r, j) - f * m(c, j);
                inv(r, j) = inv(r, j) - f * inv(c, j);
            }
        }
    }
    return inv;
}

Matrix Rng::nilpotent(int dim) {
    const auto n = static_cast<std::size_t>(dim);
    Matrix u(n, n);
    const double density = 0.2 + 0.6 * std::uniform_real_distribution<double>(0, 1)(gen_);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(density)) u(i, j) = CoeffQ(small_rational());
    Matrix lower = Matrix::identity(n);
    Matrix upper = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            lower(i, j) = CoeffQ(uniform(-2, 2));
            upper(j, i) = CoeffQ(uniform(-2, 2));
        }
    const Matrix p = multiply(lower, upper);
    return multiply(multiply(p, u), inverse_local(p));
}

std::vector<BiPoly> monomial_elements(const GammaTable& g, int deg) {
    std::vector<BiPoly> out;
    for (int t = 0; t < g.order(); ++t)
        for (int i = 0; i < deg; ++i) {
            std::vector<UniPoly> seeds(static_cast<std::size_t>(g.order()));
            seeds[static_cast<std::size_t>(t)] = UniPoly::monomial(CoeffQ(1), static_cast<std::size_t>(i));
            out.push_back(recurse(g, seeds));
        }
    return out;
}

// Rows: elements; columns: coefficients of coordinates 0..k-1.
static std::size_t prefix_rank(const std::vector<BiPoly>& elems, int k, int width) {
    std::vector<std::vector<CoeffQ>> rows;
    for (const auto& e : elems) {
        std::vector<CoeffQ> row;
        for (int n = 0; n < k; ++n)
            for (int i = 0; i < width; ++i) row.push_back(e.coord(static_cast<std::size_t>(n)).coeff(static_cast<std::size_t>(i)));
        rows.push_back(std::move(row));
    }
    return rank(std::move(rows));
}

int sum_order(const GammaTable& g1, const GammaTable& g2, int deg) {
    auto elems = monomial_elements(g1, deg);
    const auto more = monomial_elements(g2, deg);
    elems.insert(elems.end(), more.begin(), more.end());
    int coords = 1;
    for (const auto& e : elems)
        if (!e.is_zero()) coords = std::max(coords, polymod::deg_y(e).value() + 1);
    const std::size_t full = prefix_rank(elems, coords, deg);
    for (int k = 1; k <= coords; ++k)
        if (prefix_rank(elems, k, deg) == full) return k;
    return coords;
}

bool in_md_plus_mgamma(int d, const GammaTable& g, const BiPoly& f, int seed_deg) {
    auto project = [d](const BiPoly& p) {
        Dict out;
        for (const auto& [key, c] : to_dict(p))
            if (key.first >= d) out[key] = c;
        return out;
    };
    std::vector<Dict> cols;
    for (const auto& h : monomial_elements(g, seed_deg)) cols.push_back(project(h));
    return in_span(cols, project(f));
}

double e14_at_two() { return std::exp(2.0) * std::exp(std::exp(1.0)) - std::exp(std::exp(2.0)); }

}  // namespace oracle
