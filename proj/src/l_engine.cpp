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

#include "polymod/l_engine.hpp"

#include <algorithm>
#include <string>

#include "polymod/error.hpp"
#include "polymod/json_io.hpp"
#include "polymod/layout.hpp"

namespace polymod {

namespace {

// Columns (slot t, power i) of an s-tuple with entries of degree <= top,
// highest power first.
struct TupleColumns {
    int s;
    int top;
    std::size_t size() const { return static_cast<std::size_t>(s * (top + 1)); }
    std::size_t column(int t, int i) const { return static_cast<std::size_t>((top - i) * s + t); }
    int power(std::size_t col) const { return top - static_cast<int>(col) / s; }
};

}  // namespace

GammaTable infer_L(std::span<const BiPoly> basis, int s, int deg_bound, std::stop_token stop) {
    if (s < 1 || deg_bound < 0) throw Error(ErrorKind::InvalidArgument, "infer_L needs s >= 1 and deg_bound >= 0");
    std::vector<BiPoly> span = truncate_span(basis, deg_bound);
    if (!is_translation_invariant(span)) {
        throw Error(ErrorKind::InvalidArgument, "basis is not closed under partial differentiation");
    }
    if (auto order = order_of_module(span, deg_bound); !order || *order > s) {
        // A nonzero element with vanishing leading coordinates.
        MonomialLayout layout = MonomialLayout::covering(span, MonomialOrder::coordinate_first);
        Echelon e = row_reduce(layout.to_matrix(span), Exec::parallel, stop);
        BiPoly witness;
        for (std::size_t r = 0; r < e.rank(); ++r) {
            if (static_cast<int>(layout.monomial(e.pivots[r]).second) >= s) {
                witness = layout.to_poly(e.reduced.row(r));
                break;
            }
        }
        throw Error(ErrorKind::NotAnLModule,
                    "span has a nonzero element whose first " + std::to_string(s) + " coordinates vanish",
                    {{"s", s}, {"witness", witness}});
    }

    // Phi is injective on the span, so L is pinned down by the pairs
    // (Phi(F), [F]_s). Row-reduce on the Phi part with the highest powers
    // first: rows whose pivot sits at power <= j span the tuples of degree <= j.
    const TupleColumns cols{s, std::max(deg_bound, 0)};
    Matrix pairs(span.size(), cols.size());
    for (std::size_t r = 0; r < span.size(); ++r)
        for (int t = 0; t < s; ++t) {
            const UniPoly& f = span[r].coord(static_cast<std::size_t>(t));
            for (std::size_t i = 0; i < f.size(); ++i) pairs(r, cols.column(t, static_cast<int>(i))) = f.coeffs()[i];
        }
    // Carry [F]_s alongside through the same row operations.
    MonomialLayout target_layout(static_cast<std::size_t>(cols.top), 0, MonomialOrder::x_degree_first);
    Matrix aug(span.size(), cols.size() + target_layout.size());
    for (std::size_t r = 0; r < span.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) aug(r, c) = pairs(r, c);
        const UniPoly& next = span[r].coord(static_cast<std::size_t>(s));
        for (std::size_t i = 0; i < next.size(); ++i) aug(r, cols.size() + target_layout.column(i, 0)) = next.coeffs()[i];
    }
    Echelon e = row_reduce(std::move(aug), Exec::parallel, stop);

    struct Element {
        int degree;
        std::vector<UniPoly> phi;
        UniPoly image;
    };
    std::vector<Element> elements;
    for (std::size_t r = 0; r < e.rank(); ++r) {
        if (e.pivots[r] >= cols.size()) break;  // cannot happen: Phi is injective
        Element el;
        el.degree = cols.power(e.pivots[r]);
        for (int t = 0; t < s; ++t) {
            std::vector<CoeffQ> coeffs(static_cast<std::size_t>(cols.top + 1));
            for (int i = 0; i <= cols.top; ++i) coeffs[static_cast<std::size_t>(i)] = e.reduced(r, cols.column(t, i));
            el.phi.emplace_back(std::move(coeffs));
        }
        Vec target(target_layout.size());
        for (std::size_t c = 0; c < target_layout.size(); ++c) target[c] = e.reduced(r, cols.size() + c);
        el.image = target_layout.to_poly(target).coord(0);
        elements.push_back(std::move(el));
    }

    GammaTable table(s);
    for (const auto& el : elements) {
        if (el.degree == 0 && !el.image.is_zero()) {
            throw Error(ErrorKind::NotAnLModule, "a constant tuple has a nonconstant continuation",
                        {{"s", s}, {"layer", 0}});
        }
    }

    nlohmann::json free = nlohmann::json::array();
    for (int j = 1; j <= cols.top; ++j) {
        throw_if_stopped(stop);
        // C(f) = [F]_s - sum_{i, j' < j} a_{i,j'} f_i^(j') is constant and
        // equals sum_i a_{i,j} * j! * coeff(f_i, j).
        const CoeffQ j_fact(factorial(static_cast<unsigned>(j)));
        std::vector<Vec> rows;
        Vec rhs;
        for (const auto& el : elements) {
            if (el.degree > j) continue;
            UniPoly constant_part = el.image - apply_L(table, el.phi);
            if (constant_part.degree() >= 1) {
                throw Error(ErrorKind::InvalidArgument, "layer residual is not constant",
                            {{"layer", j}, {"residual", constant_part}});
            }
            Vec row(static_cast<std::size_t>(s));
            for (int t = 0; t < s; ++t) row[static_cast<std::size_t>(t)] = el.phi[static_cast<std::size_t>(t)].coeff(static_cast<std::size_t>(j)) * j_fact;
            rows.push_back(std::move(row));
            rhs.push_back(constant_part.coeff(0));
        }
        Matrix m = Matrix::from_rows(rows, static_cast<std::size_t>(s));
        auto solution = solve(m, rhs, stop);
        if (!solution) {
            throw Error(ErrorKind::InvalidArgument, "layer equations are inconsistent", {{"layer", j}});
        }
        Echelon layer = row_reduce(m);
        std::vector<bool> pinned(static_cast<std::size_t>(s), false);
        for (auto p : layer.pivots) pinned[p] = true;
        for (int t = 0; t < s; ++t) {
            if (!pinned[static_cast<std::size_t>(t)]) free.push_back({{"layer", j}, {"i", t + 1}});
            table.set(t + 1, j, (*solution)[static_cast<std::size_t>(t)]);
        }
    }
    if (!free.empty()) {
        throw Error(ErrorKind::Underdetermined, "some coefficients are not determined by the truncated module",
                    {{"free", free}, {"particular", table}, {"deg_bound", deg_bound}});
    }
    return table;
}

std::optional<int> order_of_module(std::span<const BiPoly> basis, int deg_bound) {
    if (basis.empty()) return 1;
    MonomialLayout layout = MonomialLayout::covering(basis, MonomialOrder::coordinate_first);
    Echelon e = row_reduce(layout.to_matrix(basis));
    // Coordinate-first columns: a row pivoting in coordinate n vanishes in
    // every coordinate below n, and such rows span those elements.
    int order = 1;
    for (auto p : e.pivots) order = std::max(order, static_cast<int>(layout.monomial(p).second) + 1);
    if (order > deg_bound) return std::nullopt;
    return order;
}

SumOrderReport order_of_sum(const GammaTable& g1, const GammaTable& g2, int deg_bound, std::stop_token stop) {
    if (deg_bound < 1) throw Error(ErrorKind::InvalidArgument, "order_of_sum needs deg_bound >= 1");
    SumOrderReport report;
    report.deg_bound = deg_bound;

    std::vector<BiPoly> images;
    for (const GammaTable* g : {&g1, &g2}) {
        for (int t = 0; t < g->order(); ++t)
            for (int i = 0; i < deg_bound; ++i) {
                throw_if_stopped(stop);
                std::vector<UniPoly> seeds(static_cast<std::size_t>(g->order()));
                seeds[static_cast<std::size_t>(t)] = UniPoly::monomial(CoeffQ(1), static_cast<std::size_t>(i));
                images.push_back(generate(*g, seeds, stop));
            }
    }
    report.parameter_dim = static_cast<int>(images.size());
    // Images run past s + deg_bound once s >= 2: the descent only forces the
    // window maximum down once every s steps. Cover them in full.
    MonomialLayout layout = MonomialLayout::covering(images, MonomialOrder::coordinate_first);
    report.compared_coords = static_cast<int>(layout.max_n()) + 1;
    Echelon e = row_reduce(layout.to_matrix(images), Exec::parallel, stop);
    report.sum_dim = static_cast<int>(e.rank());
    report.order = 1;
    for (auto p : e.pivots) report.order = std::max(report.order, static_cast<int>(layout.monomial(p).second) + 1);
    return report;
}

ChainDecomposition nilpotent_chains(const Matrix& d, std::stop_token stop) {
    if (d.rows() != d.cols()) throw Error(ErrorKind::InvalidArgument, "chain decomposition needs a square matrix");
    const std::size_t n = d.rows();
    ChainDecomposition out;
    out.dim = n;
    if (n == 0) return out;

    std::vector<Matrix> powers{Matrix::identity(n)};
    while (!powers.back().is_zero()) {
        if (powers.size() > n) {
            throw Error(ErrorKind::NotNilpotent, "D^dim is not zero", {{"dim", n}});
        }
        powers.push_back(powers.back() * d);
    }
    const int index = static_cast<int>(powers.size()) - 1;  // smallest m with D^m = 0

    auto apply = [&powers](std::size_t k, const Vec& v) { return powers[k] * v; };
    auto kernel_basis = [&](int k) {
        std::vector<Vec> ns = nullspace(powers[static_cast<std::size_t>(k)], stop);
        if (ns.empty()) return ns;
        return row_reduce(Matrix::from_rows(ns, n)).nonzero_rows();
    };

    for (int q = index; q >= 1; --q) {
        throw_if_stopped(stop);
        std::vector<Vec> spanned = kernel_basis(q - 1);
        for (const auto& c : out.chains)
            spanned.push_back(apply(static_cast<std::size_t>(c.length - q), c.generator));
        for (const auto& candidate : kernel_basis(q)) {
            Echelon current = spanned.empty() ? Echelon{Matrix(0, n), {}} : row_reduce(Matrix::from_rows(spanned, n));
            if (in_row_span(current, candidate)) continue;
            out.chains.push_back({candidate, q});
            spanned.push_back(candidate);
        }
    }
    for (const auto& c : out.chains)
        for (int j = 0; j < c.length; ++j) out.basis_vectors.push_back(apply(static_cast<std::size_t>(j), c.generator));
    return out;
}

Matrix reconstruct(const ChainDecomposition& chains) {
    const std::size_t n = chains.dim;
    Matrix basis(n, n);
    for (std::size_t c = 0; c < chains.basis_vectors.size(); ++c)
        for (std::size_t r = 0; r < n; ++r) basis(r, c) = chains.basis_vectors[c][r];
    Matrix jordan(n, n);
    std::size_t start = 0;
    for (const auto& chain : chains.chains) {
        for (int j = 0; j + 1 < chain.length; ++j)
            jordan(start + static_cast<std::size_t>(j) + 1, start + static_cast<std::size_t>(j)) = CoeffQ(1);
        start += static_cast<std::size_t>(chain.length);
    }
    auto inv = inverse(basis);
    if (!inv) throw Error(ErrorKind::InvalidArgument, "chain vectors do not form a basis");
    return basis * jordan * *inv;
}

Matrix quotient_derivation(int s, int k, int d) {
    if (s < 1 || d < 0 || k <= d) throw Error(ErrorKind::InvalidArgument, "quotient_derivation needs s >= 1, k > d >= 0");
    const int width = k - d;
    auto index = [width, d](int t, int m) { return static_cast<std::size_t>(t * width + (m - d)); };
    Matrix out(static_cast<std::size_t>(s * width), static_cast<std::size_t>(s * width));
    for (int t = 0; t < s; ++t)
        for (int m = d + 1; m < k; ++m)
            if (m - 1 >= d) out(index(t, m - 1), index(t, m)) = CoeffQ(static_cast<long>(m));
    return out;
}

SplitResult canonical_split(const ModuleExpr& m, std::stop_token stop) {
    const auto* sum = m.as<Sum>();
    const Md* md = nullptr;
    const MGamma* mg = nullptr;
    if (sum && sum->parts.size() == 2) {
        for (const auto& p : sum->parts) {
            if (p.as<Md>()) md = p.as<Md>();
            if (p.as<MGamma>()) mg = p.as<MGamma>();
        }
    }
    if (!md || !mg) throw Error(ErrorKind::UnsupportedExpr, "canonical_split needs Sum(Md(d), MGamma(g))");
    const int s = mg->gamma.order();
    // x^e y^t lies in M_d whenever e < d, and x^d y^s is excluded, so the
    // scan stops at e = d at the latest.
    for (int e = 0; e <= md->d; ++e)
        for (int t = 0; t <= s + 1; ++t) {
            BiPoly probe = BiPoly::monomial(CoeffQ(1), static_cast<std::size_t>(e), static_cast<std::size_t>(t));
            if (!contains(m, probe, std::nullopt, stop).member) return {e, t};
        }
    throw Error(ErrorKind::InvalidArgument, "no excluded monomial found; M_d + M_Gamma should exclude x^d y^s");
}

}  // namespace polymod
