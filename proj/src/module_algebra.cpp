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

#include "polymod/module_algebra.hpp"

#include <algorithm>
#include <random>

#include "polymod/error.hpp"
#include "polymod/layout.hpp"
#include "polymod/linalg.hpp"

namespace polymod {

bool operator==(const Sum& a, const Sum& b) { return a.parts == b.parts; }

ModuleExpr ModuleExpr::md(int d) {
    if (d < 0) throw Error(ErrorKind::InvalidArgument, "M_d needs d >= 0");
    return ModuleExpr(Md{d});
}

ModuleExpr ModuleExpr::mgamma(GammaTable g) { return ModuleExpr(MGamma{std::move(g)}); }

ModuleExpr ModuleExpr::finite_gen(std::span<const BiPoly> gens) {
    return ModuleExpr(FiniteGen{derivative_closure(gens)});
}

ModuleExpr ModuleExpr::sum(std::vector<ModuleExpr> parts) {
    std::vector<ModuleExpr> flat;
    for (auto& p : parts) {
        if (const auto* inner = p.as<Sum>()) flat.insert(flat.end(), inner->parts.begin(), inner->parts.end());
        else flat.push_back(std::move(p));
    }
    if (flat.empty()) throw Error(ErrorKind::InvalidArgument, "empty module sum");
    if (flat.size() == 1) return std::move(flat.front());
    return ModuleExpr(Sum{std::move(flat)});
}

namespace {

int degree_or(Degree d, int fallback) { return d.is_neg_inf() ? fallback : d.value(); }

std::vector<BiPoly> all_partials(std::span<const BiPoly> gens) {
    std::vector<BiPoly> out;
    for (const auto& g : gens) {
        BiPoly by = g;
        while (!by.is_zero()) {
            BiPoly bx = by;
            while (!bx.is_zero()) {
                out.push_back(bx);
                bx = d_dx(bx);
            }
            by = d_dy(by);
        }
    }
    return out;
}

std::vector<BiPoly> echelon_polys(const Echelon& e, const MonomialLayout& layout) {
    std::vector<BiPoly> out;
    out.reserve(e.rank());
    for (std::size_t r = 0; r < e.rank(); ++r) out.push_back(layout.to_poly(e.reduced.row(r)));
    return out;
}

CoeffQ small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    return CoeffQ(Rational(num(rng), den(rng)));
}

}  // namespace

std::vector<BiPoly> derivative_closure(std::span<const BiPoly> gens, std::stop_token stop) {
    std::vector<BiPoly> partials = all_partials(gens);
    if (partials.empty()) return {};
    MonomialLayout layout = MonomialLayout::covering(partials, MonomialOrder::graded_lex);
    Echelon e = row_reduce(layout.to_matrix(partials), Exec::parallel, stop);
    return echelon_polys(e, layout);
}

bool is_translation_invariant(std::span<const BiPoly> gens) {
    std::vector<BiPoly> probes(gens.begin(), gens.end());
    std::mt19937_64 rng(0x5eed);
    std::vector<BiPoly> shifted;
    for (const auto& g : gens) {
        probes.push_back(d_dx(g));
        probes.push_back(d_dy(g));
        for (int k = 0; k < 3; ++k) shifted.push_back(shift(g, small_rational(rng), small_rational(rng)));
    }
    MonomialLayout layout = MonomialLayout::covering(probes, MonomialOrder::graded_lex);
    Echelon span = row_reduce(layout.to_matrix(gens));
    for (std::size_t k = gens.size(); k < probes.size(); ++k)
        if (!in_row_span(span, layout.to_vec(probes[k]))) return false;
    for (const auto& t : shifted)
        if (!in_row_span(span, layout.to_vec(t))) return false;
    return true;
}

std::vector<BiPoly> truncate_span(std::span<const BiPoly> polys, int max_x_degree) {
    if (polys.empty()) return {};
    MonomialLayout layout = MonomialLayout::covering(polys, MonomialOrder::x_degree_first);
    Echelon e = row_reduce(layout.to_matrix(polys));
    std::vector<BiPoly> out;
    // x-degree-first columns: the rows whose pivot has small x-degree span
    // exactly the elements of small x-degree.
    for (std::size_t r = 0; r < e.rank(); ++r) {
        if (static_cast<int>(layout.monomial(e.pivots[r]).first) <= max_x_degree)
            out.push_back(layout.to_poly(e.reduced.row(r)));
    }
    return out;
}

int default_deg_bound(const ModuleExpr& m, const BiPoly& f) {
    int bound = std::max({degree_or(deg_x(f), 0), degree_or(deg_y(f), 0)});
    auto visit_part = [&bound](const ModuleExpr& part) {
        if (const auto* md = part.as<Md>()) bound = std::max(bound, md->d);
        if (const auto* mg = part.as<MGamma>()) bound = std::max(bound, mg->gamma.order());
    };
    if (const auto* sum = m.as<Sum>()) {
        for (const auto& p : sum->parts) visit_part(p);
    } else {
        visit_part(m);
    }
    return bound + 1;
}

namespace {

Membership contains_md(int d, const BiPoly& f) {
    for (std::size_t n = 0; n < f.coord_count(); ++n) {
        Degree deg = f.coord(n).degree();
        if (deg >= d) {
            Membership out;
            out.member = false;
            out.reason = "coordinate_degree";
            out.index = static_cast<int>(n);
            out.degree = deg;
            return out;
        }
    }
    return {};
}

Membership contains_span(const std::vector<BiPoly>& basis, const BiPoly& f) {
    Membership out;
    bool member;
    if (basis.empty()) {
        member = f.is_zero();
    } else {
        std::vector<BiPoly> all = basis;
        all.push_back(f);
        MonomialLayout layout = MonomialLayout::covering(all, MonomialOrder::graded_lex);
        member = in_row_span(row_reduce(layout.to_matrix(basis)), layout.to_vec(f));
    }
    if (!member) {
        out.member = false;
        out.reason = "not_in_span";
    }
    return out;
}

Membership contains_sum(const Sum& sum, const BiPoly& f, std::optional<int> deg_bound, const ModuleExpr& whole,
                        std::stop_token stop) {
    int d = -1;
    std::vector<const GammaTable*> gammas;
    std::vector<BiPoly> finite;
    for (const auto& part : sum.parts) {
        if (const auto* md = part.as<Md>()) d = std::max(d, md->d);
        else if (const auto* mg = part.as<MGamma>()) gammas.push_back(&mg->gamma);
        else if (const auto* fg = part.as<FiniteGen>()) finite.insert(finite.end(), fg->basis.begin(), fg->basis.end());
        else throw Error(ErrorKind::UnsupportedExpr, "nested Sum");
    }
    if (d >= 0 && gammas.size() >= 2) {
        throw Error(ErrorKind::UnsupportedExpr, "membership in M_d plus two or more M_Gamma terms is not supported",
                    {{"md", d}, {"mgamma_parts", gammas.size()}});
    }
    const int low = std::max(d, 0);  // x-degrees below this are absorbed by M_d
    const bool exact = gammas.size() <= 1;

    // One M_Gamma part: any representation F = A + H + B has
    // Phi(H) = Phi(F) - Phi(A) - Phi(B), so seed degrees never exceed this.
    int seed_count;
    if (exact) {
        int top = std::max(degree_or(deg_x(f), -1), low - 1);
        for (const auto& b : finite) top = std::max(top, degree_or(deg_x(b), -1));
        seed_count = top + 1;
    } else {
        seed_count = deg_bound.value_or(default_deg_bound(whole, f));
    }

    std::vector<BiPoly> columns = finite;
    for (const auto* g : gammas) {
        for (int t = 0; t < g->order(); ++t) {
            for (int i = 0; i < seed_count; ++i) {
                throw_if_stopped(stop);
                std::vector<UniPoly> seeds(static_cast<std::size_t>(g->order()));
                seeds[static_cast<std::size_t>(t)] = UniPoly::monomial(CoeffQ(1), static_cast<std::size_t>(i));
                columns.push_back(generate(*g, seeds, stop));
            }
        }
    }

    std::vector<BiPoly> all = columns;
    all.push_back(f);
    MonomialLayout layout = MonomialLayout::covering(all, MonomialOrder::coordinate_first);
    std::vector<std::size_t> kept;
    for (std::size_t c = 0; c < layout.size(); ++c)
        if (static_cast<int>(layout.monomial(c).first) >= low) kept.push_back(c);

    Matrix system(kept.size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        Vec v = layout.to_vec(columns[j]);
        for (std::size_t r = 0; r < kept.size(); ++r) system(r, j) = v[kept[r]];
    }
    Vec full_rhs = layout.to_vec(f);
    Vec rhs(kept.size());
    for (std::size_t r = 0; r < kept.size(); ++r) rhs[r] = full_rhs[kept[r]];

    Membership out;
    out.exact = exact;
    if (!exact) out.truncation = seed_count;
    if (!solve(system, rhs, stop)) {
        out.member = false;
        out.reason = "sum_infeasible";
    }

    // Sum(Md, MGamma): H_psi lies in M_d whenever deg psi < d, so membership is
    // deg_x(F - H_{Phi(F)}) < d. Reported as the human-readable certificate.
    if (d >= 0 && gammas.size() == 1 && finite.empty()) {
        const GammaTable& g = *gammas.front();
        BiPoly residual = f - generate(g, leading_coords(f, g.order()), stop);
        Membership by_degree = contains_md(d, residual);
        if (by_degree.member != out.member) {
            throw Error(ErrorKind::InvalidArgument, "internal: sum certificate disagrees with linear system");
        }
        out.sum_residual = std::move(residual);
        out.index = by_degree.index;
        out.degree = by_degree.degree;
    }
    return out;
}

using Tuple = std::vector<UniPoly>;

std::vector<Tuple> reduce_tuples(const std::vector<Tuple>& tuples, int s, int deg_bound) {
    // Column (t, i) ordered by degree descending, then slot.
    const auto width = static_cast<std::size_t>(s * deg_bound);
    auto column = [s, deg_bound](int t, int i) { return static_cast<std::size_t>((deg_bound - 1 - i) * s + t); };
    Matrix m(tuples.size(), width);
    for (std::size_t r = 0; r < tuples.size(); ++r) {
        for (int t = 0; t < s; ++t) {
            const UniPoly& f = tuples[r][static_cast<std::size_t>(t)];
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (static_cast<int>(i) >= deg_bound) {
                    throw Error(ErrorKind::InvalidArgument, "tuple entry exceeds the degree bound");
                }
                m(r, column(t, static_cast<int>(i))) = f.coeffs()[i];
            }
        }
    }
    Echelon e = row_reduce(std::move(m));
    std::vector<Tuple> out;
    for (std::size_t r = 0; r < e.rank(); ++r) {
        Tuple tuple;
        for (int t = 0; t < s; ++t) {
            std::vector<CoeffQ> coeffs(static_cast<std::size_t>(deg_bound));
            for (int i = 0; i < deg_bound; ++i) coeffs[static_cast<std::size_t>(i)] = e.reduced(r, column(t, i));
            tuple.emplace_back(std::move(coeffs));
        }
        out.push_back(std::move(tuple));
    }
    return out;
}

Tuple unit_tuple(int s, int t, int i) {
    Tuple tuple(static_cast<std::size_t>(s));
    tuple[static_cast<std::size_t>(t)] = UniPoly::monomial(CoeffQ(1), static_cast<std::size_t>(i));
    return tuple;
}

void collect_tuples(const ModuleExpr& m, int s, int deg_bound, std::vector<Tuple>& out, std::stop_token stop) {
    if (const auto* md = m.as<Md>()) {
        for (int t = 0; t < s; ++t)
            for (int i = 0; i < std::min(md->d, deg_bound); ++i) out.push_back(unit_tuple(s, t, i));
    } else if (const auto* mg = m.as<MGamma>()) {
        const int order = mg->gamma.order();
        for (int t = 0; t < order; ++t)
            for (int i = 0; i < deg_bound; ++i) {
                Tuple seeds = unit_tuple(order, t, i);
                out.push_back(leading_coords(generate(mg->gamma, seeds, stop), s));
            }
    } else if (const auto* fg = m.as<FiniteGen>()) {
        for (const auto& f : truncate_span(fg->basis, deg_bound - 1)) out.push_back(leading_coords(f, s));
    } else if (const auto* sum = m.as<Sum>()) {
        for (const auto& part : sum->parts) collect_tuples(part, s, deg_bound, out, stop);
    }
}

}  // namespace

Membership contains(const ModuleExpr& m, const BiPoly& f, std::optional<int> deg_bound, std::stop_token stop) {
    if (const auto* md = m.as<Md>()) return contains_md(md->d, f);
    if (const auto* mg = m.as<MGamma>()) {
        RecursionCheck check = mgamma_contains(mg->gamma, f);
        Membership out;
        if (!check.member) {
            out.member = false;
            out.reason = "recursion";
            out.index = check.failing_index;
            out.residual = std::move(check.residual);
        }
        return out;
    }
    if (const auto* fg = m.as<FiniteGen>()) return contains_span(fg->basis, f);
    return contains_sum(*m.as<Sum>(), f, deg_bound, m, stop);
}

VSpaceBasis v_space(const ModuleExpr& m, int s, int deg_bound, std::stop_token stop) {
    if (s < 1 || deg_bound < 1) throw Error(ErrorKind::InvalidArgument, "v_space needs s >= 1 and deg_bound >= 1");
    std::vector<Tuple> tuples;
    collect_tuples(m, s, deg_bound, tuples, stop);
    VSpaceBasis out;
    out.s = s;
    out.deg_bound = deg_bound;
    out.basis = reduce_tuples(tuples, s, deg_bound);
    if (const auto* sum = m.as<Sum>()) {
        // Exact when every part but one is an M_d term.
        auto non_md = std::count_if(sum->parts.begin(), sum->parts.end(),
                                    [](const ModuleExpr& p) { return p.as<Md>() == nullptr; });
        out.exact = non_md <= 1;
    }
    return out;
}

}  // namespace polymod
