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

#include "polymod/json_io.hpp"

#include <string>

#include "polymod/error.hpp"
#include "polymod/l_engine.hpp"

namespace polymod {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what, const json& j) {
    throw Error(ErrorKind::Parse, what, {{"input", j.dump()}});
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'", j);
    return j.at(key);
}

Rational parse_rational_value(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.dump(), 10);
    fail("expected a rational string or integer", j);
}

int parse_int(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) fail(std::string("field '") + key + "' must be an integer", j);
    return v.get<int>();
}

}  // namespace

void to_json(json& j, const CoeffQ& c) { j = json{{"re", to_string(c.re())}, {"im", to_string(c.im())}}; }

void to_json(json& j, const UniPoly& f) {
    j = json::array();
    for (const auto& c : f.coeffs()) j.push_back(c);
}

void to_json(json& j, const BiPoly& f) {
    json coords = json::array();
    for (const auto& c : f.coords()) coords.push_back(c);
    j = json{{"coords", std::move(coords)}};
}

void to_json(json& j, const GammaTable& g) {
    json entries = json::array();
    for (const auto& [key, a] : g.entries()) entries.push_back({{"i", key.first}, {"j", key.second}, {"a", a}});
    j = json{{"s", g.order()}, {"entries", std::move(entries)}};
}

void to_json(json& j, const ModuleExpr& m) {
    if (const auto* md = m.as<Md>()) j = json{{"type", "Md"}, {"d", md->d}};
    else if (const auto* mg = m.as<MGamma>()) j = json{{"type", "MGamma"}, {"gamma", mg->gamma}};
    else if (const auto* fg = m.as<FiniteGen>()) {
        json gens = json::array();
        for (const auto& g : fg->basis) gens.push_back(g);
        j = json{{"type", "FiniteGen"}, {"gens", std::move(gens)}};
    } else {
        json parts = json::array();
        for (const auto& p : m.as<Sum>()->parts) parts.push_back(p);
        j = json{{"type", "Sum"}, {"parts", std::move(parts)}};
    }
}

void to_json(json& j, const Membership& m) {
    json cert{{"reason", m.reason}, {"exact", m.exact}};
    if (m.index) cert["index"] = *m.index;
    if (m.degree) cert["degree"] = m.degree->is_neg_inf() ? json(nullptr) : json(m.degree->value());
    if (m.residual) cert["residual"] = *m.residual;
    if (m.sum_residual) cert["sum_residual"] = *m.sum_residual;
    if (m.truncation) cert["truncation"] = *m.truncation;
    j = json{{"contains", m.member}, {"certificate", std::move(cert)}};
}

void to_json(json& j, const VSpaceBasis& v) {
    json basis = json::array();
    for (const auto& tuple : v.basis) {
        json t = json::array();
        for (const auto& f : tuple) t.push_back(f);
        basis.push_back(std::move(t));
    }
    j = json{{"s", v.s}, {"deg_bound", v.deg_bound}, {"dim", v.basis.size()}, {"exact", v.exact},
             {"basis", std::move(basis)}};
}

void to_json(json& j, const Matrix& m) {
    j = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        j.push_back(std::move(row));
    }
}

void to_json(json& j, const ChainDecomposition& c) {
    json chains = json::array();
    for (const auto& chain : c.chains) chains.push_back({{"generator", chain.generator}, {"length", chain.length}});
    j = json{{"dim", c.dim}, {"chains", std::move(chains)}, {"basis_vectors", c.basis_vectors}};
}

void to_json(json& j, const SumOrderReport& r) {
    j = json{{"order", r.order},
             {"deg_bound", r.deg_bound},
             {"certificate",
              {{"compared_coords", r.compared_coords}, {"parameter_dim", r.parameter_dim}, {"sum_dim", r.sum_dim}}}};
}

CoeffQ parse_coeff(const json& j) {
    if (j.is_object()) {
        Rational re = parse_rational_value(field(j, "re"));
        Rational im = j.contains("im") ? parse_rational_value(j.at("im")) : Rational(0);
        return CoeffQ(std::move(re), std::move(im));
    }
    return CoeffQ(parse_rational_value(j));
}

UniPoly parse_unipoly(const json& j) {
    if (!j.is_array()) fail("a univariate polynomial is an array of coefficients", j);
    std::vector<CoeffQ> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) coeffs.push_back(parse_coeff(c));
    return UniPoly(std::move(coeffs));
}

BiPoly parse_bipoly(const json& j) {
    const json& coords = field(j, "coords");
    if (!coords.is_array()) fail("'coords' must be an array", j);
    std::vector<UniPoly> out;
    for (const auto& c : coords) out.push_back(parse_unipoly(c));
    return BiPoly::from_coords(std::move(out));
}

std::vector<BiPoly> parse_bipoly_list(const json& j) {
    if (!j.is_array()) fail("expected an array of polynomials", j);
    std::vector<BiPoly> out;
    for (const auto& f : j) out.push_back(parse_bipoly(f));
    return out;
}

std::vector<UniPoly> parse_unipoly_list(const json& j) {
    if (!j.is_array()) fail("expected an array of univariate polynomials", j);
    std::vector<UniPoly> out;
    for (const auto& f : j) out.push_back(parse_unipoly(f));
    return out;
}

GammaTable parse_gamma(const json& j) {
    int s = parse_int(j, "s");
    if (s < 1) fail("'s' must be positive", j);
    GammaTable g(s);
    if (!j.contains("entries")) return g;
    const json& entries = j.at("entries");
    if (!entries.is_array()) fail("'entries' must be an array", j);
    for (const auto& e : entries) {
        int i = parse_int(e, "i");
        int jj = parse_int(e, "j");
        if (i < 1 || i > s || jj < 1) fail("entry index out of range", e);
        g.set(i, jj, parse_coeff(field(e, "a")));
    }
    return g;
}

ModuleExpr parse_module(const json& j) {
    const json& type = field(j, "type");
    if (!type.is_string()) fail("'type' must be a string", j);
    const auto tag = type.get<std::string>();
    if (tag == "Md") {
        int d = parse_int(j, "d");
        if (d < 0) fail("'d' must be nonnegative", j);
        return ModuleExpr::md(d);
    }
    if (tag == "MGamma") return ModuleExpr::mgamma(parse_gamma(field(j, "gamma")));
    if (tag == "FiniteGen") {
        std::vector<BiPoly> gens = parse_bipoly_list(field(j, "gens"));
        return ModuleExpr::finite_gen(gens);
    }
    if (tag == "Sum") {
        const json& parts = field(j, "parts");
        if (!parts.is_array() || parts.size() < 2) fail("'parts' must list at least two modules", j);
        std::vector<ModuleExpr> out;
        for (const auto& p : parts) out.push_back(parse_module(p));
        return ModuleExpr::sum(std::move(out));
    }
    fail("unknown module type '" + tag + "'", j);
}

Matrix parse_matrix(const json& j) {
    if (!j.is_array()) fail("a matrix is an array of rows", j);
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : j.front().size();
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) fail("matrix rows must be arrays of equal length", j);
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_coeff(j[r][c]);
    }
    return m;
}

}  // namespace polymod
