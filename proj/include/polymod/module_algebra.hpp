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

#include <optional>
#include <span>
#include <stop_token>
#include <string>
#include <variant>
#include <vector>

#include "polymod/bipoly.hpp"
#include "polymod/gamma.hpp"

namespace polymod {

class ModuleExpr;

/// M_d = { F : deg [F]_n < d for every n }.
struct Md {
    int d = 0;
    friend bool operator==(const Md&, const Md&) = default;
};

struct MGamma {
    GammaTable gamma;
    friend bool operator==(const MGamma&, const MGamma&) = default;
};

/// Finite-dimensional module spanned by generators and all their partials.
/// Holds the row-reduced closure basis, never the raw generators.
struct FiniteGen {
    std::vector<BiPoly> basis;
    friend bool operator==(const FiniteGen&, const FiniteGen&) = default;
};

struct Sum {
    std::vector<ModuleExpr> parts;  // at least two, never a nested Sum
    friend bool operator==(const Sum&, const Sum&);
};

class ModuleExpr {
  public:
    using Node = std::variant<Md, MGamma, FiniteGen, Sum>;

    static ModuleExpr md(int d);
    static ModuleExpr mgamma(GammaTable g);
    /// Takes raw generators and stores their derivative closure.
    static ModuleExpr finite_gen(std::span<const BiPoly> gens);
    /// Flattens nested sums; a single part is returned unwrapped.
    static ModuleExpr sum(std::vector<ModuleExpr> parts);

    const Node& node() const noexcept { return node_; }
    template <class T>
    const T* as() const noexcept {
        return std::get_if<T>(&node_);
    }

    friend bool operator==(const ModuleExpr&, const ModuleExpr&) = default;

  private:
    explicit ModuleExpr(Node node) : node_(std::move(node)) {}
    Node node_;
};

/// Row-reduced basis of the span of all iterated partials of `gens`, ordered
/// by leading monomial (graded-lex, largest first).
std::vector<BiPoly> derivative_closure(std::span<const BiPoly> gens, std::stop_token stop = {});

/// True iff d/dx g and d/dy g lie in span(gens) for every g; cross-checked by
/// testing three exact translates of every generator.
bool is_translation_invariant(std::span<const BiPoly> gens);

/// Outcome of a membership query. `reason` discriminates the certificate:
///   "member"             F is in the module
///   "coordinate_degree"  M_d: deg [F]_index = degree >= d
///   "recursion"          M_Gamma: [F]_index != L(window), residual given
///   "not_in_span"        finite module: exact linear system inconsistent
///   "sum_infeasible"     Sum: finite linear system inconsistent
struct Membership {
    bool member = true;
    std::string reason = "member";
    std::optional<int> index;
    std::optional<Degree> degree;
    std::optional<UniPoly> residual;
    /// Sum(Md, MGamma): F - H_{Phi(F)} where H_phi = generate(gamma, phi).
    std::optional<BiPoly> sum_residual;
    /// Seed-degree truncation used for infinite parts of a Sum.
    std::optional<int> truncation;
    bool exact = true;
};

/// Default truncation: 1 + max(deg_x F, deg_y F, s, d) over the inputs.
int default_deg_bound(const ModuleExpr& m, const BiPoly& f);

/// Supported Sum shapes: any mix of FiniteGen and MGamma parts plus at most
/// one Md term, except that Md together with two or more MGamma parts is
/// rejected with UnsupportedExpr. Answers are exact when at most one MGamma
/// part occurs; otherwise seeds are searched up to `deg_bound` and the
/// result is labelled inexact.
Membership contains(const ModuleExpr& m, const BiPoly& f, std::optional<int> deg_bound = std::nullopt,
                    std::stop_token stop = {});

struct VSpaceBasis {
    int s = 1;
    int deg_bound = 1;
    std::vector<std::vector<UniPoly>> basis;  // row-reduced s-tuples
    bool exact = true;
};

/// Basis of { ([F]_0, ..., [F]_{s-1}) : F in M, deg_x F < deg_bound }.
VSpaceBasis v_space(const ModuleExpr& m, int s, int deg_bound, std::stop_token stop = {});

/// Elements of span(polys) with deg_x F <= max_x_degree, row-reduced.
std::vector<BiPoly> truncate_span(std::span<const BiPoly> polys, int max_x_degree);

}  // namespace polymod
