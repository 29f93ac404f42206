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
#include <vector>

#include "polymod/bipoly.hpp"
#include "polymod/gamma.hpp"
#include "polymod/linalg.hpp"
#include "polymod/module_algebra.hpp"

namespace polymod {

/// Recovers the coefficients a_{i,j} (j <= deg_bound) of an L-module of
/// order s from a basis of it, one derivative layer at a time: constants
/// must map to zero, then the layer-j coefficients are the unique solution
/// of the constant parts C(f) = sum_i a_{i,j} f_i^(j).
///
/// Only elements with deg_x F <= deg_bound take part. Throws
///   NotAnLModule     some nonzero element has [F]_0 = ... = [F]_{s-1} = 0
///                    (witness in detail()), or constants map to nonzero;
///   Underdetermined  some layer leaves coefficients free (the (layer, i)
///                    pairs are listed in detail());
///   InvalidArgument  the span is not closed under differentiation.
GammaTable infer_L(std::span<const BiPoly> basis, int s, int deg_bound, std::stop_token stop = {});

/// Smallest s <= deg_bound such that no nonzero element of span(basis) has
/// its first s coordinate polynomials all zero; nullopt if none is.
std::optional<int> order_of_module(std::span<const BiPoly> basis, int deg_bound);

struct SumOrderReport {
    int order = 1;
    int deg_bound = 0;
    int compared_coords = 0;  // coordinates [S]_0 .. [S]_{compared_coords-1}
    int parameter_dim = 0;    // seed monomials of both tables
    int sum_dim = 0;          // dimension of the truncated sum
};

/// Order of M_{g1} + M_{g2} within the truncation: seeds of degree below
/// deg_bound, every nonzero coordinate of their images compared.
SumOrderReport order_of_sum(const GammaTable& g1, const GammaTable& g2, int deg_bound, std::stop_token stop = {});

struct Chain {
    Vec generator;
    int length = 0;
};

struct ChainDecomposition {
    std::size_t dim = 0;
    std::vector<Chain> chains;
    /// D^j u_i for each chain in order, j = 0 .. q_i - 1.
    std::vector<Vec> basis_vectors;
};

/// Cyclic basis of a nilpotent operator (acting on column vectors). Chains
/// are chosen longest first; within a length the candidates are the
/// row-reduced basis vectors of ker D^q in order, taking each one that is
/// independent of what is already spanned. Throws NotNilpotent.
ChainDecomposition nilpotent_chains(const Matrix& d, std::stop_token stop = {});

/// Rebuilds D from a chain decomposition: D maps D^j u to D^{j+1} u.
Matrix reconstruct(const ChainDecomposition& chains);

/// Componentwise differentiation on (s-tuples of degree < k) / (degree < d)
/// in the monomial coset basis, ordered slot-major then by power.
Matrix quotient_derivation(int s, int k, int d);

struct SplitResult {
    int d = 0;
    int order = 0;
};

/// For Sum(Md(d), MGamma(g)): the smallest e with x^e y^t outside the module
/// for some t <= g.order() + 1, and the smallest such t.
SplitResult canonical_split(const ModuleExpr& m, std::stop_token stop = {});

}  // namespace polymod
