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

#include <vector>

#include "json.hpp"
#include "polymod/bipoly.hpp"
#include "polymod/gamma.hpp"
#include "polymod/linalg.hpp"
#include "polymod/module_algebra.hpp"

// Wire formats. Emission is canonical (lowest-terms rationals, sorted keys),
// so identical values always serialize to identical bytes. Parsing accepts a
// coefficient as {"re": "p/q", "im": "p/q"} (im optional), a rational string,
// or a JSON integer.

namespace polymod {

struct SumOrderReport;
struct ChainDecomposition;

void to_json(nlohmann::json& j, const CoeffQ& c);
void to_json(nlohmann::json& j, const UniPoly& f);
/// {"coords": [UniPoly, ...]} with F = sum_n coords[n](x) * y^n / n!.
void to_json(nlohmann::json& j, const BiPoly& f);
void to_json(nlohmann::json& j, const GammaTable& g);
void to_json(nlohmann::json& j, const ModuleExpr& m);
void to_json(nlohmann::json& j, const Membership& m);
void to_json(nlohmann::json& j, const VSpaceBasis& v);
void to_json(nlohmann::json& j, const Matrix& m);
void to_json(nlohmann::json& j, const ChainDecomposition& c);
void to_json(nlohmann::json& j, const SumOrderReport& r);

CoeffQ parse_coeff(const nlohmann::json& j);
UniPoly parse_unipoly(const nlohmann::json& j);
BiPoly parse_bipoly(const nlohmann::json& j);
std::vector<BiPoly> parse_bipoly_list(const nlohmann::json& j);
std::vector<UniPoly> parse_unipoly_list(const nlohmann::json& j);
GammaTable parse_gamma(const nlohmann::json& j);
ModuleExpr parse_module(const nlohmann::json& j);
Matrix parse_matrix(const nlohmann::json& j);

}  // namespace polymod
