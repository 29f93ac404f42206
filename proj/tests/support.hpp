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

#include <initializer_list>
#include <tuple>

#include "oracles.hpp"

namespace support {

using polymod::BiPoly;
using polymod::CoeffQ;
using polymod::UniPoly;

inline UniPoly up(std::initializer_list<long> cs) {
    std::vector<CoeffQ> v;
    for (long c : cs) v.emplace_back(c);
    return UniPoly(std::move(v));
}

/// sum c x^i y^j from (c, i, j) triples, in ordinary monomial coefficients.
inline BiPoly bp(std::initializer_list<std::tuple<long, int, int>> terms) {
    oracle::Dict d;
    for (const auto& [c, i, j] : terms) oracle::add_term(d, i, j, CoeffQ(c));
    return oracle::from_dict(d);
}

inline CoeffQ rat(long p, long q = 1) { return CoeffQ(polymod::Rational(p, q)); }

}  // namespace support
