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

#include <map>
#include <span>
#include <stop_token>
#include <utility>
#include <vector>

#include "polymod/bipoly.hpp"

namespace polymod {

/// Finitely supported coefficients a_{i,j} (1 <= i <= s, j >= 1) of the
/// differential operator
///
///     L(f_1, ..., f_s) = sum_i sum_j a_{i,j} * f_i^(j).
///
/// Zero entries are never stored.
class GammaTable {
  public:
    explicit GammaTable(int order);

    int order() const noexcept { return order_; }
    /// Largest j with a nonzero entry, 0 for the zero table.
    int max_j() const noexcept { return max_j_; }
    const std::map<std::pair<int, int>, CoeffQ>& entries() const noexcept { return entries_; }

    CoeffQ at(int i, int j) const;
    GammaTable& set(int i, int j, const CoeffQ& a);
    /// Copy keeping only entries with j <= max_j.
    GammaTable restricted(int max_j) const;

    friend bool operator==(const GammaTable& a, const GammaTable& b) {
        return a.order_ == b.order_ && a.entries_ == b.entries_;
    }

  private:
    int order_;
    int max_j_ = 0;
    std::map<std::pair<int, int>, CoeffQ> entries_;
};

/// The order-1 table a_{1,1} = 1, whose module is { f(x + y) }.
GammaTable taylor_table();

/// L applied to (f_1, ..., f_s). Throws ArityMismatch unless the tuple has
/// exactly order() entries.
UniPoly apply_L(const GammaTable& g, std::span<const UniPoly> tuple);

/// The element of M_Gamma with the given first `order()` coordinates:
/// f_n = L(f_{n-s}, ..., f_{n-1}) for n >= s. Terminates because L strictly
/// lowers the maximal degree of the window.
BiPoly generate(const GammaTable& g, std::span<const UniPoly> seeds, std::stop_token stop = {});

struct RecursionCheck {
    bool member = true;
    int failing_index = -1;  // first n >= s with [F]_n != L(window)
    UniPoly residual;        // L(window) - [F]_n at that index
};

RecursionCheck mgamma_contains(const GammaTable& g, const BiPoly& f);

/// ([F]_0, ..., [F]_{s-1}).
std::vector<UniPoly> leading_coords(const BiPoly& f, int s);

}  // namespace polymod
