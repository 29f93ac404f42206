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

#include "polymod/gamma.hpp"

#include <algorithm>
#include <string>

#include "polymod/error.hpp"
#include "polymod/linalg.hpp"

namespace polymod {

GammaTable::GammaTable(int order) : order_(order) {
    if (order < 1) throw Error(ErrorKind::InvalidArgument, "Gamma table order must be positive");
}

CoeffQ GammaTable::at(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? CoeffQ() : it->second;
}

GammaTable& GammaTable::set(int i, int j, const CoeffQ& a) {
    if (i < 1 || i > order_ || j < 1) {
        throw Error(ErrorKind::InvalidArgument,
                    "Gamma entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside 1..s x 1..");
    }
    if (a.is_zero()) entries_.erase({i, j});
    else entries_[{i, j}] = a;
    max_j_ = 0;
    for (const auto& [key, value] : entries_) max_j_ = std::max(max_j_, key.second);
    return *this;
}

GammaTable GammaTable::restricted(int max_j) const {
    GammaTable out(order_);
    for (const auto& [key, value] : entries_)
        if (key.second <= max_j) out.set(key.first, key.second, value);
    return out;
}

GammaTable taylor_table() {
    GammaTable g(1);
    g.set(1, 1, CoeffQ(1));
    return g;
}

UniPoly apply_L(const GammaTable& g, std::span<const UniPoly> tuple) {
    if (static_cast<int>(tuple.size()) != g.order()) {
        throw Error(ErrorKind::ArityMismatch,
                    "L of order " + std::to_string(g.order()) + " applied to " + std::to_string(tuple.size()) +
                        " polynomials",
                    {{"expected", g.order()}, {"got", tuple.size()}});
    }
    UniPoly out;
    for (const auto& [key, a] : g.entries()) {
        const auto& f = tuple[static_cast<std::size_t>(key.first - 1)];
        if (f.size() <= static_cast<std::size_t>(key.second)) continue;
        out += f.derivative(static_cast<unsigned>(key.second)) * a;
    }
    return out;
}

BiPoly generate(const GammaTable& g, std::span<const UniPoly> seeds, std::stop_token stop) {
    const auto s = static_cast<std::size_t>(g.order());
    if (seeds.size() != s) {
        throw Error(ErrorKind::ArityMismatch, "generate needs exactly s seeds",
                    {{"expected", g.order()}, {"got", seeds.size()}});
    }
    std::vector<UniPoly> coords(seeds.begin(), seeds.end());
    // Once s consecutive coordinates vanish every later one does too.
    std::size_t zero_run = 0;
    for (std::size_t k = 0; k < s; ++k) zero_run = coords[k].is_zero() ? zero_run + 1 : 0;
    while (zero_run < s) {
        throw_if_stopped(stop);
        UniPoly next = apply_L(g, std::span<const UniPoly>(coords).subspan(coords.size() - s, s));
        zero_run = next.is_zero() ? zero_run + 1 : 0;
        coords.push_back(std::move(next));
    }
    return BiPoly::from_coords(std::move(coords));
}

std::vector<UniPoly> leading_coords(const BiPoly& f, int s) {
    std::vector<UniPoly> out;
    out.reserve(static_cast<std::size_t>(s));
    for (int n = 0; n < s; ++n) out.push_back(f.coord(static_cast<std::size_t>(n)));
    return out;
}

RecursionCheck mgamma_contains(const GammaTable& g, const BiPoly& f) {
    const int s = g.order();
    // Past deg_y F + s the window is all zeros, so L(window) = 0 trivially.
    const int last = f.is_zero() ? s - 1 : deg_y(f).value() + s;
    std::vector<UniPoly> window = leading_coords(f, s);
    for (int n = s; n <= last; ++n) {
        UniPoly residual = apply_L(g, window) - f.coord(static_cast<std::size_t>(n));
        if (!residual.is_zero()) return {false, n, std::move(residual)};
        window.erase(window.begin());
        window.push_back(f.coord(static_cast<std::size_t>(n)));
    }
    return {};
}

}  // namespace polymod
