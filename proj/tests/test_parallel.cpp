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

#include "doctest.h"
#include "kernels/row_ops.hpp"
#include "polymod/linalg.hpp"
#include "polymod/nonclosed.hpp"
#include "support.hpp"

using namespace polymod;

namespace {

Matrix random_matrix(oracle::Rng& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng.coin(0.6)) m(r, c) = rng.small_coeff();
    return m;
}

}  // namespace

TEST_SUITE("serial and parallel kernels") {
    TEST_CASE("row reduction agrees") {
        oracle::Rng rng(51);
        for (int t = 0; t < 25; ++t) {
            const Matrix m = random_matrix(rng, static_cast<std::size_t>(rng.uniform(1, 12)),
                                           static_cast<std::size_t>(rng.uniform(1, 12)));
            const Echelon a = row_reduce(m, Exec::serial);
            const Echelon b = row_reduce(m, Exec::parallel);
            CHECK(a.reduced == b.reduced);
            CHECK(a.pivots == b.pivots);
            std::vector<std::vector<CoeffQ>> rows;
            for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
            CHECK(a.rank() == oracle::rank(rows));
        }
    }

    TEST_CASE("single elimination step agrees") {
        oracle::Rng rng(52);
        for (int t = 0; t < 20; ++t) {
            Matrix m = random_matrix(rng, 9, 7);
            m(0, 0) = CoeffQ(1);
            Matrix p = m;
            kernels::eliminate_column_serial(m, 0, 0);
            kernels::eliminate_column_parallel(p, 0, 0);
            CHECK(m == p);
            for (std::size_t r = 1; r < m.rows(); ++r) CHECK(m(r, 0).is_zero());
        }
    }

    TEST_CASE("bound sweep agrees") {
        const auto a = nonclosed::sweep(2, 20, Exec::serial);
        const auto b = nonclosed::sweep(2, 20, Exec::parallel);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].n == b[i].n);
            CHECK(a[i].log_total.log_mag() == b[i].log_total.log_mag());
            CHECK(a[i].certified == b[i].certified);
        }
    }
}
