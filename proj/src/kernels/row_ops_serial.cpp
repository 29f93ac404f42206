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

#include "kernels/row_ops.hpp"

namespace polymod::kernels {

void eliminate_column_serial(Matrix& m, std::size_t pivot_row, std::size_t col) {
    const std::size_t cols = m.cols();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r == pivot_row || m(r, col).is_zero()) continue;
        const CoeffQ factor = m(r, col);
        for (std::size_t c = col; c < cols; ++c) {
            if (!m(pivot_row, c).is_zero()) m(r, c) -= factor * m(pivot_row, c);
        }
    }
}

}  // namespace polymod::kernels
