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

#include <cstddef>

#include "polymod/linalg.hpp"

namespace polymod::kernels {

/// Clears column `col` in every row except `pivot_row`, whose entry at `col`
/// must already be 1. Entries left of `col` in the pivot row are zero.
void eliminate_column_serial(Matrix& m, std::size_t pivot_row, std::size_t col);
void eliminate_column_parallel(Matrix& m, std::size_t pivot_row, std::size_t col);

}  // namespace polymod::kernels
