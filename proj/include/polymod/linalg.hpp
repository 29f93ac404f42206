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
#include <optional>
#include <stop_token>
#include <vector>

#include "polymod/coeff.hpp"

namespace polymod {

using Vec = std::vector<CoeffQ>;

/// Which implementation of a data-parallel kernel to run. `serial` is the
/// reference the tests compare `parallel` against.
enum class Exec { serial, parallel };

/// Dense row-major matrix of exact scalars.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    CoeffQ& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const CoeffQ& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;
    void swap_rows(std::size_t a, std::size_t b);
    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vec operator*(const Matrix& a, const Vec& v);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<CoeffQ> data_;
};

/// Reduced row echelon form. Pivot search takes the first nonzero entry of
/// each column in order; no other heuristics, so the result is reproducible.
struct Echelon {
    Matrix reduced;                   // nonzero rows first, then zero rows
    std::vector<std::size_t> pivots;  // pivot column of row r, r < rank()

    std::size_t rank() const noexcept { return pivots.size(); }
    std::vector<Vec> nonzero_rows() const;
};

Echelon row_reduce(Matrix m, Exec exec = Exec::parallel, std::stop_token stop = {});

std::size_t rank(const Matrix& m);
/// Basis of { v : m v = 0 }, one vector per free column, in column order.
std::vector<Vec> nullspace(const Matrix& m, std::stop_token stop = {});
/// A particular solution of m x = rhs (free variables set to zero), or nullopt.
std::optional<Vec> solve(const Matrix& m, const Vec& rhs, std::stop_token stop = {});
std::optional<Matrix> inverse(const Matrix& m);
Matrix power(const Matrix& m, unsigned k);

/// Reduces `v` against the nonzero rows of an echelon form; the result is
/// zero iff v lies in their span.
Vec reduce_against(const Echelon& e, Vec v);
bool in_row_span(const Echelon& e, const Vec& v);

/// Throws Error(Cancelled) when a stop has been requested.
void throw_if_stopped(const std::stop_token& stop);

}  // namespace polymod
