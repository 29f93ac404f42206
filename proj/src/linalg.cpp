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

#include "polymod/linalg.hpp"

#include "kernels/row_ops.hpp"
#include "polymod/error.hpp"

namespace polymod {

void throw_if_stopped(const std::stop_token& stop) {
    if (stop.stop_requested()) throw Error(ErrorKind::Cancelled, "computation cancelled");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = CoeffQ(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error(ErrorKind::InvalidArgument, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Vec Matrix::row(std::size_t r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vec Matrix::col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

Vec operator*(const Matrix& a, const Vec& v) {
    if (a.cols_ != v.size()) throw Error(ErrorKind::InvalidArgument, "matrix/vector shape mismatch");
    Vec out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (!v[k].is_zero()) out[i] += a(i, k) * v[k];
    return out;
}

std::vector<Vec> Echelon::nonzero_rows() const {
    std::vector<Vec> out;
    out.reserve(rank());
    for (std::size_t r = 0; r < rank(); ++r) out.push_back(reduced.row(r));
    return out;
}

Echelon row_reduce(Matrix m, Exec exec, std::stop_token stop) {
    Echelon e;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
        throw_if_stopped(stop);
        std::size_t pick = lead;
        while (pick < m.rows() && m(pick, col).is_zero()) ++pick;
        if (pick == m.rows()) continue;
        m.swap_rows(lead, pick);
        const CoeffQ inv = m(lead, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) {
            if (!m(lead, c).is_zero()) m(lead, c) *= inv;
        }
        if (exec == Exec::parallel) kernels::eliminate_column_parallel(m, lead, col);
        else kernels::eliminate_column_serial(m, lead, col);
        e.pivots.push_back(col);
        ++lead;
    }
    e.reduced = std::move(m);
    return e;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

std::vector<Vec> nullspace(const Matrix& m, std::stop_token stop) {
    Echelon e = row_reduce(m, Exec::parallel, stop);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols());
        v[free] = CoeffQ(1);
        for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& rhs, std::stop_token stop) {
    if (rhs.size() != m.rows()) throw Error(ErrorKind::InvalidArgument, "rhs length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = rhs[r];
    }
    Echelon e = row_reduce(std::move(aug), Exec::parallel, stop);
    if (e.rank() > 0 && e.pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols());
    for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = CoeffQ(1);
    }
    Echelon e = row_reduce(std::move(aug));
    if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
    return inv;
}

Matrix power(const Matrix& m, unsigned k) {
    Matrix out = Matrix::identity(m.rows());
    for (unsigned i = 0; i < k; ++i) out = out * m;
    return out;
}

Vec reduce_against(const Echelon& e, Vec v) {
    for (std::size_t r = 0; r < e.rank(); ++r) {
        const std::size_t p = e.pivots[r];
        if (v[p].is_zero()) continue;
        const CoeffQ factor = v[p];
        for (std::size_t c = p; c < v.size(); ++c) {
            if (!e.reduced(r, c).is_zero()) v[c] -= factor * e.reduced(r, c);
        }
    }
    return v;
}

bool in_row_span(const Echelon& e, const Vec& v) {
    for (const auto& x : reduce_against(e, v))
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace polymod
