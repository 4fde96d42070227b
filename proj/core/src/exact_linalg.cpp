// Copyright 2026 The slocc-rank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "slocc/exact_linalg.h"

#include <utility>

namespace slocc {

namespace {

// Runs Bareiss elimination in place. Returns the rank; `sign` tracks row and
// column swaps for the determinant.
int bareiss(Matrix<ExactScalar> &m, int &sign) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    ExactScalar prev_inverse(1);
    bool prev_is_one = true;
    std::size_t k = 0;
    sign = 1;
    for (; k < rows && k < cols; ++k) {
        std::size_t pr = rows;
        std::size_t pc = cols;
        for (std::size_t c = k; c < cols && pr == rows; ++c) {
            for (std::size_t r = k; r < rows; ++r) {
                if (!m(r, c).is_zero()) {
                    pr = r;
                    pc = c;
                    break;
                }
            }
        }
        if (pr == rows) {
            break;
        }
        if (pr != k) {
            for (std::size_t c = 0; c < cols; ++c) {
                std::swap(m(pr, c), m(k, c));
            }
            sign = -sign;
        }
        if (pc != k) {
            for (std::size_t r = 0; r < rows; ++r) {
                std::swap(m(r, pc), m(r, k));
            }
            sign = -sign;
        }
        const ExactScalar pivot = m(k, k);
        for (std::size_t i = k + 1; i < rows; ++i) {
            const ExactScalar lead = m(i, k);
            for (std::size_t j = k + 1; j < cols; ++j) {
                ExactScalar v = m(i, j).is_zero() ? ExactScalar() : m(i, j) * pivot;
                if (!lead.is_zero() && !m(k, j).is_zero()) {
                    v -= lead * m(k, j);
                }
                if (!prev_is_one && !v.is_zero()) {
                    v *= prev_inverse;
                }
                m(i, j) = std::move(v);
            }
            m(i, k) = ExactScalar();
        }
        prev_inverse = pivot.inverse();
        prev_is_one = pivot == ExactScalar(1);
    }
    return static_cast<int>(k);
}

}  // namespace

int bareiss_rank(Matrix<ExactScalar> m) {
    int sign = 1;
    return bareiss(m, sign);
}

ExactScalar bareiss_determinant(Matrix<ExactScalar> m) {
    if (!m.is_square()) {
        throw DomainError("determinant of a non-square matrix");
    }
    if (m.rows() == 0) {
        return ExactScalar(1);
    }
    int sign = 1;
    int r = bareiss(m, sign);
    if (r < static_cast<int>(m.rows())) {
        return ExactScalar();
    }
    ExactScalar d = m(m.rows() - 1, m.cols() - 1);
    return sign < 0 ? -d : d;
}

std::optional<std::vector<ExactScalar>> solve_unique(const Matrix<ExactScalar> &a, const std::vector<ExactScalar> &b) {
    if (b.size() != a.rows()) {
        throw DomainError("right-hand side length does not match the matrix");
    }
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    Matrix<ExactScalar> m(rows, cols + 1);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = a(r, c);
        }
        m(r, cols) = b[r];
    }
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t p = row;
        while (p < rows && m(p, c).is_zero()) {
            ++p;
        }
        if (p == rows) {
            return std::nullopt;  // free variable
        }
        for (std::size_t j = 0; j <= cols; ++j) {
            std::swap(m(p, j), m(row, j));
        }
        ExactScalar inv = m(row, c).inverse();
        for (std::size_t j = c; j <= cols; ++j) {
            if (!m(row, j).is_zero()) {
                m(row, j) *= inv;
            }
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m(r, c).is_zero()) {
                continue;
            }
            ExactScalar f = m(r, c);
            for (std::size_t j = c; j <= cols; ++j) {
                if (!m(row, j).is_zero()) {
                    m(r, j) -= f * m(row, j);
                }
            }
        }
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r) {
        if (!m(r, cols).is_zero()) {
            return std::nullopt;  // inconsistent
        }
    }
    std::vector<ExactScalar> x(cols);
    for (std::size_t c = 0; c < cols; ++c) {
        x[c] = m(c, cols);
    }
    return x;
}

}  // namespace slocc
