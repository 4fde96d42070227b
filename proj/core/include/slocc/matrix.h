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

#pragma once

#include <cstddef>
#include <vector>

#include "slocc/errors.h"
#include "slocc/scalar.h"

namespace slocc {

/// Dense row-major matrix over one of the supported scalar fields.
template <Scalar S>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    }
    Matrix(std::size_t rows, std::size_t cols, std::vector<S> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) {
            throw DomainError("matrix data size does not match its shape");
        }
    }

    static Matrix identity(std::size_t size) {
        Matrix m(size, size);
        for (std::size_t k = 0; k < size; ++k) {
            m(k, k) = S(1);
        }
        return m;
    }

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }

    S &operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    const S &operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    const std::vector<S> &data() const {
        return data_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                t(c, r) = (*this)(r, c);
            }
        }
        return t;
    }

    /// Conjugate transpose.
    Matrix adjoint() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                t(c, r) = conjugate((*this)(r, c));
            }
        }
        return t;
    }

    friend bool operator==(const Matrix &, const Matrix &) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<S> data_;
};

template <Scalar S>
Matrix<S> operator*(const Matrix<S> &a, const Matrix<S> &b) {
    if (a.cols() != b.rows()) {
        throw DomainError("matrix product: inner dimensions differ");
    }
    Matrix<S> out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const S &lhs = a(r, k);
            if (is_zero(lhs)) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols(); ++c) {
                if (!is_zero(b(k, c))) {
                    out(r, c) += lhs * b(k, c);
                }
            }
        }
    }
    return out;
}

/// Kronecker product a (x) b.
template <Scalar S>
Matrix<S> kron(const Matrix<S> &a, const Matrix<S> &b) {
    Matrix<S> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            if (is_zero(a(ar, ac))) {
                continue;
            }
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = a(ar, ac) * b(br, bc);
                }
            }
        }
    }
    return out;
}

}  // namespace slocc
