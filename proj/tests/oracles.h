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

// Brute-force reference implementations used to cross-check the library.
// They follow the definitions directly and share no code with it beyond the
// scalar types.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "slocc/local_ops.h"
#include "slocc/matrix.h"
#include "slocc/pure_state.h"

namespace oracle {

using slocc::Matrix;
using slocc::PureState;

inline int bit_of(std::uint64_t index, int qubit, int n) {
    return static_cast<int>((index >> (n - qubit)) & 1U);
}

// C(u, v) = amplitude whose row qubits spell u and column qubits spell v.
template <class S>
Matrix<S> coefficient_matrix(const PureState<S> &state, const std::vector<int> &rows) {
    const int n = state.num_qubits();
    std::vector<int> cols;
    for (int q = 1; q <= n; ++q) {
        if (std::find(rows.begin(), rows.end(), q) == rows.end()) {
            cols.push_back(q);
        }
    }
    Matrix<S> m(std::size_t{1} << rows.size(), std::size_t{1} << cols.size());
    for (std::uint64_t w = 0; w < state.dimension(); ++w) {
        std::size_t u = 0, v = 0;
        for (int q : rows) {
            u = 2 * u + bit_of(w, q, n);
        }
        for (int q : cols) {
            v = 2 * v + bit_of(w, q, n);
        }
        m(u, v) = state[w];
    }
    return m;
}

// Leibniz expansion over all permutations.
template <class S>
S leibniz_determinant(const Matrix<S> &m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    S total{};
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                inversions += p[i] > p[j];
            }
        }
        S term(1);
        for (std::size_t i = 0; i < n; ++i) {
            term = term * m(i, p[i]);
        }
        total = inversions % 2 ? total - term : total + term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

// Largest k with a nonzero k x k minor; exponential, fine for 4 x 8 and below.
inline int minor_rank(const Matrix<slocc::ExactScalar> &m) {
    const std::size_t r = m.rows(), c = m.cols();
    for (std::size_t k = std::min(r, c); k > 0; --k) {
        std::vector<bool> rs(r, false), cs(c, false);
        std::fill(rs.begin(), rs.begin() + k, true);
        do {
            std::fill(cs.begin(), cs.end(), false);
            std::fill(cs.begin(), cs.begin() + k, true);
            do {
                Matrix<slocc::ExactScalar> sub(k, k);
                std::size_t a = 0;
                for (std::size_t i = 0; i < r; ++i) {
                    if (!rs[i]) {
                        continue;
                    }
                    std::size_t b = 0;
                    for (std::size_t j = 0; j < c; ++j) {
                        if (cs[j]) {
                            sub(a, b++) = m(i, j);
                        }
                    }
                    ++a;
                }
                if (!leibniz_determinant(sub).is_zero()) {
                    return static_cast<int>(k);
                }
            } while (std::prev_permutation(cs.begin(), cs.end()));
        } while (std::prev_permutation(rs.begin(), rs.end()));
    }
    return 0;
}

// rho_kept(i, j) = sum over traced indices t of psi(i, t) conj(psi(j, t)),
// summing over the full basis.
template <class S>
Matrix<S> partial_trace(const PureState<S> &state, const std::vector<int> &kept) {
    const int n = state.num_qubits();
    const std::size_t dim = std::size_t{1} << kept.size();
    Matrix<S> rho(dim, dim);
    auto kept_index = [&](std::uint64_t w) {
        std::size_t u = 0;
        for (int q : kept) {
            u = 2 * u + bit_of(w, q, n);
        }
        return u;
    };
    auto traced_equal = [&](std::uint64_t w, std::uint64_t x) {
        for (int q = 1; q <= n; ++q) {
            if (std::find(kept.begin(), kept.end(), q) == kept.end() && bit_of(w, q, n) != bit_of(x, q, n)) {
                return false;
            }
        }
        return true;
    };
    for (std::uint64_t w = 0; w < state.dimension(); ++w) {
        for (std::uint64_t x = 0; x < state.dimension(); ++x) {
            if (traced_equal(w, x)) {
                rho(kept_index(w), kept_index(x)) += state[w] * slocc::conjugate(state[x]);
            }
        }
    }
    return rho;
}

// Full 2^n x 2^n operator A_1 (x) ... (x) A_n applied as a dense product.
template <class S>
PureState<S> apply_full(const PureState<S> &state, const slocc::LocalOperatorSet<S> &ops) {
    const int n = state.num_qubits();
    std::vector<S> out(state.dimension());
    for (std::uint64_t w = 0; w < state.dimension(); ++w) {
        for (std::uint64_t x = 0; x < state.dimension(); ++x) {
            S c(1);
            for (int q = 1; q <= n; ++q) {
                c = c * ops.on(q)(bit_of(w, q, n), bit_of(x, q, n));
            }
            out[w] += c * state[x];
        }
    }
    return PureState<S>(n, out);
}

}  // namespace oracle
