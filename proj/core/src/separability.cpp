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

#include "slocc/separability.h"

#include <algorithm>
#include <cmath>

#include "bit_layout.h"
#include "slocc/bipartition.h"
#include "slocc/errors.h"

namespace slocc {

namespace {

constexpr const char *kEnDash = "–";

template <Scalar S>
int check_placements(std::span<const PlacedFactor<S>> factors) {
    int n = 0;
    for (const auto &f : factors) {
        if (static_cast<int>(f.positions.size()) != f.state.num_qubits()) {
            throw DomainError("factor placement lists the wrong number of positions");
        }
        n += f.state.num_qubits();
    }
    std::vector<bool> used(n + 1, false);
    for (const auto &f : factors) {
        for (int p : f.positions) {
            if (p < 1 || p > n || used[p]) {
                throw DomainError("factor placements overlap or leave gaps in 1.." + std::to_string(n));
            }
            used[p] = true;
        }
    }
    return n;
}

// Blocks = classes of qubits lying on the same side of every rank-1 split.
std::vector<std::vector<int>> blocks_from_splits(int n, const std::vector<Bipartition> &rank_one) {
    std::vector<std::vector<bool>> side(n + 1);
    for (const Bipartition &s : rank_one) {
        std::vector<bool> in(n + 1, false);
        for (int b : s.row_bits()) {
            in[b] = true;
        }
        for (int q = 1; q <= n; ++q) {
            side[q].push_back(in[q]);
        }
    }
    std::vector<std::vector<int>> blocks;
    std::vector<bool> placed(n + 1, false);
    for (int q = 1; q <= n; ++q) {
        if (placed[q]) {
            continue;
        }
        std::vector<int> block;
        for (int t = q; t <= n; ++t) {
            if (!placed[t] && side[t] == side[q]) {
                block.push_back(t);
                placed[t] = true;
            }
        }
        blocks.push_back(std::move(block));
    }
    return blocks;
}

}  // namespace

template <Scalar S>
PureState<S> tensor_all(std::span<const PlacedFactor<S>> factors) {
    int n = check_placements(factors);
    if (n > kMaxQubits) {
        throw DomainError("tensor product exceeds " + std::to_string(kMaxQubits) + " qubits");
    }
    std::vector<std::pair<std::uint64_t, S>> terms{{0, S(1)}};
    for (const auto &f : factors) {
        auto offsets = detail::placement_offsets(f.positions, n);
        std::vector<std::pair<std::uint64_t, S>> next;
        for (const auto &[index, amp] : terms) {
            for (std::size_t j = 0; j < f.state.dimension(); ++j) {
                if (!is_zero(f.state[j])) {
                    next.emplace_back(index | offsets[j], amp * f.state[j]);
                }
            }
        }
        terms = std::move(next);
    }
    std::vector<S> amps(std::size_t{1} << n);
    for (auto &[index, amp] : terms) {
        amps[index] = std::move(amp);
    }
    return PureState<S>(n, std::move(amps));
}

template ExactState tensor_all(std::span<const PlacedFactor<ExactScalar>>);
template FloatState tensor_all(std::span<const PlacedFactor<Complex>>);

template <Scalar S>
int recursive_rank(std::span<const PlacedFactor<S>> factors, std::span<const int> row_bits, RankMode mode) {
    int n = check_placements(factors);
    for (int b : row_bits) {
        if (b < 1 || b > n) {
            throw DomainError("row bit " + std::to_string(b) + " outside 1.." + std::to_string(n));
        }
    }
    int product = 1;
    for (const auto &f : factors) {
        std::vector<int> local;
        for (int b : row_bits) {
            auto it = std::find(f.positions.begin(), f.positions.end(), b);
            if (it != f.positions.end()) {
                local.push_back(static_cast<int>(it - f.positions.begin()) + 1);
            }
        }
        if (local.empty() || static_cast<int>(local.size()) == f.state.num_qubits()) {
            continue;
        }
        product *= rank(coefficient_matrix(f.state, std::span<const int>(local)), mode);
    }
    return product;
}

template int recursive_rank(std::span<const PlacedFactor<ExactScalar>>, std::span<const int>, RankMode);
template int recursive_rank(std::span<const PlacedFactor<Complex>>, std::span<const int>, RankMode);

template <Scalar S>
SplitTest<S> is_biseparable_across(const PureState<S> &state, std::span<const int> subset, RankMode mode) {
    int n = state.num_qubits();
    std::vector<int> bits(subset.begin(), subset.end());
    std::sort(bits.begin(), bits.end());
    if (bits.empty() || static_cast<int>(bits.size()) >= n) {
        throw DomainError("biseparability needs a proper nonempty subset of the qubits");
    }
    CoefficientMatrix<S> c = coefficient_matrix(state, Bipartition(n, bits));
    SplitTest<S> out;
    if (rank(c, mode) != 1) {
        return out;
    }
    out.biseparable = true;
    const Matrix<S> &m = c.matrix;
    std::size_t i0 = 0;
    std::size_t j0 = 0;
    if constexpr (kIsExact<S>) {
        bool found = false;
        for (std::size_t j = 0; j < m.cols() && !found; ++j) {
            for (std::size_t i = 0; i < m.rows(); ++i) {
                if (!m(i, j).is_zero()) {
                    i0 = i;
                    j0 = j;
                    found = true;
                    break;
                }
            }
        }
    } else {
        double best = -1.0;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (std::abs(m(i, j)) > best) {
                    best = std::abs(m(i, j));
                    i0 = i;
                    j0 = j;
                }
            }
        }
    }
    std::vector<S> left(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        left[i] = m(i, j0);
    }
    S pivot_inverse;
    if constexpr (kIsExact<S>) {
        pivot_inverse = m(i0, j0).inverse();
    } else {
        pivot_inverse = S(1.0) / m(i0, j0);
    }
    std::vector<S> right(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!is_zero(m(i0, j))) {
            right[j] = m(i0, j) * pivot_inverse;
        }
    }
    std::vector<std::string> left_labels;
    std::vector<std::string> right_labels;
    for (int b : c.bipartition.row_bits()) {
        left_labels.push_back(state.labels()[b - 1]);
    }
    for (int b : c.bipartition.column_bits()) {
        right_labels.push_back(state.labels()[b - 1]);
    }
    out.factors.emplace(PureState<S>(static_cast<int>(bits.size()), std::move(left), std::move(left_labels)),
                        PureState<S>(n - static_cast<int>(bits.size()), std::move(right), std::move(right_labels)));
    return out;
}

template SplitTest<ExactScalar> is_biseparable_across(const ExactState &, std::span<const int>, RankMode);
template SplitTest<Complex> is_biseparable_across(const FloatState &, std::span<const int>, RankMode);

SeparabilityPartition::SeparabilityPartition(int num_qubits, std::vector<std::vector<int>> blocks)
    : num_qubits_(num_qubits), blocks_(std::move(blocks)) {
    std::vector<bool> used(num_qubits_ + 1, false);
    int count = 0;
    for (auto &block : blocks_) {
        if (block.empty()) {
            throw DomainError("empty block in separability partition");
        }
        std::sort(block.begin(), block.end());
        for (int q : block) {
            if (q < 1 || q > num_qubits_ || used[q]) {
                throw DomainError("blocks do not partition 1.." + std::to_string(num_qubits_));
            }
            used[q] = true;
            ++count;
        }
    }
    if (count != num_qubits_) {
        throw DomainError("blocks do not cover 1.." + std::to_string(num_qubits_));
    }
    std::sort(blocks_.begin(), blocks_.end(), [](const auto &a, const auto &b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
}

std::string SeparabilityPartition::label(const std::vector<std::string> &labels) const {
    bool multi = std::any_of(labels.begin(), labels.end(), [](const std::string &l) { return l.size() != 1; });
    std::string out;
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
        if (k) {
            out += kEnDash;
        }
        for (std::size_t t = 0; t < blocks_[k].size(); ++t) {
            if (multi && t) {
                out += ",";
            }
            out += labels.at(blocks_[k][t] - 1);
        }
    }
    return out;
}

std::string SeparabilityPartition::label() const {
    return label(default_labels(num_qubits_));
}

SeparabilityPartition parse_family_label(const std::string &label, const std::vector<std::string> &labels) {
    std::vector<std::string> parts;
    std::string cur;
    for (std::size_t k = 0; k < label.size();) {
        if (label.compare(k, 3, kEnDash) == 0) {
            parts.push_back(cur);
            cur.clear();
            k += 3;
        } else if (label[k] == '-') {
            parts.push_back(cur);
            cur.clear();
            ++k;
        } else {
            cur += label[k++];
        }
    }
    parts.push_back(cur);
    std::vector<std::vector<int>> blocks;
    for (const std::string &part : parts) {
        if (part.empty()) {
            throw ParseError("empty block in family label '" + label + "'");
        }
        blocks.push_back(parse_bits(part, labels));
    }
    try {
        return SeparabilityPartition(static_cast<int>(labels.size()), std::move(blocks));
    } catch (const DomainError &e) {
        throw ParseError(std::string(e.what()) + " in family label '" + label + "'");
    }
}

template <Scalar S>
SeparabilityPartition separability_partition(const PureState<S> &state, RankMode mode) {
    int n = state.num_qubits();
    if (n == 1) {
        return SeparabilityPartition(1, {{1}});
    }
    std::vector<Bipartition> rank_one;
    for (const Bipartition &s : enumerate_bipartitions(n)) {
        if (rank(coefficient_matrix(state, s), mode) == 1) {
            rank_one.push_back(s);
        }
    }
    return SeparabilityPartition(n, blocks_from_splits(n, rank_one));
}

template SeparabilityPartition separability_partition(const ExactState &, RankMode);
template SeparabilityPartition separability_partition(const FloatState &, RankMode);

SeparabilityPartition separability_partition(const RankSignature &signature) {
    std::vector<Bipartition> rank_one;
    for (const auto &[split, r] : signature.entries()) {
        if (r == 1) {
            rank_one.push_back(split);
        }
    }
    return SeparabilityPartition(signature.num_qubits(), blocks_from_splits(signature.num_qubits(), rank_one));
}

template <Scalar S>
std::string degenerate_family(const PureState<S> &state, RankMode mode) {
    if (state.num_qubits() < 2) {
        throw DomainError("degenerate families need at least two qubits");
    }
    return separability_partition(state, mode).label(state.labels());
}

template std::string degenerate_family(const ExactState &, RankMode);
template std::string degenerate_family(const FloatState &, RankMode);

}  // namespace slocc
