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

#include "slocc/pure_state.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include "bit_layout.h"
#include "slocc/errors.h"

namespace slocc {

std::vector<std::string> default_labels(int num_qubits) {
    std::vector<std::string> labels;
    labels.reserve(num_qubits);
    for (int q = 0; q < num_qubits; ++q) {
        if (num_qubits <= 26) {
            labels.emplace_back(1, static_cast<char>('A' + q));
        } else {
            labels.push_back("Q" + std::to_string(q + 1));
        }
    }
    return labels;
}

template <Scalar S>
PureState<S>::PureState(int num_qubits, std::vector<S> amplitudes, std::vector<std::string> labels)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)), labels_(std::move(labels)) {
    if (num_qubits_ < 1 || num_qubits_ > kMaxQubits) {
        throw DomainError("qubit count " + std::to_string(num_qubits_) + " outside 1.." +
                          std::to_string(kMaxQubits));
    }
    std::size_t expected = std::size_t{1} << num_qubits_;
    if (amplitudes_.size() != expected) {
        throw DomainError("expected " + std::to_string(expected) + " amplitudes for n = " +
                          std::to_string(num_qubits_) + ", got " + std::to_string(amplitudes_.size()));
    }
    if (labels_.empty()) {
        labels_ = default_labels(num_qubits_);
    } else if (static_cast<int>(labels_.size()) != num_qubits_) {
        throw DomainError("expected " + std::to_string(num_qubits_) + " labels, got " +
                          std::to_string(labels_.size()));
    }
    if constexpr (!kIsExact<S>) {
        for (const Complex &z : amplitudes_) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                throw DomainError("amplitude is not finite");
            }
        }
    }
    if (std::all_of(amplitudes_.begin(), amplitudes_.end(), [](const S &a) { return is_zero(a); })) {
        throw DomainError("all amplitudes are zero: not a state");
    }
}

template <Scalar S>
PureState<S> PureState<S>::basis(int num_qubits, std::uint64_t index) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw DomainError("qubit count outside supported range");
    }
    std::vector<S> amps(std::size_t{1} << num_qubits);
    if (index >= amps.size()) {
        throw DomainError("basis index out of range");
    }
    amps[index] = S(1);
    return PureState(num_qubits, std::move(amps));
}

template class PureState<ExactScalar>;
template class PureState<Complex>;

FloatState to_floating(const ExactState &state) {
    std::vector<Complex> amps;
    amps.reserve(state.dimension());
    for (const ExactScalar &a : state.amplitudes()) {
        amps.push_back(a.to_complex());
    }
    return FloatState(state.num_qubits(), std::move(amps), state.labels());
}

FloatState to_floating(const AnyState &state) {
    if (const auto *exact = std::get_if<ExactState>(&state)) {
        return to_floating(*exact);
    }
    return std::get<FloatState>(state);
}

QubitPermutation::QubitPermutation(std::vector<int> image) : image_(std::move(image)) {
    int n = static_cast<int>(image_.size());
    std::vector<bool> seen(n + 1, false);
    for (int v : image_) {
        if (v < 1 || v > n || seen[v]) {
            throw DomainError("permutation image is not a bijection on 1.." + std::to_string(n));
        }
        seen[v] = true;
    }
}

QubitPermutation QubitPermutation::identity(int num_qubits) {
    std::vector<int> image(num_qubits);
    std::iota(image.begin(), image.end(), 1);
    return QubitPermutation(std::move(image));
}

QubitPermutation QubitPermutation::transposition(int num_qubits, int i, int j) {
    if (i < 1 || j < 1 || i > num_qubits || j > num_qubits) {
        throw DomainError("transposition outside 1.." + std::to_string(num_qubits));
    }
    QubitPermutation p = identity(num_qubits);
    std::swap(p.image_[i - 1], p.image_[j - 1]);
    return p;
}

QubitPermutation QubitPermutation::parse_cycles(int num_qubits, std::string_view text) {
    QubitPermutation result = identity(num_qubits);
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    };
    skip();
    if (pos < text.size() && text[pos] == 'I') {
        ++pos;
        skip();
        if (pos != text.size()) {
            throw ParseError("unexpected text after identity in '" + std::string(text) + "'");
        }
        return result;
    }
    while (true) {
        skip();
        if (pos == text.size()) {
            break;
        }
        if (text[pos] != '(') {
            throw ParseError("expected '(' in permutation '" + std::string(text) + "'");
        }
        ++pos;
        std::vector<int> cycle;
        while (true) {
            skip();
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                ++pos;
            }
            if (start == pos) {
                throw ParseError("expected a qubit number in '" + std::string(text) + "'");
            }
            int q = std::stoi(std::string(text.substr(start, pos - start)));
            if (q < 1 || q > num_qubits || std::find(cycle.begin(), cycle.end(), q) != cycle.end()) {
                throw ParseError("bad qubit " + std::to_string(q) + " in cycle of '" + std::string(text) + "'");
            }
            cycle.push_back(q);
            skip();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            throw ParseError("expected ',' or ')' in '" + std::string(text) + "'");
        }
        QubitPermutation c = identity(num_qubits);
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            c.image_[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
        }
        result = result * c;
    }
    return result;
}

bool QubitPermutation::is_identity() const {
    for (std::size_t k = 0; k < image_.size(); ++k) {
        if (image_[k] != static_cast<int>(k) + 1) {
            return false;
        }
    }
    return true;
}

QubitPermutation QubitPermutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (std::size_t k = 0; k < image_.size(); ++k) {
        inv[image_[k] - 1] = static_cast<int>(k) + 1;
    }
    return QubitPermutation(std::move(inv));
}

QubitPermutation operator*(const QubitPermutation &a, const QubitPermutation &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DomainError("composing permutations of different sizes");
    }
    std::vector<int> image(a.image_.size());
    for (std::size_t k = 0; k < image.size(); ++k) {
        image[k] = a(b.image_[k]);
    }
    return QubitPermutation(std::move(image));
}

std::string QubitPermutation::str() const {
    std::string out = "[";
    for (std::size_t k = 0; k < image_.size(); ++k) {
        if (k) {
            out += " ";
        }
        out += std::to_string(image_[k]);
    }
    return out + "]";
}

using detail::placement_offsets;

template <Scalar S>
PureState<S> tensor(const PureState<S> &left, const PureState<S> &right, std::span<const int> left_positions) {
    int nl = left.num_qubits();
    int n = nl + right.num_qubits();
    if (static_cast<int>(left_positions.size()) != nl) {
        throw DomainError("placement lists " + std::to_string(left_positions.size()) + " positions for a " +
                          std::to_string(nl) + "-qubit factor");
    }
    if (n > kMaxQubits) {
        throw DomainError("tensor product exceeds " + std::to_string(kMaxQubits) + " qubits");
    }
    std::vector<bool> used(n + 1, false);
    for (int p : left_positions) {
        if (p < 1 || p > n || used[p]) {
            throw DomainError("placement is not injective into 1.." + std::to_string(n));
        }
        used[p] = true;
    }
    std::vector<int> lpos(left_positions.begin(), left_positions.end());
    std::vector<int> rpos;
    for (int p = 1; p <= n; ++p) {
        if (!used[p]) {
            rpos.push_back(p);
        }
    }
    auto loff = placement_offsets(lpos, n);
    auto roff = placement_offsets(rpos, n);
    std::vector<S> amps(std::size_t{1} << n);
    for (std::size_t i = 0; i < left.dimension(); ++i) {
        if (is_zero(left[i])) {
            continue;
        }
        for (std::size_t j = 0; j < right.dimension(); ++j) {
            if (!is_zero(right[j])) {
                amps[loff[i] | roff[j]] = left[i] * right[j];
            }
        }
    }
    return PureState<S>(n, std::move(amps));
}

template ExactState tensor(const ExactState &, const ExactState &, std::span<const int>);
template FloatState tensor(const FloatState &, const FloatState &, std::span<const int>);

AnyState tensor(const AnyState &left, const AnyState &right, std::span<const int> left_positions) {
    const auto *le = std::get_if<ExactState>(&left);
    const auto *re = std::get_if<ExactState>(&right);
    if (le && re) {
        return tensor(*le, *re, left_positions);
    }
    return tensor(to_floating(left), to_floating(right), left_positions);
}

template <Scalar S>
PureState<S> permute_qubits(const PureState<S> &state, const QubitPermutation &perm) {
    int n = state.num_qubits();
    if (perm.num_qubits() != n) {
        throw DomainError("permutation acts on " + std::to_string(perm.num_qubits()) + " qubits, state has " +
                          std::to_string(n));
    }
    std::vector<int> positions(perm.image());
    auto offsets = placement_offsets(positions, n);
    std::vector<S> amps(state.dimension());
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        amps[offsets[i]] = state[i];
    }
    std::vector<std::string> labels(n);
    for (int q = 1; q <= n; ++q) {
        labels[perm(q) - 1] = state.labels()[q - 1];
    }
    return PureState<S>(n, std::move(amps), std::move(labels));
}

template ExactState permute_qubits(const ExactState &, const QubitPermutation &);
template FloatState permute_qubits(const FloatState &, const QubitPermutation &);

template <Scalar S>
PureState<S> scale(const PureState<S> &state, const S &factor) {
    if (is_zero(factor)) {
        throw DomainError("scale factor must be nonzero");
    }
    std::vector<S> amps;
    amps.reserve(state.dimension());
    for (const S &a : state.amplitudes()) {
        amps.push_back(a * factor);
    }
    return PureState<S>(state.num_qubits(), std::move(amps), state.labels());
}

template ExactState scale(const ExactState &, const ExactScalar &);
template FloatState scale(const FloatState &, const Complex &);

bool proportional(const ExactState &a, const ExactState &b) {
    if (a.num_qubits() != b.num_qubits()) {
        return false;
    }
    std::size_t k = 0;
    while (a[k].is_zero()) {
        ++k;
    }
    if (b[k].is_zero()) {
        return false;
    }
    ExactScalar c = a[k] / b[k];
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        if (a[i].is_zero() != b[i].is_zero()) {
            return false;
        }
        if (!a[i].is_zero() && a[i] != c * b[i]) {
            return false;
        }
    }
    return true;
}

bool proportional(const FloatState &a, const FloatState &b, double tolerance) {
    if (a.num_qubits() != b.num_qubits()) {
        return false;
    }
    std::size_t k = 0;
    double best = 0.0;
    double amax = 0.0;
    for (std::size_t i = 0; i < b.dimension(); ++i) {
        if (std::abs(b[i]) > best) {
            best = std::abs(b[i]);
            k = i;
        }
        amax = std::max(amax, std::abs(a[i]));
    }
    Complex c = a[k] / b[k];
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        if (std::abs(a[i] - c * b[i]) > tolerance * amax) {
            return false;
        }
    }
    return true;
}

}  // namespace slocc
