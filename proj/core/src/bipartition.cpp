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

#include "slocc/bipartition.h"

#include <algorithm>
#include <cctype>

#include "slocc/errors.h"
#include "slocc/pure_state.h"

namespace slocc {

Bipartition::Bipartition(int num_qubits, std::vector<int> row_bits) : num_qubits_(num_qubits), row_bits_(std::move(row_bits)) {
    if (num_qubits_ < 1) {
        throw DomainError("bipartition of fewer than one qubit");
    }
    std::vector<bool> used(num_qubits_ + 1, false);
    for (int b : row_bits_) {
        if (b < 1 || b > num_qubits_) {
            throw DomainError("qubit " + std::to_string(b) + " outside 1.." + std::to_string(num_qubits_));
        }
        if (used[b]) {
            throw DomainError("qubit " + std::to_string(b) + " listed twice");
        }
        used[b] = true;
    }
    for (int q = 1; q <= num_qubits_; ++q) {
        if (!used[q]) {
            column_bits_.push_back(q);
        }
    }
}

Bipartition::Bipartition(int num_qubits, std::vector<int> row_bits, std::vector<int> column_bits)
    : num_qubits_(num_qubits), row_bits_(std::move(row_bits)), column_bits_(std::move(column_bits)) {
}

Bipartition Bipartition::with_columns(int num_qubits, std::vector<int> row_bits, std::vector<int> column_bits) {
    Bipartition split(num_qubits, row_bits);
    std::vector<int> sorted = column_bits;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != split.column_bits_) {
        throw DomainError("column bits are not the complement of the row bits");
    }
    return Bipartition(num_qubits, std::move(row_bits), std::move(column_bits));
}

Bipartition Bipartition::canonical() const {
    std::vector<int> side = row_bits_;
    std::vector<int> other = column_bits_;
    std::sort(side.begin(), side.end());
    std::sort(other.begin(), other.end());
    bool take_other = other.size() < side.size() ||
                      (other.size() == side.size() && !other.empty() && other.front() == 1);
    if (take_other) {
        std::swap(side, other);
    }
    return Bipartition(num_qubits_, std::move(side), std::move(other));
}

bool Bipartition::is_canonical() const {
    return *this == canonical();
}

Bipartition Bipartition::swapped() const {
    return Bipartition(num_qubits_, column_bits_, row_bits_);
}

std::string Bipartition::name(const std::vector<std::string> &labels) const {
    std::string out;
    bool multi = std::any_of(labels.begin(), labels.end(), [](const std::string &l) { return l.size() != 1; });
    for (std::size_t k = 0; k < row_bits_.size(); ++k) {
        if (multi && k) {
            out += ",";
        }
        out += labels.at(row_bits_[k] - 1);
    }
    return out;
}

std::string Bipartition::name() const {
    return name(default_labels(num_qubits_));
}

std::strong_ordering operator<=>(const Bipartition &a, const Bipartition &b) {
    if (auto c = a.num_qubits_ <=> b.num_qubits_; c != 0) {
        return c;
    }
    if (auto c = a.row_bits_.size() <=> b.row_bits_.size(); c != 0) {
        return c;
    }
    if (auto c = a.row_bits_ <=> b.row_bits_; c != 0) {
        return c;
    }
    return a.column_bits_ <=> b.column_bits_;
}

std::vector<Bipartition> enumerate_bipartitions(int num_qubits) {
    if (num_qubits < 1 || num_qubits > 20) {
        throw DomainError("qubit count outside 1..20");
    }
    std::vector<Bipartition> out;
    for (int size = 1; 2 * size <= num_qubits; ++size) {
        // Subsets of the given size in lexicographic order.
        std::vector<int> pick(size);
        for (int k = 0; k < size; ++k) {
            pick[k] = k + 1;
        }
        while (true) {
            Bipartition split(num_qubits, pick);
            if (split.is_canonical()) {
                out.push_back(split);
            }
            int k = size - 1;
            while (k >= 0 && pick[k] == num_qubits - size + k + 1) {
                --k;
            }
            if (k < 0) {
                break;
            }
            ++pick[k];
            for (int t = k + 1; t < size; ++t) {
                pick[t] = pick[t - 1] + 1;
            }
        }
    }
    return out;
}

std::vector<int> parse_bits(const std::string &text, const std::vector<std::string> &labels) {
    std::vector<std::string> names;
    bool multi = std::any_of(labels.begin(), labels.end(), [](const std::string &l) { return l.size() != 1; });
    if (multi || text.find(',') != std::string::npos) {
        std::string cur;
        for (char c : text + ",") {
            if (c == ',') {
                if (cur.empty()) {
                    throw ParseError("empty qubit name in '" + text + "'");
                }
                names.push_back(cur);
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                cur += c;
            }
        }
    } else {
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                names.emplace_back(1, c);
            }
        }
    }
    std::vector<int> bits;
    for (const std::string &name : names) {
        auto it = std::find(labels.begin(), labels.end(), name);
        if (it == labels.end()) {
            throw ParseError("unknown qubit '" + name + "' in '" + text + "'");
        }
        int q = static_cast<int>(it - labels.begin()) + 1;
        if (std::find(bits.begin(), bits.end(), q) != bits.end()) {
            throw ParseError("qubit '" + name + "' listed twice in '" + text + "'");
        }
        bits.push_back(q);
    }
    return bits;
}

}  // namespace slocc
