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

#include <string>
#include <vector>

#include "slocc/family.h"
#include "slocc/pure_state.h"
#include "slocc/scalar_text.h"

namespace testing_util {

inline slocc::ExactScalar ex(const std::string &text) {
    return std::get<slocc::ExactScalar>(slocc::parse_scalar(text));
}

inline slocc::ExactState exact_state(int n, const std::vector<std::string> &amps) {
    std::vector<slocc::ExactScalar> v;
    for (const std::string &a : amps) {
        v.push_back(ex(a));
    }
    return slocc::ExactState(n, v);
}

// Sum of the given basis kets with unit amplitudes.
inline slocc::ExactState kets(int n, const std::vector<int> &indices) {
    std::vector<slocc::ExactScalar> v(std::size_t{1} << n);
    for (int i : indices) {
        v[i] += slocc::ExactScalar(1);
    }
    return slocc::ExactState(n, v);
}

inline const slocc::FamilyRegistry &builtins() {
    static const slocc::FamilyRegistry registry = slocc::FamilyRegistry::with_builtins();
    return registry;
}

inline slocc::ExactState lab3(long a, long b) {
    return builtins().instantiate("L_ab3", {{"a", slocc::ExactScalar(a)}, {"b", slocc::ExactScalar(b)}});
}

inline slocc::ExactState lab3_prime(long a, long b) {
    return builtins().instantiate("L_ab3'", {{"a", slocc::ExactScalar(a)}, {"b", slocc::ExactScalar(b)}});
}

}  // namespace testing_util
