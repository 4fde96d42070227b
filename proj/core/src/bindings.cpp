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

#include "slocc/bindings.h"

#include "slocc/errors.h"

namespace slocc {

const ExactScalar &binding(const Bindings &bindings, const std::string &name) {
    auto it = bindings.find(name);
    if (it == bindings.end()) {
        throw DomainError("no value bound to parameter '" + name + "'");
    }
    return it->second;
}

std::string render_bindings(const Bindings &bindings) {
    std::string out;
    for (const auto &[name, value] : bindings) {
        if (!out.empty()) {
            out += ", ";
        }
        out += name + "=" + value.str();
    }
    return out;
}

}  // namespace slocc
