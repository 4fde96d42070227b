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

#include <map>
#include <string>

#include "slocc/exact_scalar.h"

namespace slocc {

/// Concrete values for the named parameters of a family template.
using Bindings = std::map<std::string, ExactScalar>;

/// Value bound to `name`; throws DomainError when it is missing.
const ExactScalar &binding(const Bindings &bindings, const std::string &name);

/// "a=1, b=-3" in key order.
std::string render_bindings(const Bindings &bindings);

}  // namespace slocc
