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

#include <string_view>

// Data files from core/data compiled into the library.
namespace slocc::fixtures {

std::string_view builtin_families();
std::string_view table1();
std::string_view table2();
std::string_view table3();
std::string_view table4();
std::string_view table5();
std::string_view table6();
std::string_view table7();
std::string_view table8();

}  // namespace slocc::fixtures
