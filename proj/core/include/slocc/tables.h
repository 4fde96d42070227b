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

#include <cstdint>
#include <string>
#include <vector>

#include "slocc/coefficient_matrix.h"
#include "slocc/family.h"
#include "slocc/separability.h"

namespace slocc {

enum class RowVerdict { kMatch, kMismatch, kSkipped };

std::string verdict_name(RowVerdict verdict);

struct TableRow {
    /// Family or subfamily shown in the first column, e.g. "B–AC" or "434".
    std::string label;
    std::string description;
    std::string expected;
    std::string observed;
    RowVerdict verdict = RowVerdict::kMatch;
    /// Samples checked for the row (1 for fixed representatives).
    int samples = 0;
    std::string detail;
};

struct TableReport {
    int id = 0;
    std::string title;
    std::vector<std::string> columns;
    std::vector<TableRow> rows;
    /// Whole-table checks that are not rows of the printed table, such as
    /// signature distinctness or completeness scans.
    std::vector<TableRow> checks;

    /// Counts over rows and checks.
    int count(RowVerdict verdict) const;
    bool all_match() const {
        return count(RowVerdict::kMismatch) == 0;
    }
};

struct TableOptions {
    /// Samples per predicate row (Tables 3-8).
    int samples = 20;
    /// Random parameter tuples for the completeness scans (Tables 5-8).
    int scan = 10000;
    std::uint64_t seed = 1;
    RankMode mode = RankMode::exact();
};

/// Recomputes table `id` (1..8) against its stored fixture. Throws
/// DomainError for other ids.
TableReport reproduce_table(int id, const FamilyRegistry &registry, const TableOptions &options = {});

/// Representative of a degenerate family label: |0> on singleton blocks and
/// GHZ-type |0..0> + |1..1> on larger blocks.
ExactState family_representative(const SeparabilityPartition &partition);

}  // namespace slocc
