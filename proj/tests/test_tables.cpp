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

#include "gtest/gtest.h"

#include "slocc/errors.h"
#include "slocc/tables.h"
#include "test_util.h"

using namespace slocc;

namespace {

TableReport quick(int id) {
    TableOptions options;
    options.samples = 4;
    options.scan = 300;
    options.seed = 3;
    return reproduce_table(id, testing_util::builtins(), options);
}

std::string failures(const TableReport &report) {
    std::string out;
    for (const auto *rows : {&report.rows, &report.checks}) {
        for (const TableRow &row : *rows) {
            if (row.verdict == RowVerdict::kMismatch) {
                out += row.label + ": expected " + row.expected + ", observed " + row.observed + " " + row.detail + "\n";
            }
        }
    }
    return out;
}

}  // namespace

TEST(tables, row_counts_and_verdicts) {
    const std::vector<std::pair<int, std::size_t>> shapes{{1, 5}, {2, 15}, {3, 7}, {4, 12}, {5, 12}, {6, 12}, {8, 7}};
    for (const auto &[id, rows] : shapes) {
        TableReport r = quick(id);
        EXPECT_EQ(r.rows.size(), rows) << "table " << id;
        EXPECT_TRUE(r.all_match()) << "table " << id << "\n" << failures(r);
        EXPECT_EQ(r.id, id);
        EXPECT_FALSE(r.columns.empty());
    }
}

TEST(tables, table7_skips_pending_families) {
    TableReport r = quick(7);
    EXPECT_TRUE(r.all_match()) << failures(r);
    int matched = 0, skipped = 0;
    for (const TableRow &row : r.rows) {
        if (row.verdict == RowVerdict::kSkipped) {
            EXPECT_EQ(row.observed, "skipped: no template");
            ++skipped;
        } else {
            ++matched;
        }
    }
    EXPECT_EQ(matched, 7);
    EXPECT_EQ(skipped, 11);
}

TEST(tables, registering_a_template_activates_rows) {
    FamilyRegistry registry = FamilyRegistry::with_builtins();
    std::vector<std::string> params{"a"};
    std::vector<AffineExpr> amps(16);
    for (int k : {0, 5, 10, 15}) {
        amps[k] = AffineExpr::parse("a", params);
    }
    amps[1] = AffineExpr(ExactScalar::imaginary_unit());
    amps[6] = AffineExpr(ExactScalar(1));
    amps[11] = AffineExpr(-ExactScalar::imaginary_unit());
    registry.register_family(FamilyTemplate("L_a4", params, amps));
    TableOptions options;
    options.samples = 3;
    options.scan = 50;
    TableReport r = reproduce_table(7, registry, options);
    EXPECT_EQ(r.count(RowVerdict::kSkipped), 9);
    EXPECT_TRUE(r.all_match()) << failures(r);
}

TEST(tables, table2_signatures_are_distinct) {
    TableReport r = quick(2);
    ASSERT_FALSE(r.checks.empty());
    EXPECT_EQ(r.checks.front().verdict, RowVerdict::kMatch);
}

TEST(tables, unknown_id) {
    EXPECT_THROW(reproduce_table(0, testing_util::builtins()), DomainError);
    EXPECT_THROW(reproduce_table(9, testing_util::builtins()), DomainError);
}

TEST(tables, family_representative) {
    SeparabilityPartition p = parse_family_label("A–BCD", default_labels(4));
    ExactState s = family_representative(p);
    EXPECT_EQ(s, testing_util::kets(4, {0, 7}));
    EXPECT_EQ(separability_partition(s, RankMode::exact()), p);
    EXPECT_EQ(verdict_name(RowVerdict::kMismatch), "mismatch");
}

TEST(tables, numeric_mode_agrees) {
    TableOptions options;
    options.samples = 3;
    options.scan = 0;
    options.mode = RankMode::numeric();
    TableReport r = reproduce_table(6, testing_util::builtins(), options);
    EXPECT_TRUE(r.all_match()) << failures(r);
}
