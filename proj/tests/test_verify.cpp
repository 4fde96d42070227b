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
#include "slocc/separability.h"
#include "slocc/verify.h"

using namespace slocc;

TEST(verify, every_check_passes) {
    ASSERT_EQ(check_names().size(), 7u);
    for (const std::string &name : check_names()) {
        CheckResult r = run_check(name, 25, 11);
        EXPECT_TRUE(r.ok()) << name << ": " << r.counterexample;
        EXPECT_EQ(r.trials, 25);
        EXPECT_EQ(r.name, name);
        EXPECT_EQ(r.seed, 11u);
    }
}

TEST(verify, deterministic) {
    CheckResult a = run_check("rank-invariance", 10, 7);
    CheckResult b = run_check("rank-invariance", 10, 7);
    EXPECT_EQ(a.passed, b.passed);
    EXPECT_EQ(a.counterexample, b.counterexample);
}

TEST(verify, bad_arguments) {
    EXPECT_THROW(run_check("nope", 1, 1), DomainError);
    EXPECT_THROW(run_check("kron-rank", 0, 1), DomainError);
}

TEST(verify, random_states) {
    std::mt19937_64 rng(1), again(1);
    for (int n = 1; n <= 6; ++n) {
        ExactState s = random_exact_state(n, rng);
        EXPECT_EQ(s.num_qubits(), n);
        EXPECT_EQ(s, random_exact_state(n, again));
    }
    // Block structure shows up: some draws are not genuinely entangled.
    int separable = 0;
    for (int t = 0; t < 40; ++t) {
        separable += !separability_partition(random_exact_state(4, rng), RankMode::exact()).is_genuinely_entangled();
    }
    EXPECT_GT(separable, 0);
}
