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

#include <random>

#include "benchmark/benchmark.h"

#include "slocc/family.h"
#include "slocc/invariants.h"
#include "slocc/local_ops.h"
#include "slocc/separability.h"
#include "slocc/tables.h"
#include "slocc/verify.h"

using namespace slocc;

namespace {

ExactState dense(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_dense_exact_state(n, rng);
}

void BM_ExactRankHalfSplit(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    ExactState s = dense(n, 1);
    std::vector<int> rows;
    for (int q = 1; q <= n / 2; ++q) {
        rows.push_back(q);
    }
    auto c = coefficient_matrix(s, std::span<const int>(rows));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank(c, RankMode::exact()));
    }
}
BENCHMARK(BM_ExactRankHalfSplit)->DenseRange(4, 8, 2);

void BM_NumericRankHalfSplit(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    FloatState s = to_floating(dense(n, 2));
    std::vector<int> rows;
    for (int q = 1; q <= n / 2; ++q) {
        rows.push_back(q);
    }
    auto c = coefficient_matrix(s, std::span<const int>(rows));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank(c, RankMode::numeric()));
    }
}
BENCHMARK(BM_NumericRankHalfSplit)->DenseRange(4, 12, 4);

void BM_RankSignatureFourQubits(benchmark::State &state) {
    ExactState s = dense(4, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank_signature(s, RankMode::exact()));
    }
}
BENCHMARK(BM_RankSignatureFourQubits);

void BM_SeparabilityPartition(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(4);
    ExactState s = random_exact_state(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(separability_partition(s, RankMode::exact()));
    }
}
BENCHMARK(BM_SeparabilityPartition)->DenseRange(3, 6);

void BM_ApplyLocalFloating(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    FloatState s = to_floating(dense(n, 5));
    FloatOperatorSet ops = random_floating_local_ops(n, 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_local(s, ops));
    }
}
BENCHMARK(BM_ApplyLocalFloating)->Arg(8)->Arg(14)->Arg(18);

void BM_Dxy(benchmark::State &state) {
    ExactState s = dense(4, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(d_xy(s));
    }
}
BENCHMARK(BM_Dxy);

void BM_ClassifySubfamily(benchmark::State &state) {
    static const FamilyRegistry registry = FamilyRegistry::with_builtins();
    Bindings b{{"a", ExactScalar(1)}, {"b", ExactScalar(5)}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(registry.classify_subfamily("L_ab3'", b));
    }
}
BENCHMARK(BM_ClassifySubfamily);

void BM_PermutationScan(benchmark::State &state) {
    static const FamilyRegistry registry = FamilyRegistry::with_builtins();
    ExactState s = registry.instantiate("L_ab3'", {{"a", ExactScalar(1)}, {"b", ExactScalar(5)}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(permutation_scan(s));
    }
}
BENCHMARK(BM_PermutationScan)->Unit(benchmark::kMillisecond);

void BM_ReproduceTable2(benchmark::State &state) {
    static const FamilyRegistry registry = FamilyRegistry::with_builtins();
    for (auto _ : state) {
        benchmark::DoNotOptimize(reproduce_table(2, registry));
    }
}
BENCHMARK(BM_ReproduceTable2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
