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

#include <array>
#include <random>

#include "gtest/gtest.h"

#include "slocc/errors.h"
#include "slocc/state_io.h"
#include "slocc/verify.h"
#include "test_util.h"

using namespace slocc;
using testing_util::ex;
using testing_util::exact_state;
using testing_util::kets;

namespace {

ExactState parse_exact(std::string_view text) {
    return std::get<ExactState>(parse_state(text));
}

}  // namespace

TEST(state_io, parses_bell_pair) {
    ExactState s = parse_exact(R"({n:2, amps:["1","0","0","1"]})");
    EXPECT_EQ(s, kets(2, {0, 3}));
    EXPECT_EQ(s.labels(), (std::vector<std::string>{"A", "B"}));
}

TEST(state_io, parses_exact_amplitude_parts) {
    ExactState s = parse_exact(R"({n:1, amps:["1/2 + 1/2*i*r2","0"]})");
    EXPECT_EQ(s[0].p(), Rational(1, 2));
    EXPECT_EQ(s[0].s(), Rational(1, 2));
    EXPECT_TRUE(s[0].q().is_zero());
    EXPECT_TRUE(s[1].is_zero());
}

TEST(state_io, quoted_keys_and_labels) {
    AnyState s = parse_state(R"({"n": 2, "amps": ["0", "1", "1", "0"], "labels": ["x", "y"]})");
    const ExactState &e = std::get<ExactState>(s);
    EXPECT_EQ(e.labels(), (std::vector<std::string>{"x", "y"}));
}

TEST(state_io, floating_amplitudes_promote_the_whole_state) {
    AnyState s = parse_state(R"({n:1, amps:["1", "0.5*i"]})");
    ASSERT_TRUE(std::holds_alternative<FloatState>(s));
    EXPECT_EQ(std::get<FloatState>(s)[1], Complex(0, 0.5));
}

TEST(state_io, zero_state_is_rejected) {
    EXPECT_THROW(parse_state(R"({n:2, amps:["0","0","0","0"]})"), ParseError);
}

TEST(state_io, errors_carry_positions) {
    try {
        parse_state("{n: 2,\n amps: [\"1\", \"0\" \"0\", \"1\"]}");
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_GT(e.column(), 1u);
    }
    EXPECT_THROW(parse_state(R"({n:2, amps:["1","0","0"]})"), ParseError);
    EXPECT_THROW(parse_state(R"({amps:["1","0"]})"), ParseError);
    EXPECT_THROW(parse_state(R"({n:1, amps:["1","x"]})"), ParseError);
    EXPECT_THROW(parse_state(R"({n:1, amps:["1","0"], labels:["A","B"]})"), ParseError);
}

TEST(state_io, render_round_trip) {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 5; ++n) {
        ExactState s = random_dense_exact_state(n, rng);
        EXPECT_EQ(parse_exact(render_state(s)), s);
    }
    FloatState f(1, {Complex(0.1, 1e-17), Complex(-2.5, 3)});
    EXPECT_EQ(std::get<FloatState>(parse_state(render_state(f))), f);
    ExactState labelled = kets(2, {1}).with_labels({"p", "q"});
    EXPECT_EQ(parse_exact(render_state(labelled)).labels(), labelled.labels());
}

TEST(pure_state, construction_invariants) {
    EXPECT_THROW(ExactState(2, std::vector<ExactScalar>(4)), DomainError);
    EXPECT_THROW(ExactState(2, std::vector<ExactScalar>(3, ExactScalar(1))), DomainError);
    EXPECT_THROW(ExactState(0, {ExactScalar(1)}), DomainError);
    EXPECT_THROW(FloatState(1, {Complex(std::nan(""), 0), Complex(1, 0)}), DomainError);
    EXPECT_EQ(ExactState::basis(3, 5), kets(3, {5}));
}

TEST(pure_state, qubit_one_is_most_significant) {
    EXPECT_EQ(qubit_bit(0b1000, 1, 4), 1u);
    EXPECT_EQ(qubit_bit(0b1000, 4, 4), 0u);
    EXPECT_EQ(qubit_bit(0b0001, 4, 4), 1u);
}

TEST(pure_state, default_labels) {
    EXPECT_EQ(default_labels(3), (std::vector<std::string>{"A", "B", "C"}));
    EXPECT_EQ(default_labels(27).front(), "Q1");
}

TEST(tensor, basis_kets) {
    ExactState zero = ExactState::basis(1, 0);
    std::array<int, 1> at{1};
    EXPECT_EQ(tensor(zero, zero, std::span<const int>(at)), ExactState::basis(2, 0));
}

TEST(tensor, places_left_factor) {
    // |phi>_B (x) EPR_AC with phi = |0> + 2|1>.
    ExactState phi = exact_state(1, {"1", "2"});
    ExactState epr = kets(2, {0, 3});
    std::array<int, 1> at{2};
    ExactState s = tensor(phi, epr, std::span<const int>(at));
    // |a b c> with a = c: indices 000, 010, 101, 111 weighted by phi(b).
    EXPECT_EQ(s, exact_state(3, {"1", "0", "2", "0", "0", "1", "0", "2"}));
    EXPECT_EQ(s.labels(), default_labels(3));
}

TEST(tensor, associativity) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
        ExactState x = random_dense_exact_state(1, rng);
        ExactState y = random_dense_exact_state(2, rng);
        ExactState z = random_dense_exact_state(1, rng);
        std::array<int, 1> p1{1};
        std::array<int, 2> p12{1, 2};
        std::array<int, 3> p123{1, 2, 3};
        ExactState left = tensor(tensor(x, y, std::span<const int>(p1)), z, std::span<const int>(p123));
        ExactState right = tensor(x, tensor(y, z, std::span<const int>(p12)), std::span<const int>(p1));
        EXPECT_EQ(left, right);
    }
}

TEST(tensor, mixed_kind_is_floating) {
    AnyState a = kets(1, {0});
    AnyState b = to_floating(kets(1, {1}));
    std::array<int, 1> at{1};
    AnyState out = tensor(a, b, std::span<const int>(at));
    ASSERT_TRUE(std::holds_alternative<FloatState>(out));
    EXPECT_EQ(std::get<FloatState>(out)[1], Complex(1, 0));
}

TEST(tensor, rejects_bad_placement) {
    ExactState a = kets(1, {0});
    std::array<int, 1> at{3};
    EXPECT_THROW(tensor(a, a, std::span<const int>(at)), DomainError);
}

TEST(permutation, swap_of_basis_ket) {
    EXPECT_EQ(permute_qubits(kets(2, {1}), QubitPermutation::transposition(2, 1, 2)), kets(2, {2}));
}

TEST(permutation, identity_is_bit_exact) {
    std::mt19937_64 rng(2);
    ExactState s = random_dense_exact_state(4, rng);
    EXPECT_EQ(permute_qubits(s, QubitPermutation::identity(4)), s);
}

TEST(permutation, labels_travel) {
    ExactState s = kets(3, {4});
    ExactState p = permute_qubits(s, QubitPermutation({3, 1, 2}));
    // qubit A (value 1) moves to position 3.
    EXPECT_EQ(p, kets(3, {1}));
    EXPECT_EQ(p.labels(), (std::vector<std::string>{"B", "C", "A"}));
}

TEST(permutation, cycles_compose_right_to_left) {
    QubitPermutation p = QubitPermutation::parse_cycles(4, "(1,2)(1,3)");
    // 1 -> 3 -> 3, 3 -> 1 -> 2, 2 -> 2 -> 1.
    EXPECT_EQ(p.image(), (std::vector<int>{3, 1, 2, 4}));
    EXPECT_EQ(p, QubitPermutation::transposition(4, 1, 2) * QubitPermutation::transposition(4, 1, 3));
    EXPECT_TRUE(QubitPermutation::parse_cycles(4, "I").is_identity());
    EXPECT_EQ(p * p.inverse(), QubitPermutation::identity(4));
    EXPECT_EQ(p.str(), "[3 1 2 4]");
    EXPECT_THROW(QubitPermutation({1, 1}), DomainError);
    EXPECT_THROW(QubitPermutation::parse_cycles(4, "(1,5)"), std::exception);
}

TEST(permutation, permuted_lprime_matches_direct_construction) {
    // (1,4) on L'(1,1): amplitude of w moves to the index with bits 1 and 4
    // exchanged.
    ExactState s = testing_util::lab3_prime(1, 1);
    ExactState p = permute_qubits(s, QubitPermutation::transposition(4, 1, 4));
    for (std::uint64_t w = 0; w < 16; ++w) {
        std::uint64_t b1 = (w >> 3) & 1, b4 = w & 1;
        std::uint64_t moved = (w & 0b0110) | (b4 << 3) | b1;
        EXPECT_EQ(p[moved], s[w]);
    }
}

TEST(scale, examples) {
    ExactState epr = kets(2, {0, 3});
    EXPECT_EQ(scale(epr, ExactScalar(2)), exact_state(2, {"2", "0", "0", "2"}));
    EXPECT_EQ(scale(epr, ExactScalar(1)), epr);
    EXPECT_THROW(scale(epr, ExactScalar(0)), DomainError);
}

TEST(proportional, exact_and_floating) {
    ExactState a = exact_state(2, {"1", "i", "0", "r2"});
    EXPECT_TRUE(proportional(a, scale(a, ex("3 - 2*i*r2"))));
    EXPECT_FALSE(proportional(a, exact_state(2, {"1", "i", "0", "1"})));
    FloatState f = to_floating(a);
    EXPECT_TRUE(proportional(f, scale(f, Complex(0.5, 2))));
    EXPECT_FALSE(proportional(f, to_floating(exact_state(2, {"1", "0", "0", "1"}))));
}
