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

#include "slocc/verify.h"

#include <algorithm>
#include <fmt/format.h>
#include <functional>
#include <map>

#include "slocc/coefficient_matrix.h"
#include "slocc/errors.h"
#include "slocc/family.h"
#include "slocc/invariants.h"
#include "slocc/local_ops.h"
#include "slocc/separability.h"
#include "slocc/state_io.h"

namespace slocc {

namespace {

ExactScalar random_amplitude(std::mt19937_64 &rng, bool with_sqrt2) {
    std::uniform_int_distribution<long> grid(-3, 3);
    long p = grid(rng);
    long q = grid(rng);
    long r = 0;
    long s = 0;
    if (with_sqrt2 && std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
        r = grid(rng);
        s = grid(rng);
    }
    return ExactScalar(Rational(p), Rational(q), Rational(r), Rational(s));
}

ExactState random_block(int size, std::mt19937_64 &rng) {
    std::vector<ExactScalar> amps(std::size_t{1} << size);
    while (true) {
        for (ExactScalar &x : amps) {
            x = std::uniform_int_distribution<int>(0, 2)(rng) == 0 ? ExactScalar(0) : random_amplitude(rng, true);
        }
        if (std::any_of(amps.begin(), amps.end(), [](const ExactScalar &x) { return !x.is_zero(); })) {
            return ExactState(size, amps);
        }
    }
}

// Random blocks with random positions.
std::vector<PlacedFactor<ExactScalar>> random_factors(int n, std::mt19937_64 &rng) {
    std::vector<int> positions(n);
    for (int k = 0; k < n; ++k) {
        positions[k] = k + 1;
    }
    std::shuffle(positions.begin(), positions.end(), rng);
    std::vector<PlacedFactor<ExactScalar>> factors;
    int start = 0;
    while (start < n) {
        int size = std::uniform_int_distribution<int>(1, n - start)(rng);
        std::vector<int> where(positions.begin() + start, positions.begin() + start + size);
        factors.push_back({random_block(size, rng), where});
        start += size;
    }
    return factors;
}

ExactOperatorSet random_ops(int n, std::mt19937_64 &rng) {
    return random_exact_local_ops(n, rng());
}

Rational random_rational(std::mt19937_64 &rng, bool nonzero) {
    while (true) {
        Rational v(std::uniform_int_distribution<long>(-7, 7)(rng), std::uniform_int_distribution<long>(1, 3)(rng));
        if (!nonzero || !v.is_zero()) {
            return v;
        }
    }
}

const FamilyRegistry &builtins() {
    static const FamilyRegistry registry = FamilyRegistry::with_builtins();
    return registry;
}

ExactState family_state(const char *name, const Rational &a, const Rational &b) {
    return builtins().instantiate(name, {{"a", ExactScalar(a)}, {"b", ExactScalar(b)}});
}

// A trial returns an empty string on success or a description of the failure.
using Trial = std::function<std::string(std::mt19937_64 &, int)>;

std::string rank_invariance(std::mt19937_64 &rng, int t) {
    int n = 2 + t % 4;
    ExactState state = random_exact_state(n, rng);
    ExactOperatorSet ops = random_ops(n, rng);
    RankSignature before = rank_signature(state, RankMode::exact());
    RankSignature after = rank_signature(apply_local(state, ops), RankMode::exact());
    if (before == after) {
        return {};
    }
    return "signature changed for state " + render_state(state) + " under " + render_operator_file(ops);
}

std::string matrix_transform(std::mt19937_64 &rng, int t) {
    int n = 2 + t % 4;
    ExactState state = random_exact_state(n, rng);
    ExactOperatorSet ops = random_ops(n, rng);
    std::vector<int> bits(n);
    for (int k = 0; k < n; ++k) {
        bits[k] = k + 1;
    }
    std::shuffle(bits.begin(), bits.end(), rng);
    bits.resize(std::uniform_int_distribution<int>(0, n)(rng));
    CoefficientMatrix<ExactScalar> c = coefficient_matrix(state, bits);
    CoefficientMatrix<ExactScalar> via_matrix = transform_coefficient_matrix(c, ops);
    CoefficientMatrix<ExactScalar> via_state = coefficient_matrix(apply_local(state, ops), bits);
    if (via_matrix.matrix == via_state.matrix) {
        return {};
    }
    return fmt::format("row bits [{}] of {} disagree", fmt::join(bits, ","), render_state(state));
}

std::string dxy_covariance(std::mt19937_64 &rng, int) {
    ExactState state = random_dense_exact_state(4, rng);
    ExactOperatorSet ops = random_ops(4, rng);
    ExactScalar lhs = d_xy(apply_local(state, ops));
    ExactScalar rhs = d_xy(state) * dxy_covariance_factor(ops);
    if (lhs == rhs) {
        return {};
    }
    return "D_xy(A psi) = " + lhs.str() + " but D_xy(psi) det^3 = " + rhs.str() + " for " + render_state(state);
}

std::string kron_rank(std::mt19937_64 &rng, int t) {
    int n = 2 + t % 5;
    std::vector<PlacedFactor<ExactScalar>> factors = random_factors(n, rng);
    std::span<const PlacedFactor<ExactScalar>> view(factors);
    ExactState state = tensor_all(view);
    for (const Bipartition &split : enumerate_bipartitions(n)) {
        int direct = rank(coefficient_matrix(state, split), RankMode::exact());
        int recursive = recursive_rank(view, std::span<const int>(split.row_bits()), RankMode::exact());
        if (direct != recursive) {
            return fmt::format("split {} of {}: direct {} recursive {}", split.name(), render_state(state), direct,
                               recursive);
        }
    }
    return {};
}

std::string density_det(std::mt19937_64 &rng, int t) {
    ExactState state = t % 2 ? random_dense_exact_state(4, rng) : random_exact_state(4, rng);
    FloatState floating = to_floating(state);
    for (std::vector<int> bits : {std::vector<int>{1, 2}, std::vector<int>{1, 3}, std::vector<int>{1, 4}}) {
        Matrix<ExactScalar> rho = reduced_density(state, bits);
        Matrix<ExactScalar> c = coefficient_matrix(state, bits).matrix;
        if (!(rho == c * c.adjoint())) {
            return "rho != C C^dagger for " + render_state(state);
        }
        ExactScalar det_c = det_coeff(state, bits);
        if (!(determinant(rho) == det_c * det_c.conj())) {
            return fmt::format("det rho != |det C|^2 on [{}] for {}", fmt::join(bits, ","), render_state(state));
        }
        Complex det_rho_f = determinant(reduced_density(floating, bits));
        Complex det_c_f = det_coeff(floating, bits);
        double expected = std::norm(det_c_f);
        double scale = std::max({1.0, std::abs(det_rho_f), expected});
        if (std::abs(det_rho_f - expected) > 1e-9 * scale) {
            return fmt::format("floating det rho {} vs |det C|^2 {} for {}", std::abs(det_rho_f), expected,
                               render_state(state));
        }
    }
    return {};
}

std::string semi_invariants(std::mt19937_64 &rng, int) {
    Rational a = random_rational(rng, false);
    Rational b = random_rational(rng, false);
    ExactOperatorSet ops = random_ops(4, rng);
    ExactScalar ea(a), eb(b);
    std::string where = "a=" + a.str() + ", b=" + b.str() + ", ops " + render_operator_file(ops);
    ExactState lab3 = apply_local(family_state("L_ab3", a, b), ops);
    if (!(f1(lab3) == lab3_f1_orbit(ea, eb, ops)) || !(f2(lab3) == lab3_f2_orbit(ea, eb, ops))) {
        return "L_ab3 orbit law fails at " + where;
    }
    ExactState prime = apply_local(family_state("L_ab3'", a, b), ops);
    if (!(f1(prime) == lab3_prime_f1_orbit(ea, eb, ops)) || !(f2(prime) == lab3_prime_f2_orbit(ea, eb, ops))) {
        return "L_ab3' orbit law fails at " + where;
    }
    if (!(a * (a * a - b * b)).is_zero()) {
        std::vector<ExactOperator> killed = ops.ops();
        killed[0] = semi_invariant_annihilator(ea, eb, ExactScalar(random_rational(rng, true)),
                                               ExactScalar(random_rational(rng, true)));
        ExactState s = apply_local(family_state("L_ab3'", a, b), ExactOperatorSet(killed));
        if (!f1(s).is_zero() || !f2(s).is_zero()) {
            return "annihilator leaves F1 = " + f1(s).str() + ", F2 = " + f2(s).str() + " at " + where;
        }
    }
    return {};
}

std::string operator_identities(std::mt19937_64 &rng, int) {
    using namespace gates;
    Rational b = random_rational(rng, false);
    ExactOperatorSet eq1({identity(), identity(), i_sigma_z(), i_sigma_z()});
    if (!(apply_local(family_state("L_ab3", 0, b), eq1) == family_state("L_ab3'", 0, b))) {
        return "I (x) I (x) i sz (x) i sz does not map L_ab3(0, b) to L_ab3'(0, b) at b=" + b.str();
    }
    Rational a = random_rational(rng, true);
    struct Case {
        const char *perm;
        Rational b;
        ExactOperatorSet ops;
    };
    const Case cases[] = {
        {"(1,4)", a, ExactOperatorSet({sigma_x(), sigma_z(), i_identity(), sigma_y()})},
        {"(1,3)", -a, ExactOperatorSet({sigma_x(), sigma_z(), sigma_y(), i_identity()})},
    };
    for (const Case &c : cases) {
        ExactState s = apply_local(permute_qubits(family_state("L_ab3'", a, c.b), QubitPermutation::parse_cycles(4, c.perm)),
                                   c.ops);
        auto match = builtins().match_template("L_ab3", s, {{"a", ExactScalar(0)}});
        if (!match || binding(match->params, "b").is_zero()) {
            return std::string(c.perm) + " L_ab3'(" + a.str() + ", " + c.b.str() +
                   ") is not of the form L_ab3(0, b') with b' != 0";
        }
    }
    return {};
}

const std::map<std::string, Trial> &checks() {
    static const std::map<std::string, Trial> table = {
        {"rank-invariance", rank_invariance}, {"matrix-transform", matrix_transform},
        {"dxy-covariance", dxy_covariance},   {"kron-rank", kron_rank},
        {"density-det", density_det},         {"semi-invariants", semi_invariants},
        {"operator-identities", operator_identities},
    };
    return table;
}

}  // namespace

const std::vector<std::string> &check_names() {
    static const std::vector<std::string> names = {"rank-invariance", "matrix-transform", "dxy-covariance",
                                                   "kron-rank",       "density-det",      "semi-invariants",
                                                   "operator-identities"};
    return names;
}

CheckResult run_check(std::string_view name, int trials, std::uint64_t seed) {
    auto it = checks().find(std::string(name));
    if (it == checks().end()) {
        throw DomainError("unknown check '" + std::string(name) + "'");
    }
    if (trials < 1) {
        throw DomainError("trials must be at least 1");
    }
    CheckResult result{std::string(name), trials, 0, seed, {}};
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(t));
        std::string failure = it->second(rng, t);
        if (failure.empty()) {
            ++result.passed;
        } else if (result.counterexample.empty()) {
            result.counterexample = fmt::format("trial {} (seed {}): {}", t, seed + t, failure);
        }
    }
    return result;
}

ExactState random_exact_state(int num_qubits, std::mt19937_64 &rng) {
    std::vector<PlacedFactor<ExactScalar>> factors = random_factors(num_qubits, rng);
    return tensor_all(std::span<const PlacedFactor<ExactScalar>>(factors));
}

ExactState random_dense_exact_state(int num_qubits, std::mt19937_64 &rng) {
    return random_block(num_qubits, rng);
}

}  // namespace slocc
