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

// End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
// when any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "slocc/errors.h"
#include "slocc/family.h"
#include "slocc/invariants.h"
#include "slocc/local_ops.h"
#include "slocc/state_io.h"
#include "slocc/tables.h"
#include "slocc/verify.h"

using namespace slocc;

namespace {

const FamilyRegistry &registry() {
    static const FamilyRegistry r = FamilyRegistry::with_builtins();
    return r;
}

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string &what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

Bindings ab(const ExactScalar &a, const ExactScalar &b) {
    return {{"a", a}, {"b", b}};
}

std::string table_failures(const TableReport &r) {
    for (const auto *rows : {&r.rows, &r.checks}) {
        for (const TableRow &row : *rows) {
            if (row.verdict == RowVerdict::kMismatch) {
                return "table " + std::to_string(r.id) + " row " + row.label + ": expected " + row.expected +
                       ", observed " + row.observed + " " + row.detail;
            }
        }
    }
    return {};
}

int matched_rows(const TableReport &r) {
    int n = 0;
    for (const TableRow &row : r.rows) {
        n += row.verdict == RowVerdict::kMatch;
    }
    return n;
}

Outcome table_grid(int id, std::size_t rows) {
    Outcome o;
    TableReport r = reproduce_table(id, registry());
    o.require(r.rows.size() == rows, "row count " + std::to_string(r.rows.size()));
    o.require(r.all_match(), table_failures(r));
    o.require(r.count(RowVerdict::kSkipped) == 0, "skipped rows");
    return o;
}

Outcome ac1() {
    return table_grid(1, 5);
}

Outcome ac2() {
    Outcome o = table_grid(2, 15);
    TableReport r = reproduce_table(2, registry());
    o.require(!r.checks.empty() && r.checks.front().verdict == RowVerdict::kMatch, "degenerate signatures collide");
    return o;
}

Outcome ac3() {
    Outcome o;
    TableOptions options;
    options.samples = 20;
    TableReport r = reproduce_table(3, registry(), options);
    o.require(r.rows.size() == 7, "shape count");
    o.require(r.all_match(), table_failures(r));
    for (const TableRow &row : r.rows) {
        o.require(row.samples >= 20, row.label + " sampled " + std::to_string(row.samples));
    }
    return o;
}

Outcome ac4() {
    Outcome o;
    TableOptions options;
    options.samples = 20;
    options.scan = 10000;
    const std::vector<std::pair<int, int>> expected{{4, 12}, {5, 12}, {6, 12}, {7, 7}, {8, 7}};
    for (const auto &[id, rows] : expected) {
        TableReport r = reproduce_table(id, registry(), options);
        o.require(r.all_match(), table_failures(r));
        o.require(matched_rows(r) == rows,
                  "table " + std::to_string(id) + " matched " + std::to_string(matched_rows(r)) + " rows");
        for (const TableRow &row : r.rows) {
            if (row.verdict == RowVerdict::kMatch) {
                bool empty = row.expected == "empty";
                o.require(empty || row.samples >= 20, "table " + std::to_string(id) + " row " + row.label +
                                                          " sampled " + std::to_string(row.samples));
            }
        }
        if (id >= 5) {
            o.require(!r.checks.empty(), "table " + std::to_string(id) + " has no scan");
            for (const TableRow &c : r.checks) {
                o.require(c.samples == 10000, c.label + " drew " + std::to_string(c.samples) + " tuples");
            }
        }
    }
    return o;
}

Outcome check(const char *name, int trials, std::uint64_t seed) {
    Outcome o;
    CheckResult r = run_check(name, trials, seed);
    o.require(r.trials == trials && r.ok(), std::string(name) + ": " + r.counterexample);
    return o;
}

std::vector<ExactState> exact_corpus() {
    std::vector<ExactState> corpus;
    for (const auto &entry : std::filesystem::directory_iterator(SLOCC_TEST_DATA_DIR)) {
        if (entry.path().extension() != ".state") {
            continue;
        }
        std::ifstream in(entry.path());
        std::stringstream text;
        text << in.rdbuf();
        try {
            AnyState s = parse_state(text.str());
            if (auto *e = std::get_if<ExactState>(&s); e && e->num_qubits() == 4) {
                corpus.push_back(*e);
            }
        } catch (const ParseError &) {
        }
    }
    const std::vector<std::pair<std::string, Bindings>> families{
        {"G_abcd", {{"alpha", 1}, {"beta", 2}, {"gamma", 3}, {"delta", 5}}},
        {"L_abc2", {{"alpha", 1}, {"beta", 2}, {"gamma", 3}}},
        {"L_ab3", ab(1, 3)},
        {"L_ab3'", ab(3, 1)}};
    for (const auto &[name, b] : families) {
        corpus.push_back(registry().instantiate(name, b));
    }
    std::mt19937_64 rng(808);
    for (int t = 0; t < 60; ++t) {
        corpus.push_back(t % 2 ? random_dense_exact_state(4, rng) : random_exact_state(4, rng));
    }
    return corpus;
}

Outcome ac8() {
    Outcome o;
    std::vector<ExactState> corpus = exact_corpus();
    o.require(corpus.size() > 60, "corpus is missing the data files");
    const std::vector<std::vector<int>> halves{{1, 2}, {1, 3}, {1, 4}};
    for (const ExactState &s : corpus) {
        for (const Bipartition &b : enumerate_bipartitions(4)) {
            auto c = coefficient_matrix(s, b);
            Matrix<ExactScalar> rho = reduced_density(s, std::span<const int>(b.row_bits()));
            o.require(rho == c.matrix * c.matrix.adjoint(), "rho != C C^dagger on " + render_state(s));
        }
        for (const auto &h : halves) {
            ExactScalar d = det_coeff(s, std::span<const int>(h));
            ExactScalar rho_det = determinant(reduced_density(s, std::span<const int>(h)));
            o.require(rho_det == d * d.conj(), "det rho != |det C|^2 on " + render_state(s));

            FloatState f = to_floating(s);
            Complex fd = det_coeff(f, std::span<const int>(h));
            Complex frho = determinant(reduced_density(f, std::span<const int>(h)));
            double lhs = frho.real(), rhs = std::norm(fd);
            double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
            o.require(std::abs(lhs - rhs) <= 1e-9 * scale && std::abs(frho.imag()) <= 1e-9 * scale,
                      "floating det mismatch on " + render_state(s));
        }
    }
    return o;
}

Outcome ac9() {
    Outcome o;
    o.require(d_xy(registry().instantiate("L_ab3", ab(1, 3))) == ExactScalar(16), "d_xy(L_ab3(1,3)) != 16");
    o.require(d_xy(registry().instantiate("L_ab3'", ab(1, 1))).is_zero(), "d_xy(L_ab3'(1,1)) != 0");
    std::mt19937_64 rng(909);
    std::uniform_int_distribution<long> num(-7, 7);
    const std::vector<std::pair<std::string, std::vector<std::string>>> families{
        {"L_ab3", {"a", "b"}}, {"G_abcd", {"alpha", "beta", "gamma", "delta"}}, {"L_abc2", {"alpha", "beta", "gamma"}}};
    for (const auto &[name, params] : families) {
        int checked = 0;
        while (checked < 50) {
            Bindings b;
            for (const std::string &p : params) {
                b[p] = ExactScalar(Rational(num(rng), 1 + static_cast<long>(rng() % 4)));
            }
            try {
                ExactState s = registry().instantiate(name, b);
                o.require(closed_form_dxy(name, b) == d_xy(s), name + " closed form at " + render_bindings(b));
                ++checked;
            } catch (const DomainError &) {
            }
        }
    }
    Outcome cov = check("dxy-covariance", 100, 9);
    o.require(cov.ok, cov.detail);
    return o;
}

Outcome ac10() {
    Outcome o = check("semi-invariants", 100, 10);
    int choices = 0;
    std::mt19937_64 rng(1010);
    std::uniform_int_distribution<long> num(-5, 5);
    while (choices < 20) {
        ExactScalar a(num(rng)), b(num(rng));
        if ((a * (a * a - b * b)).is_zero()) {
            continue;
        }
        ExactOperatorSet rest = random_exact_local_ops(4, 2000 + choices);
        ExactOperator first = semi_invariant_annihilator(a, b, ExactScalar(1 + choices % 3), ExactScalar(-1));
        ExactOperatorSet ops({first, rest.on(2), rest.on(3), rest.on(4)});
        ExactState s = apply_local(registry().instantiate("L_ab3'", ab(a, b)), ops);
        o.require(f1(s).is_zero() && f2(s).is_zero(), "annihilator fails at " + render_bindings(ab(a, b)));
        ++choices;
    }
    return o;
}

Outcome ac11() {
    Outcome o;
    ExactOperatorSet iz({gates::identity(), gates::identity(), gates::i_sigma_z(), gates::i_sigma_z()});
    for (long b = -3; b <= 3; ++b) {
        if (b == 0) {
            continue;
        }
        ExactState lab3 = registry().instantiate("L_ab3", ab(0, b));
        o.require(apply_local(lab3, iz) == registry().instantiate("L_ab3'", ab(0, b)),
                  "I I iZ iZ identity fails at b=" + std::to_string(b));
    }
    ExactOperatorSet ops({gates::sigma_x(), gates::sigma_z(), gates::i_identity(), gates::sigma_y()});
    QubitPermutation swap14 = QubitPermutation::transposition(4, 1, 4);
    const std::vector<std::string> values{"1", "2", "3", "-1", "-2", "1/2", "-1/3", "5/4", "7", "-9/2"};
    for (const std::string &v : values) {
        ExactScalar a = std::get<ExactScalar>(parse_scalar(v));
        ExactState s = apply_local(permute_qubits(registry().instantiate("L_ab3'", ab(a, a)), swap14), ops);
        std::optional<TemplateMatch> m = registry().match_template("L_ab3", s, {{"a", ExactScalar(0)}});
        o.require(m.has_value(), "no L_ab3(a=0) form at a=" + v);
        if (m) {
            const ExactScalar &b = binding(m->params, "b");
            o.require(!b.is_zero(), "b' = 0 at a=" + v);
            o.require(scale(registry().instantiate("L_ab3", ab(0, b)), m->scale) == s, "fit is not bit-exact at a=" + v);
        }
    }
    return o;
}

Outcome ac12() {
    Outcome o;
    struct Rep {
        long a, b;
        std::size_t bound;
    };
    for (const Rep &r : {Rep{1, 0, 6}, Rep{1, 3, 12}, Rep{1, -3, 12}, Rep{1, 5, 12}}) {
        PermutationScan scan = permutation_scan(registry().instantiate("L_ab3'", ab(r.a, r.b)));
        o.require(scan.entries.size() == 24, "scan incomplete");
        std::size_t covered = 0;
        for (const auto &c : scan.classes) {
            covered += c.size();
        }
        o.require(covered == 24, "classes do not cover the scan");
        o.require(scan.classes.size() <= r.bound, "(" + std::to_string(r.a) + "," + std::to_string(r.b) + ") has " +
                                                      std::to_string(scan.classes.size()) + " classes");
        std::printf("      L_ab3'(%ld,%ld): %zu classes, triples", r.a, r.b, scan.classes.size());
        for (const RankTriple &t : scan.triples) {
            std::printf(" %s", t.str().c_str());
        }
        std::printf("\n");
    }
    return o;
}

struct Criterion {
    const char *id;
    const char *title;
    double limit_seconds;  // 0: no limit
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "table 1 three-qubit rank grid", 1, ac1},
        {"AC2", "table 2 four-qubit rank grid", 5, ac2},
        {"AC3", "table 3 five-qubit shapes", 30, ac3},
        {"AC4", "tables 4-8 subfamily rows and scans", 60, ac4},
        {"AC5", "rank signature invariance", 0, [] { return check("rank-invariance", 200, 5); }},
        {"AC6", "coefficient-matrix transform path", 0, [] { return check("matrix-transform", 100, 6); }},
        {"AC7", "factorwise rank recursion", 0, [] { return check("kron-rank", 100, 7); }},
        {"AC8", "density matrices and determinants", 0, ac8},
        {"AC9", "d_xy anchors, closed forms, covariance", 0, ac9},
        {"AC10", "semi-invariant orbit laws and annihilator", 0, ac10},
        {"AC11", "explicit operator identities", 0, ac11},
        {"AC12", "24-permutation scan", 10, ac12},
    };
    int failed = 0;
    for (const Criterion &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && c.limit_seconds > 0 && seconds >= c.limit_seconds) {
            o.ok = false;
            o.detail = "time limit " + std::to_string(c.limit_seconds) + " s exceeded";
        }
        std::printf("%-4s %s  %s (%.2f s)%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.title, seconds,
                    o.ok ? "" : ": ", o.detail.c_str());
        std::fflush(stdout);
        failed += !o.ok;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
