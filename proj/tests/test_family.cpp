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
#include "slocc/family.h"
#include "slocc/local_ops.h"
#include "test_util.h"

using namespace slocc;
using testing_util::builtins;
using testing_util::ex;
using testing_util::kets;

namespace {

Bindings bind(std::initializer_list<std::pair<const char *, long>> kv) {
    Bindings b;
    for (const auto &[k, v] : kv) {
        b[k] = ExactScalar(v);
    }
    return b;
}

Bindings g(long a, long b, long c, long d) {
    return bind({{"alpha", a}, {"beta", b}, {"gamma", c}, {"delta", d}});
}

Bindings l2(long a, long b, long c) {
    return bind({{"alpha", a}, {"beta", b}, {"gamma", c}});
}

// a(|0000> + |0101> + |1010> + |1111>) + i|0001> + |0110> - i|1011>
FamilyTemplate la4_template() {
    std::vector<std::string> params{"a"};
    std::vector<AffineExpr> amps(16);
    for (int k : {0, 5, 10, 15}) {
        amps[k] = AffineExpr::parse("a", params);
    }
    amps[1] = AffineExpr(ExactScalar::imaginary_unit());
    amps[6] = AffineExpr(ExactScalar(1));
    amps[11] = AffineExpr(-ExactScalar::imaginary_unit());
    return FamilyTemplate("L_a4", params, amps);
}

}  // namespace

TEST(affine_expr, parse_and_evaluate) {
    std::vector<std::string> params{"a", "b"};
    AffineExpr e = AffineExpr::parse("1/2*a - 1/2*b + a + i", params);
    EXPECT_EQ(e.coefficient("a"), ex("3/2"));
    EXPECT_EQ(e.coefficient("b"), ex("-1/2"));
    EXPECT_EQ(e.coefficient("c"), ExactScalar(0));
    EXPECT_EQ(e.constant(), ex("i"));
    EXPECT_EQ(e.evaluate(bind({{"a", 2}, {"b", 4}})), ex("1 + i"));
    EXPECT_EQ(e.substitute(bind({{"a", 0}})), AffineExpr::parse("-1/2*b + i", params));
    EXPECT_EQ(e.str(), "i + 3/2*a - 1/2*b");
    EXPECT_EQ(AffineExpr::parse(e.str(), params), e);
    AffineExpr mixed = AffineExpr::parse("a + i*a - 1/2*r2*b + 1/2*i*r2 - 3", params);
    EXPECT_EQ(mixed.coefficient("a"), ex("1 + i"));
    EXPECT_EQ(AffineExpr::parse(mixed.str(), params), mixed);
    EXPECT_EQ(AffineExpr().str(), "0");
    EXPECT_THROW(AffineExpr::parse("c", params), ParseError);
    EXPECT_THROW(e.evaluate(bind({{"a", 1}})), DomainError);
}

TEST(rank_triple, parse_and_print) {
    RankTriple t = RankTriple::parse("434");
    EXPECT_EQ(t.ab, 4);
    EXPECT_EQ(t.ac, 3);
    EXPECT_EQ(t.ad, 4);
    EXPECT_EQ(t.str(), "434");
    EXPECT_THROW(RankTriple::parse("45"), ParseError);
    EXPECT_THROW(RankTriple::parse("454"), ParseError);
}

TEST(family_template, validation) {
    std::vector<AffineExpr> amps(16);
    amps[0] = AffineExpr(ExactScalar(1));
    EXPECT_THROW(FamilyTemplate("x", {"a", "a"}, amps), DomainError);
    EXPECT_THROW(FamilyTemplate("x", {"i"}, amps), DomainError);
    EXPECT_THROW(FamilyTemplate("x", {"a"}, std::vector<AffineExpr>(15)), DomainError);
    FamilyTemplate ok("x", {"a"}, amps);
    EXPECT_EQ(ok.support(), (std::vector<int>{0}));
}

TEST(builtins, registry_contents) {
    const FamilyRegistry &r = builtins();
    for (const char *name : {"G_abcd", "L_abc2", "L_ab3", "L_ab3'"}) {
        ASSERT_TRUE(r.contains(name)) << name;
        EXPECT_TRUE(r.at(name).family_template.has_value());
        EXPECT_TRUE(r.at(name).builtin);
    }
    EXPECT_EQ(r.at("G_abcd").rules.size(), 12u);
    EXPECT_EQ(r.at("L_abc2").rules.size(), 12u);
    EXPECT_EQ(r.at("L_ab3").rules.size(), 7u);
    EXPECT_EQ(r.at("L_ab3'").rules.size(), 7u);
    EXPECT_EQ(r.at("G_abcd").params, (std::vector<std::string>{"alpha", "beta", "gamma", "delta"}));
    ASSERT_TRUE(r.contains("L_a4"));
    EXPECT_FALSE(r.at("L_a4").family_template.has_value());
    EXPECT_EQ(r.at("L_a4").rules.size(), 2u);
}

TEST(builtins, instantiate_examples) {
    const FamilyRegistry &r = builtins();
    EXPECT_EQ(r.instantiate("G_abcd", g(1, 0, 0, 0)), kets(4, {0, 15}));
    EXPECT_EQ(r.instantiate("L_abc2", l2(0, 0, 0)), kets(4, {6}));
    ExactScalar w = ex("1/2*i*r2");
    std::vector<ExactScalar> amps(16);
    for (int k : {1, 2, 7, 11}) {
        amps[k] = w;
    }
    EXPECT_EQ(r.instantiate("L_ab3", bind({{"a", 0}, {"b", 0}})), ExactState(4, amps));
    EXPECT_THROW(r.instantiate("G_abcd", g(0, 0, 0, 0)), DomainError);
    EXPECT_THROW(r.instantiate("G_abcd", bind({{"alpha", 1}})), DomainError);
    EXPECT_THROW(r.instantiate("L_a4", bind({{"a", 1}})), DomainError);
    EXPECT_THROW(r.instantiate("nope", {}), DomainError);
}

TEST(rank_triple, examples) {
    const FamilyRegistry &r = builtins();
    auto triple = [&](const char *name, const Bindings &b) {
        return rank_triple(r.instantiate(name, b), RankMode::exact()).str();
    };
    EXPECT_EQ(triple("G_abcd", g(1, 1, 1, 1)), "222");
    EXPECT_EQ(triple("G_abcd", g(1, 1, 0, 0)), "144");
    EXPECT_EQ(triple("L_ab3'", bind({{"a", 1}, {"b", 1}})), "434");
    EXPECT_EQ(rank_triple(to_floating(r.instantiate("L_ab3'", bind({{"a", 1}, {"b", 1}}))), RankMode::numeric()).str(),
              "434");
    EXPECT_THROW(rank_triple(kets(3, {0}), RankMode::exact()), DomainError);
}

TEST(classify_subfamily, examples) {
    const FamilyRegistry &r = builtins();
    SubfamilyMatch m = r.classify_subfamily("L_ab3", bind({{"a", 1}, {"b", -3}}));
    EXPECT_EQ(m.rule->triple.str(), "434");
    EXPECT_EQ(m.observed.str(), "434");
    m = r.classify_subfamily("L_abc2", l2(0, 1, 1));
    EXPECT_EQ(m.rule->triple.str(), "442");
    m = r.classify_subfamily("L_ab3'", bind({{"a", 1}, {"b", 5}}));
    EXPECT_EQ(m.rule->triple.str(), "444");
    m = r.classify_subfamily("G_abcd", g(1, 1, 0, 0));
    EXPECT_EQ(m.rule->triple.str(), "144");
    EXPECT_TRUE(m.rule->biseparable);
    EXPECT_EQ(m.rule->structure, "AB–CD");
    m = r.classify_subfamily("L_abc2", l2(0, 0, 0));
    EXPECT_EQ(m.rule->structure, "A–B–C–D");
}

TEST(classify_subfamily, rules_are_exhaustive_and_exclusive) {
    const FamilyRegistry &r = builtins();
    for (const char *name : {"L_ab3", "L_ab3'"}) {
        for (long a = -4; a <= 4; ++a) {
            for (long b = -4; b <= 4; ++b) {
                EXPECT_NO_THROW(r.classify_subfamily(name, bind({{"a", a}, {"b", b}}))) << name << a << b;
            }
        }
    }
    for (long a = -2; a <= 2; ++a) {
        for (long b = -2; b <= 2; ++b) {
            for (long c = -2; c <= 2; ++c) {
                EXPECT_NO_THROW(r.classify_subfamily("L_abc2", l2(a, b, c)));
                for (long d = -2; d <= 2; ++d) {
                    if (a || b || c || d) {
                        EXPECT_NO_THROW(r.classify_subfamily("G_abcd", g(a, b, c, d)));
                    }
                }
            }
        }
    }
}

TEST(registry, collisions) {
    FamilyRegistry r = FamilyRegistry::with_builtins();
    std::vector<AffineExpr> amps(16);
    amps[0] = AffineExpr(ExactScalar(1));
    EXPECT_THROW(r.register_family(FamilyTemplate("G_abcd", {}, amps)), DomainError);
    r.register_family(FamilyTemplate("mine", {}, amps));
    EXPECT_THROW(r.register_family(FamilyTemplate("mine", {}, amps)), DomainError);
}

TEST(registry, pending_family_adopts_rules) {
    FamilyRegistry r = FamilyRegistry::with_builtins();
    r.register_family(la4_template());
    ASSERT_TRUE(r.at("L_a4").family_template.has_value());
    ASSERT_EQ(r.at("L_a4").rules.size(), 2u);
    SubfamilyMatch zero = r.classify_subfamily("L_a4", bind({{"a", 0}}));
    EXPECT_EQ(zero.rule->triple.str(), "323");
    SubfamilyMatch one = r.classify_subfamily("L_a4", bind({{"a", 2}}));
    EXPECT_EQ(one.rule->triple.str(), "434");
}

TEST(registry, user_three_parameter_template) {
    FamilyRegistry r;
    std::vector<std::string> params{"x", "y", "z"};
    std::vector<AffineExpr> amps(16);
    amps[0] = AffineExpr::parse("x", params);
    amps[3] = AffineExpr::parse("y", params);
    amps[15] = AffineExpr::parse("z + 1", params);
    std::vector<SubfamilyRule> rules(2);
    rules[0].family = "T3";
    rules[0].triple = RankTriple::parse("222");
    rules[0].predicate = Predicate::parse("x != 0");
    rules[0].text = "x != 0";
    rules[1].family = "T3";
    rules[1].triple = RankTriple::parse("111");
    rules[1].predicate = Predicate::parse("x = 0");
    rules[1].text = "x = 0";
    r.register_family(FamilyTemplate("T3", params, amps), rules);
    SubfamilyMatch m = r.classify_subfamily("T3", bind({{"x", 1}, {"y", 0}, {"z", 2}}));
    EXPECT_EQ(m.rule->text, "x != 0");
    // |0011> + 2|1111> has triple 122, so the "x = 0" row is wrong here.
    EXPECT_THROW(r.classify_subfamily("T3", bind({{"x", 0}, {"y", 1}, {"z", 1}})), ConsistencyError);
    EXPECT_EQ(r.classify_subfamily("T3", bind({{"x", 0}, {"y", 0}, {"z", 1}})).rule->text, "x = 0");
}

TEST(registry, load_json) {
    FamilyRegistry r;
    r.load(R"([{"name": "EPR2", "params": ["a"], "amps": ["a","0","0","1", "0","0","0","0",
                 "0","0","0","0", "0","0","0","0"],
                "rules": [{"triple": "122", "predicate": "true", "bisep": true, "structure": "A–B–CD"}]}])");
    EXPECT_EQ(r.names(), (std::vector<std::string>{"EPR2"}));
    EXPECT_EQ(r.classify_subfamily("EPR2", bind({{"a", 1}})).rule->structure, "A–B–CD");
    EXPECT_THROW(r.load("[{]"), ParseError);
    EXPECT_THROW(r.load(R"([{"name": "bad", "params": [], "amps": ["1"]}])"), std::exception);
}

TEST(match_template, recovers_parameters_and_scale) {
    const FamilyRegistry &r = builtins();
    ExactState s = scale(r.instantiate("G_abcd", g(1, 2, 3, 5)), ex("2 - i"));
    std::optional<TemplateMatch> m = r.match_template("G_abcd", s);
    ASSERT_TRUE(m.has_value());
    EXPECT_TRUE(proportional(r.instantiate("G_abcd", m->params), s));
    std::optional<TemplateMatch> miss = r.match_template("L_ab3", kets(4, {0, 15}));
    EXPECT_FALSE(miss.has_value());
}

TEST(match_template, lab3_constant_column) {
    const FamilyRegistry &r = builtins();
    ExactState s = scale(r.instantiate("L_ab3", bind({{"a", 0}, {"b", 4}})), ExactScalar(-3));
    std::optional<TemplateMatch> m = r.match_template("L_ab3", s, bind({{"a", 0}}));
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(binding(m->params, "b"), ExactScalar(4));
    EXPECT_EQ(m->scale, ExactScalar(-3));
}

TEST(match_template, permuted_lprime_is_lab3_with_a_zero) {
    const FamilyRegistry &r = builtins();
    struct Case {
        const char *cycles;
        std::array<ExactOperator, 4> ops;
        ExactScalar sign;  // b' = sign * 2a
    };
    std::vector<Case> cases{
        {"(1,4)", {gates::sigma_x(), gates::sigma_z(), gates::i_identity(), gates::sigma_y()}, ExactScalar(-1)},
        {"(1,3)", {gates::sigma_x(), gates::sigma_z(), gates::sigma_y(), gates::i_identity()}, ExactScalar(1)},
    };
    for (const Case &c : cases) {
        for (const char *a_text : {"1", "2", "-1/3"}) {
            ExactScalar a = ex(a_text);
            ExactScalar b = -(c.sign * a);
            ExactState base = r.instantiate("L_ab3'", {{"a", a}, {"b", b}});
            ExactState s = permute_qubits(base, QubitPermutation::parse_cycles(4, c.cycles));
            s = apply_local(s, ExactOperatorSet({c.ops.begin(), c.ops.end()}));
            std::optional<TemplateMatch> m = r.match_template("L_ab3", s, {{"a", ExactScalar(0)}});
            ASSERT_TRUE(m.has_value()) << c.cycles << " a=" << a_text;
            EXPECT_EQ(binding(m->params, "b"), c.sign * ExactScalar(2) * a) << c.cycles;
            EXPECT_EQ(m->scale, ExactScalar(-1));
        }
    }
}

TEST(permutations, named_lists) {
    ASSERT_EQ(kappa_permutations().size(), 6u);
    ASSERT_EQ(pi_permutations().size(), 12u);
    EXPECT_EQ(kappa_permutations().front().name, "κ1");
    EXPECT_EQ(pi_permutations().back().name, "π12");
    EXPECT_EQ(all_permutations(4).size(), 24u);
    EXPECT_TRUE(all_permutations(4).front().is_identity());
    for (const NamedPermutation &p : kappa_permutations()) {
        EXPECT_EQ(p.perm, QubitPermutation::parse_cycles(4, p.cycles));
    }
}

TEST(permutations, analysis) {
    const FamilyRegistry &r = builtins();
    ExactState s = r.instantiate("L_ab3'", bind({{"a", 1}, {"b", 0}}));
    std::vector<QubitPermutation> kappa;
    for (const NamedPermutation &p : kappa_permutations()) {
        kappa.push_back(p.perm);
    }
    std::vector<PermutedTriple> out = permutation_analysis(s, kappa);
    ASSERT_EQ(out.size(), 6u);
    std::vector<QubitPermutation> id{QubitPermutation::identity(4)};
    EXPECT_EQ(permutation_analysis(s, id).front().triple, rank_triple(s, RankMode::exact()));
}

TEST(permutations, scan_class_counts) {
    const FamilyRegistry &r = builtins();
    auto classes = [&](long a, long b) {
        return permutation_scan(r.instantiate("L_ab3'", bind({{"a", a}, {"b", b}}))).classes.size();
    };
    EXPECT_EQ(classes(1, 0), 6u);
    EXPECT_EQ(classes(1, 3), 12u);
    EXPECT_EQ(classes(1, -3), 12u);
    EXPECT_EQ(classes(1, 5), 12u);
    PermutationScan scan = permutation_scan(r.instantiate("L_ab3'", bind({{"a", 1}, {"b", 5}})));
    EXPECT_EQ(scan.entries.size(), 24u);
    EXPECT_TRUE(std::is_sorted(scan.triples.begin(), scan.triples.end()));
}
