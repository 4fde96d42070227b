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
#include "slocc/predicate.h"

using namespace slocc;

namespace {

Bindings abcd(long a, long b, long c, long d) {
    return {{"alpha", ExactScalar(a)}, {"beta", ExactScalar(b)}, {"gamma", ExactScalar(c)}, {"delta", ExactScalar(d)}};
}

Bindings ab(long a, long b) {
    return {{"a", ExactScalar(a)}, {"b", ExactScalar(b)}};
}

const std::vector<std::string> kG{"alpha", "beta", "gamma", "delta"};
const std::vector<std::string> kL{"a", "b"};

}  // namespace

TEST(predicate, chains_and_signs) {
    Predicate p = Predicate::parse("alpha=beta=0 & gamma=+-delta!=0");
    EXPECT_TRUE(p.evaluate(abcd(0, 0, 2, 2)));
    EXPECT_TRUE(p.evaluate(abcd(0, 0, 3, -3)));
    EXPECT_FALSE(p.evaluate(abcd(0, 0, 0, 0)));
    EXPECT_FALSE(p.evaluate(abcd(0, 1, 2, 2)));
    EXPECT_FALSE(p.evaluate(abcd(0, 0, 2, 3)));
    EXPECT_EQ(p.symbols(), (std::vector<std::string>{"alpha", "beta", "delta", "gamma"}));
}

TEST(predicate, plus_minus_inequality_means_every_sign) {
    Predicate p = Predicate::parse("a != ±b");
    EXPECT_TRUE(p.evaluate(ab(1, 2)));
    EXPECT_FALSE(p.evaluate(ab(1, -1)));
    EXPECT_FALSE(p.evaluate(ab(1, 1)));
}

TEST(predicate, products_and_coefficients) {
    Predicate p = Predicate::parse("a*b≠0 & a≠±b & b≠±3a");
    EXPECT_TRUE(p.evaluate(ab(1, 2)));
    EXPECT_FALSE(p.evaluate(ab(0, 2)));
    EXPECT_FALSE(p.evaluate(ab(1, -3)));
    EXPECT_FALSE(p.evaluate(ab(2, 6)));
    Predicate starred = Predicate::parse("a*b!=0 & a!=+-b & b!=+-3*a");
    for (long x = -4; x <= 4; ++x) {
        for (long y = -4; y <= 4; ++y) {
            EXPECT_EQ(p.evaluate(ab(x, y)), starred.evaluate(ab(x, y)));
        }
    }
}

TEST(predicate, disjunction_and_constants) {
    Predicate p = Predicate::parse("a=b!=0 | b=-3a!=0");
    EXPECT_TRUE(p.evaluate(ab(1, 1)));
    EXPECT_TRUE(p.evaluate(ab(1, -3)));
    EXPECT_FALSE(p.evaluate(ab(0, 0)));
    EXPECT_TRUE(Predicate::parse("true").evaluate({}));
    EXPECT_FALSE(Predicate::parse("false").evaluate({}));
    EXPECT_TRUE(Predicate::parse("false").is_unsatisfiable_by_construction());
    EXPECT_TRUE(Predicate::parse("∅").is_unsatisfiable_by_construction());
}

TEST(predicate, combinators) {
    Predicate x = Predicate::parse("a=0 | b=0");
    Predicate y = Predicate::parse("a!=0");
    Predicate both = x & y;
    EXPECT_EQ(both.disjuncts().size(), 2u);
    EXPECT_TRUE(both.evaluate(ab(1, 0)));
    EXPECT_FALSE(both.evaluate(ab(0, 0)));
    EXPECT_TRUE((y | x).evaluate(ab(0, 0)));
    EXPECT_TRUE((Predicate::always() & y).evaluate(ab(2, 2)));
    EXPECT_TRUE((Predicate::never() & y).is_unsatisfiable_by_construction());
}

TEST(predicate, text_round_trip) {
    for (const char *text : {"a=b!=0 | b=-3*a!=0", "alpha=beta=0 & gamma=+-delta!=0", "a*b!=0 & a!=+-b", "true",
                             "false", "a=2*b & b!=0"}) {
        Predicate p = Predicate::parse(text);
        Predicate again = Predicate::parse(p.str());
        EXPECT_EQ(again.str(), p.str()) << text;
        std::vector<std::string> symbols = p.symbols();
        for (long x = -3; x <= 3; ++x) {
            for (long y = -3; y <= 3; ++y) {
                Bindings b;
                for (std::size_t k = 0; k < symbols.size(); ++k) {
                    b[symbols[k]] = ExactScalar(k % 2 ? y : x);
                }
                EXPECT_EQ(again.evaluate(b), p.evaluate(b)) << text;
            }
        }
    }
}

TEST(predicate, errors) {
    EXPECT_THROW(Predicate::parse("a"), ParseError);
    EXPECT_THROW(Predicate::parse("a = "), ParseError);
    EXPECT_THROW(Predicate::parse("a == b"), ParseError);
    EXPECT_THROW(Predicate::parse("a = b &"), ParseError);
    EXPECT_THROW(Predicate::parse("a = $"), ParseError);
    EXPECT_THROW(Predicate::parse("a=0").evaluate({}), DomainError);
}

TEST(sampler, satisfies_predicate) {
    struct Case {
        const char *text;
        std::vector<std::string> params;
    };
    std::vector<Case> cases{{"alpha=beta=0 & gamma=+-delta!=0", kG},
                            {"a=-b!=0", kL},
                            {"a*b!=0 & a!=+-b & b!=+-3a", kL},
                            {"alpha*beta=0 & gamma!=0", kG},
                            {"a=b=0", kL},
                            {"a=0 | b=3a!=0", kL},
                            {"true", kL}};
    for (const Case &c : cases) {
        Predicate p = Predicate::parse(c.text);
        std::vector<Bindings> samples = sample_predicate(p, c.params, 20, 5);
        ASSERT_EQ(samples.size(), 20u) << c.text;
        for (const Bindings &b : samples) {
            EXPECT_EQ(b.size(), c.params.size());
            EXPECT_TRUE(p.evaluate(b)) << c.text << ": " << render_bindings(b);
        }
    }
}

TEST(sampler, visits_every_disjunct) {
    Predicate p = Predicate::parse("a=0 & b!=0 | b=0 & a!=0");
    bool left = false, right = false;
    for (const Bindings &b : sample_predicate(p, kL, 10, 3)) {
        left = left || binding(b, "a").is_zero();
        right = right || binding(b, "b").is_zero();
    }
    EXPECT_TRUE(left);
    EXPECT_TRUE(right);
}

TEST(sampler, deterministic) {
    Predicate p = Predicate::parse("a=-b!=0");
    EXPECT_EQ(sample_predicate(p, kL, 8, 9), sample_predicate(p, kL, 8, 9));
}

TEST(sampler, unsatisfiable_and_unknown) {
    EXPECT_THROW(sample_predicate(Predicate::parse("false"), kL, 1, 1), DomainError);
    EXPECT_THROW(sample_predicate(Predicate::parse("a=0 & a!=0"), kL, 1, 1), DomainError);
    EXPECT_THROW(sample_predicate(Predicate::parse("c=0"), kL, 1, 1), DomainError);
}
