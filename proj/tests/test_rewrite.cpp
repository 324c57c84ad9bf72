#include "doctest.h"
#include "support/helpers.hpp"

using namespace confcheck;
using namespace confcheck::test_support;

TEST_CASE("rewrite_step: variable lhs rule at the root") {
    // rule 3 of the two-branch system is x -> f(x)
    Term result = rewrite_step(trs_r5(), c("a"), {}, 2);
    CHECK(result == ap("f", {c("a")}));
}

TEST_CASE("rewrite_step: rhs-only variable needs an explicit binding") {
    Substitution extra;
    extra.bind("y", c("c"));
    CHECK(rewrite_step(trs_r1(), c("a"), {}, 0, extra) == c("c"));

    CHECK_THROWS_WITH_AS(rewrite_step(trs_r1(), c("a"), {}, 0),
                         doctest::Contains("rhs-only variable y"), RewriteError);
}

TEST_CASE("rewrite_step: no match, bad position, bad rule index") {
    CHECK_THROWS_AS(rewrite_step(trs_r5(), c("b1"), {}, 0), RewriteError);
    CHECK_THROWS_AS(rewrite_step(trs_r5(), c("a"), {0}, 0), RewriteError);
    CHECK_THROWS_AS(rewrite_step(trs_r5(), c("a"), {}, 9), RewriteError);
}

TEST_CASE("rewrite_step rewrites below the root") {
    Trs trs = parse_trs("(RULES a -> b)");
    Term t = ap("f", {c("a"), c("a")});
    CHECK(rewrite_step(trs, t, {1}, 0) == ap("f", {c("a"), c("b")}));
}

TEST_CASE("successors: one-step reduct sets") {
    std::set<Term> succ = successors(trs_r5(), c("a"));
    CHECK(succ == std::set<Term>{c("b1"), c("b2"), ap("f", {c("a")})});

    CHECK(successors(trs_join(), c("a")) == std::set<Term>{c("b"), c("c")});
    CHECK(successors(Trs{}, ap("f", {c("a")})).empty());
}

TEST_CASE("successors instantiate rhs-only variables with the bottom constant") {
    std::set<Term> succ = successors(trs_r1(), c("a"));
    REQUIRE(succ.size() == 1);
    CHECK(*succ.begin() == bottom_term());
}

TEST_CASE("successors are deterministic") {
    Rng rng(20240603);
    for (int i = 0; i < 50; ++i) {
        std::vector<Symbol> symbols = random_signature(rng, 4);
        Trs trs = random_trs(rng, symbols, 4, false);
        Term t = random_term(rng, symbols, {}, 3);
        CHECK(successors(trs, t) == successors(trs, t));
    }
}

TEST_CASE("normalize: deterministic leftmost-innermost strategy") {
    auto nf = normalize(trs_join(), c("a"), 10);
    REQUIRE(nf.has_value());
    CHECK(*nf == c("d"));  // a -> b -> d under lowest-rule-index-first

    auto untouched = normalize(Trs{}, ap("f", {c("a")}), 0);
    REQUIRE(untouched.has_value());
    CHECK(*untouched == ap("f", {c("a")}));

    Trs loop = parse_trs("(VAR x) (RULES x -> f(x))");
    CHECK_FALSE(normalize(loop, c("a"), 5).has_value());
}

TEST_CASE("normalize counts steps against the budget") {
    // a -> b -> d takes two steps
    CHECK_FALSE(normalize(trs_join(), c("a"), 1).has_value());
    CHECK(normalize(trs_join(), c("a"), 2).has_value());
}

TEST_CASE("reducts: bounded closure including the start term") {
    std::set<Term> r0 = reducts(trs_join(), c("a"), 0);
    CHECK(r0 == std::set<Term>{c("a")});
    std::set<Term> r1 = reducts(trs_join(), c("a"), 1);
    CHECK(r1 == std::set<Term>{c("a"), c("b"), c("c")});
    std::set<Term> r2 = reducts(trs_join(), c("a"), 2);
    CHECK(r2 == std::set<Term>{c("a"), c("b"), c("c"), c("d")});
}

TEST_CASE("replay_steps annotates the failing step") {
    std::vector<DerivationStep> steps{{{}, 0, {}}, {{}, 0, {}}};
    try {
        replay_steps(trs_abc(), c("a"), steps);
        FAIL("expected a replay error");
    } catch (const RewriteError& e) {
        CHECK(std::string(e.what()).find("step 2") != std::string::npos);
    }
}
