#include "doctest.h"
#include "support/helpers.hpp"

using namespace confcheck;
using namespace confcheck::test_support;

TEST_CASE("symbols are identified by name and arity") {
    Symbol f1{"f", 1};
    Symbol f2{"f", 2};
    CHECK(f1 != f2);
    CHECK(f1 == Symbol{"f", 1});
    CHECK(f1.to_string() == "f/1");
}

TEST_CASE("application arity is enforced") {
    CHECK_THROWS_AS(Term::app({"f", 2}, {c("a")}), std::invalid_argument);
}

TEST_CASE("positions, subterms, and replacement") {
    Term t = ap("f", {ap("g", {v("x")}), c("a")});
    CHECK(t.positions().size() == 4);
    CHECK(*t.subterm({0, 0}) == v("x"));
    CHECK(*t.subterm({1}) == c("a"));
    CHECK(t.subterm({2}) == nullptr);
    CHECK(t.subterm({1, 0}) == nullptr);

    Term replaced = t.replace({0}, c("b"));
    CHECK(replaced == ap("f", {c("b"), c("a")}));
    CHECK(t == ap("f", {ap("g", {v("x")}), c("a")}));  // original untouched

    CHECK(position_to_string({}) == "e");
    CHECK(position_to_string({0, 1}) == "1.2");
}

TEST_CASE("variable collection preserves first-occurrence order") {
    Term t = ap("f", {v("y"), ap("g", {v("x"), v("y")})});
    std::vector<std::string> order = t.variables_in_order();
    REQUIRE(order.size() == 2);
    CHECK(order[0] == "y");
    CHECK(order[1] == "x");
}

TEST_CASE("groundness and linearity") {
    CHECK(ap("f", {c("a")}).is_ground());
    CHECK_FALSE(ap("f", {v("x")}).is_ground());
    CHECK(ap("f", {v("x"), v("y")}).is_linear());
    CHECK_FALSE(ap("f", {v("x"), v("x")}).is_linear());
}

TEST_CASE("structural order is total and consistent with equality") {
    std::vector<Term> terms{v("x"), v("y"), c("a"), ap("f", {c("a")}), ap("f", {v("x")})};
    for (const Term& s : terms) {
        CHECK(Term::compare(s, s) == 0);
        for (const Term& t : terms) {
            if (s == t) continue;
            CHECK(Term::compare(s, t) == -Term::compare(t, s));
            CHECK(Term::compare(s, t) != 0);
        }
    }
}

TEST_CASE("substitution application") {
    Substitution sigma;
    sigma.bind("x", c("a"));
    CHECK(sigma.apply(ap("f", {v("x"), v("y")})) == ap("f", {c("a"), v("y")}));
    CHECK(sigma.apply(v("y")) == v("y"));
}

TEST_CASE("rule helpers") {
    Trs r1 = trs_r1();
    CHECK(r1.rules[0].extra_variables() == std::vector<std::string>{"y"});
    CHECK_FALSE(r1.rules[0].lhs_is_variable());
    CHECK(trs_r5().rules[2].lhs_is_variable());

    std::set<Symbol> sig = trs_r5().signature();
    CHECK(sig.count({"a", 0}));
    CHECK(sig.count({"f", 1}));
    CHECK_FALSE(sig.count({"x", 0}));
}
