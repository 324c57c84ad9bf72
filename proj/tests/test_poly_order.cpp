#include "doctest.h"
#include "support/helpers.hpp"

using namespace confcheck;
using namespace confcheck::test_support;

namespace {

LinearPolyInterp interp_of(std::vector<std::pair<Symbol, std::vector<int>>> entries) {
    LinearPolyInterp interp;
    for (auto& [symbol, coeffs] : entries) {
        std::vector<Nat> nats(coeffs.begin(), coeffs.end());
        interp.set(symbol, std::move(nats));
    }
    return interp;
}

Nat eval_at(const LinearPoly& p, const std::map<std::string, Nat>& valuation) {
    Nat out = p.constant;
    for (const auto& [var, coeff] : p.coeffs) {
        auto it = valuation.find(var);
        out += coeff * (it == valuation.end() ? Nat(0) : it->second);
    }
    return out;
}

LinearPoly random_poly(Rng& rng) {
    LinearPoly p;
    p.constant = Nat(rng.below(5));
    for (const char* var : {"x", "y", "z"})
        if (rng.chance(0.6)) p.add_coeff(var, Nat(rng.below(4)));
    return p;
}

}  // namespace

TEST_CASE("eval_poly composes interpretations bottom-up") {
    LinearPolyInterp interp = interp_of({{{"f", 1}, {1, 1}}, {{"a", 0}, {3}}});
    LinearPoly nested = eval_poly(interp, ap("f", {ap("f", {v("x")})}));
    CHECK(nested.constant == 2);
    CHECK(nested.coeff("x") == 1);

    CHECK(eval_poly(interp, c("a")).constant == 3);

    LinearPoly just_x = eval_poly(interp, v("x"));
    CHECK(just_x.constant == 0);
    CHECK(just_x.coeff("x") == 1);

    CHECK_THROWS_AS(eval_poly(interp, c("b")), UninterpretedSymbolError);
}

TEST_CASE("poly_compare orders coefficient-wise") {
    LinearPoly x_plus_1{Nat(1), {{"x", Nat(1)}}};
    LinearPoly x{Nat(0), {{"x", Nat(1)}}};
    LinearPoly y{Nat(0), {{"y", Nat(1)}}};
    CHECK(poly_compare(x_plus_1, x) == PolyCmp::Greater);
    CHECK(poly_compare(x, x) == PolyCmp::GreaterEqual);
    CHECK(poly_compare(x, y) == PolyCmp::Unknown);
    CHECK(poly_compare(x, x_plus_1) == PolyCmp::Unknown);
}

TEST_CASE("orient_rules weak and strict modes") {
    LinearPolyInterp interp =
        interp_of({{{"a", 0}, {1}}, {{"b", 0}, {1}}, {{"c", 0}, {0}}});
    std::vector<Rule> rules{{c("b"), c("a")}, {c("a"), c("c")}};
    CHECK(orient_rules(interp, rules, OrientMode::Weak) == std::vector<bool>{true, true});

    LinearPolyInterp bad = interp_of({{{"a", 0}, {0}}, {{"b", 0}, {1}}});
    CHECK(orient_rules(bad, {{c("a"), c("b")}}, OrientMode::Weak) == std::vector<bool>{false});

    LinearPolyInterp identity = interp_of({{{"f", 1}, {0, 1}}});
    CHECK(orient_rules(identity, {{ap("f", {v("x")}), v("x")}}, OrientMode::Strict) ==
          std::vector<bool>{false});
}

TEST_CASE("prove_termination accepts a one-rule system") {
    Trs trs = parse_trs("(VAR x) (RULES f(x) -> x)");
    CHECK(prove_termination(trs, {interp_of({{{"f", 1}, {1, 1}}})}).ok);
}

TEST_CASE("prove_termination accepts the diamond system in one round") {
    LinearPolyInterp interp = interp_of(
        {{{"a", 0}, {3}}, {{"b", 0}, {2}}, {{"c", 0}, {2}}, {{"d", 0}, {1}}});
    CHECK(prove_termination(trs_join(), {interp}).ok);
}

TEST_CASE("prove_termination rejects non-terminating systems") {
    LinearPolyInterp interp = interp_of({{{"f", 1}, {1, 1}}, {{"g", 1}, {1, 1}}});
    CheckResult result = prove_termination(trs_r2(), {interp});
    CHECK_FALSE(result.ok);
    CHECK(result.reason.find("not weakly oriented") != std::string::npos);

    // identity interpretations orient everything weakly but remove nothing
    LinearPolyInterp identity = interp_of({{{"f", 1}, {0, 1}}, {{"g", 1}, {0, 1}}});
    CheckResult no_progress = prove_termination(trs_r2(), {identity});
    CHECK_FALSE(no_progress.ok);
    CHECK(no_progress.reason.find("removes no rule") != std::string::npos);
}

TEST_CASE("prove_termination enforces strict monotonicity") {
    LinearPolyInterp flat = interp_of({{{"f", 1}, {5, 0}}});
    CheckResult result = prove_termination(parse_trs("(VAR x) (RULES f(x) -> x)"), {flat});
    CHECK_FALSE(result.ok);
    CHECK(result.reason.find("not strictly monotone") != std::string::npos);
}

TEST_CASE("prove_termination reports leftover rules") {
    // remove only half the rules, then run out of rounds
    LinearPolyInterp interp = interp_of(
        {{{"a", 0}, {3}}, {{"b", 0}, {2}}, {{"c", 0}, {2}}, {{"d", 0}, {2}}});
    CheckResult result = prove_termination(trs_join(), {interp});
    CHECK_FALSE(result.ok);
    CHECK(result.reason.find("rules remain") != std::string::npos);

    CHECK_FALSE(prove_termination(trs_join(), {}).ok);
}

TEST_CASE("prove_termination supports iterated rule removal") {
    // round 1 removes a -> b and a -> c, round 2 the rest
    LinearPolyInterp round1 = interp_of(
        {{{"a", 0}, {3}}, {{"b", 0}, {2}}, {{"c", 0}, {2}}, {{"d", 0}, {2}}});
    LinearPolyInterp round2 = interp_of(
        {{{"a", 0}, {3}}, {{"b", 0}, {2}}, {{"c", 0}, {2}}, {{"d", 0}, {1}}});
    CHECK(prove_termination(trs_join(), {round1, round2}).ok);
}

TEST_CASE("strict comparison is irreflexive") {
    Rng rng(20240606);
    for (int i = 0; i < 200; ++i) {
        LinearPoly p = random_poly(rng);
        CHECK(poly_compare(p, p) == PolyCmp::GreaterEqual);
    }
}

TEST_CASE("symbolic comparison is sound for naturals valuations") {
    Rng rng(20240607);
    std::vector<const char*> vars{"x", "y", "z"};
    for (int i = 0; i < 200; ++i) {
        LinearPoly p = random_poly(rng);
        LinearPoly q = random_poly(rng);
        PolyCmp cmp = poly_compare(p, q);
        if (cmp == PolyCmp::Unknown) continue;
        for (int j = 0; j < 100; ++j) {
            std::map<std::string, Nat> valuation;
            for (const char* var : vars) valuation[var] = Nat(rng.below(50));
            if (cmp == PolyCmp::Greater)
                CHECK(eval_at(p, valuation) > eval_at(q, valuation));
            else
                CHECK(eval_at(p, valuation) >= eval_at(q, valuation));
        }
    }
}

TEST_CASE("weak-then-strict composes to strict at the ground level") {
    Rng rng(20240608);
    for (int i = 0; i < 300; ++i) {
        LinearPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        std::map<std::string, Nat> valuation;
        for (const char* var : {"x", "y", "z"}) valuation[var] = Nat(rng.below(20));
        Nat vp = eval_at(p, valuation), vq = eval_at(q, valuation), vr = eval_at(r, valuation);
        if (vp >= vq && vq > vr) CHECK(vp > vr);
    }
}

TEST_CASE("strict symbolic comparison is closed under substitution") {
    Rng rng(20240609);
    std::vector<Symbol> symbols{{"a", 0}, {"s", 1}, {"p", 2}};
    LinearPolyInterp interp =
        interp_of({{{"a", 0}, {1}}, {{"s", 1}, {1, 2}}, {{"p", 2}, {0, 1, 1}}});
    std::vector<std::string> vars{"x", "y"};
    for (int i = 0; i < 200; ++i) {
        Term s = random_term(rng, symbols, vars, 3);
        Term t = random_term(rng, symbols, vars, 3);
        if (poly_compare(eval_poly(interp, s), eval_poly(interp, t)) != PolyCmp::Greater) continue;
        Substitution sigma;
        for (const std::string& var : vars) sigma.bind(var, random_term(rng, symbols, vars, 2));
        CHECK(poly_compare(eval_poly(interp, sigma.apply(s)), eval_poly(interp, sigma.apply(t))) ==
              PolyCmp::Greater);
    }
}

TEST_CASE("accepted systems admit no long derivations from small terms") {
    LinearPolyInterp interp = interp_of(
        {{{"a", 0}, {3}}, {{"b", 0}, {2}}, {{"c", 0}, {2}}, {{"d", 0}, {1}}});
    REQUIRE(prove_termination(trs_join(), {interp}).ok);

    Rng rng(20240610);
    std::vector<Symbol> symbols{{"a", 0}, {"b", 0}, {"c", 0}, {"d", 0}};
    for (int i = 0; i < 50; ++i) {
        Term start = random_term(rng, symbols, {}, 2);
        Nat value = eval_poly(interp, start).constant;
        std::size_t budget = 10 * static_cast<std::size_t>(value);
        TracedDerivation derivation = random_derivation(rng, trs_join(), start, budget + 1);
        CHECK(derivation.rules_used.size() <= budget);
    }
}
