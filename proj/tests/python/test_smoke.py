"""Smoke tests for the python bindings."""

import pytest

import confcheck


R3 = "(VAR x) (RULES a -> f(x) f(x) -> b)"
R5 = "(VAR x) (RULES a -> b1 a -> b2 x -> f(x))"
AUTOMATA_CERT = (
    "(nonconfluence (fork a (steps (e 1 ())) (steps (e 2 ())) "
    "(automata (aut (states 1) (final 1) (trans ((f 1) 1) ((b1) 1))) "
    "(aut (states 1) (final 1) (trans ((f 1) 1) ((b2) 1))) (compat) (compat))))"
)


def test_version():
    assert confcheck.__version__


def test_parse_and_critical_pairs():
    trs = confcheck.parse_trs(R3)
    assert trs.rule_count == 2
    assert trs.rules == ["a -> f(x)", "f(x) -> b"]
    assert confcheck.critical_pairs(trs) == [("f(x0)", "f(x1)")]
    assert confcheck.variable_conditions(trs) == (True, False)


def test_certify_strongly_closed():
    trs = confcheck.parse_trs(R3)
    cert = confcheck.parse_certificate("(confluence (strongly-closed 1))")
    verdict = confcheck.check_certificate(trs, cert)
    assert verdict.certified
    assert str(verdict) == "CERTIFIED"
    assert bool(verdict)


def test_reject_with_witness():
    trs = confcheck.parse_trs("(VAR y) (RULES a -> y)")
    cert = confcheck.parse_certificate("(confluence (weakly-orthogonal))")
    verdict = confcheck.check_certificate(trs, cert)
    assert not verdict.certified
    assert "(x0, x1)" in verdict.message
    assert str(verdict).startswith("REJECTED: ")


def test_nonconfluence_automata_end_to_end():
    trs = confcheck.parse_trs(R5)
    verdict = confcheck.check_certificate(trs, confcheck.parse_certificate(AUTOMATA_CERT))
    assert verdict.certified


def test_rewriting_helpers():
    trs = confcheck.parse_trs(R5)
    assert sorted(confcheck.successors(trs, "a")) == ["b1", "b2", "f(a)"]
    diamond = confcheck.parse_trs("(RULES a -> b a -> c b -> d c -> d)")
    assert confcheck.normalize(diamond, "a", 10) == "d"
    loop = confcheck.parse_trs("(VAR x) (RULES x -> f(x))")
    assert confcheck.normalize(loop, "a", 5) is None


def test_parse_errors_are_value_errors():
    with pytest.raises(ValueError):
        confcheck.parse_trs("(RULES a -> ⊥)")
    with pytest.raises(ValueError):
        confcheck.parse_certificate("(confluence (made-up-technique))")
