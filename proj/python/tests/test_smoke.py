import json
from fractions import Fraction

import pytest

import hyperlog


def test_prelinearity_is_valid():
    r = hyperlog.prove("(A -> B) \\/ (B -> A)")
    assert r["valid"]
    assert r["calculus"] == "GA"
    assert hyperlog.check_proof(r["proof"], "GA")


@pytest.mark.parametrize("calculus", ["hyper", "term", "label"])
def test_lukasiewicz_countermodel(calculus):
    r = hyperlog.prove("p \\/ (p => bot)", logic="l", calculus=calculus)
    assert not r["valid"]
    v = {k: Fraction(x) for k, x in r["countermodel"].items()}
    assert -1 <= v["p"] <= 0
    value = hyperlog.evaluate("p \\/ (p => bot)", "l", r["countermodel"])
    assert Fraction(value) < 0


def test_single_elab_proof_checks():
    r = hyperlog.prove("p, q |- p + q", calculus="single-elab")
    assert r["valid"]
    assert hyperlog.check_proof(r["proof"], "GA_s")


def test_corrupted_proof_is_rejected():
    proof = json.loads(hyperlog.prove("p |- p")["proof"])
    proof["conclusion"] = "p |- q"
    assert not hyperlog.check_proof(json.dumps(proof), "GA")


def test_translate():
    assert hyperlog.translate("p =>> p", mode="enthymematic") == "t /\\ p -> p"


def test_errors():
    with pytest.raises(ValueError):
        hyperlog.prove("(p")
    with pytest.raises(ValueError):
        hyperlog.prove("p", logic="l", calculus="single-elab")
