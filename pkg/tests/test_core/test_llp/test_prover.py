"""Tests for the two provers of strict sequents."""

import pytest

from ludics.core.designs.printer import show
from ludics.core.llp import (
    StrictSequent,
    enumerate_formulas,
    formula,
    least_fixpoint,
    prove_llp,
    prove_llp_syn_direct,
    reachable,
    reachable_sequents,
)
from ludics.core.typing import FuelExhaustedError, NonStrictSequentError


@pytest.mark.parametrize(
    "text, derivable",
    [
        ("|- 1", True),
        ("|- 0", False),
        ("|- T", True),
        ("|- B", False),
        ("|- B | T", True),
        ("|- !T", True),
        ("|- !B", False),
        ("|- ?1", True),
        ("|- ?0", False),
        ("|- ?1, B", True),
        ("|- ?1, 0", False),
        ("|- ?(0 + 0), !(?1 & ?0)", False),
        ("|- ?(0 + 0), !(?1 & ?(0 + 1))", True),
    ],
)
def test_known_sequents(text, derivable):
    """Test both provers on hand-checked sequents."""
    assert prove_llp_syn_direct(text).derivable is derivable
    assert prove_llp(text).derivable is derivable


def test_proof_design_of_one():
    """Test the proof design read off a derivation."""
    result = prove_llp("|- 1")
    assert result.verdict == "derivable"
    assert show(result.subject) == "x0|*"
    assert result.derivation is not None
    assert result.context.variables == ("x0",)


def test_underivable_has_no_design():
    """Test the result of an underivable sequent."""
    result = prove_llp("|- 0")
    assert result.verdict == "underivable"
    assert result.subject is None
    assert result.states >= 1


def test_provers_agree_on_formulas():
    """Test that both provers agree on every small formula."""
    for f in enumerate_formulas(4):
        s = StrictSequent(rest=f)
        assert prove_llp(s).derivable == prove_llp_syn_direct(s).derivable, str(s)


def test_provers_agree_under_whynot():
    """Test agreement on sequents with a ?-formula."""
    for p in enumerate_formulas(2, "positive"):
        for f in enumerate_formulas(3):
            s = StrictSequent(whynots=(p,), rest=f)
            assert prove_llp(s).derivable == prove_llp_syn_direct(s).derivable, str(
                s
            )


def test_reachable_sequents_are_strict():
    """Test the sequents reached from a root."""
    reached = reachable_sequents("|- !(?1 | B)")
    assert reached[0] == StrictSequent.parse("|- !(?1 | B)")
    assert len(reached) == 4
    assert StrictSequent.parse("|- ?1, 1") in reached
    for s in reached:
        assert all(p.positive for p in s.whynots)


def test_non_strict_input():
    """Test that provers reject a non-strict sequent."""
    with pytest.raises(NonStrictSequentError):
        prove_llp("|- 1, 1")
    with pytest.raises(NonStrictSequentError):
        prove_llp_syn_direct([formula("one"), formula("bot")])


def test_fuel():
    """Test that a small fuel budget stops the search."""
    with pytest.raises(FuelExhaustedError):
        prove_llp_syn_direct("|- !(?1 | B)", fuel=2)


def test_least_fixpoint():
    """Test the generic fixpoint on a small graph."""
    graph = {
        "a": [("r", ("b", "c")), ("s", ("d",))],
        "b": [("ax", ())],
        "c": [("loop", ("c",))],
        "d": [("ax", ())],
    }
    fix = least_fixpoint("a", graph.__getitem__, fuel=10)
    assert fix.derivable
    assert fix.chosen("a") == ("s", ("d",))
    assert "c" not in fix.witness
    assert set(reachable("a", graph.__getitem__, fuel=10)) == set(graph)
