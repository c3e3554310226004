"""Tests for derivation checking and proof enumeration."""

import pytest

from ludics.core.behaviours.behaviour import Context, down, one, up, with_, zero
from ludics.core.designs.defsystem import DefSystem
from ludics.core.designs.design import DAIMON
from ludics.core.designs.printer import show
from ludics.core.designs.substitute import substitute
from ludics.core.proofsys import (
    CutRule,
    DaimonRule,
    Derivation,
    Derived,
    Sequent,
    check_cut_derivation,
    check_derivation,
    enumerate_proofs,
    material_subject,
    prove,
    validate_derivation,
)
from ludics.core.syntax import parse_sequent
from ludics.core.typing import DerivationError

LEFT = "x0|down<{up(y) => y|*}> |- x0: down(up(one)), z: one"
RIGHT = "{up(y) => y|down<{* => z|*}>} |- z: one, up(down(bot))"


def derive(text):
    d, ctx, defs = parse_sequent(text)
    result = prove(Sequent(d, ctx), defs)
    assert isinstance(result, Derived)
    return result.derivation


@pytest.fixture
def cut_derivation():
    """A cut on x0 between a proof of down(up(one)) and one of its dual."""
    left, right = derive(LEFT), derive(RIGHT)
    subject = substitute(
        left.sequent.subject, {"x0": right.sequent.subject}, DefSystem()
    )
    conclusion = Sequent(subject, Context.of({"z": one()}))
    return Derivation(conclusion, CutRule("x0", down(up(one()))), (left, right))


def test_missing_premises_are_reported():
    """Test that dropping premises breaks the root node."""
    good = derive(LEFT)
    bad = Derivation(good.sequent, good.rule, ())
    assert not check_derivation(bad)
    with pytest.raises(DerivationError) as info:
        validate_derivation(bad)
    assert info.value.path == ()


def test_wrong_premise_subject_is_reported():
    """Test that a premise must carry the body of its branch."""
    good = derive("{pi1(x) => x|*; pi2(y) => y|*} |- with(one, one)")
    d, ctx, _ = parse_sequent("{pi1(x) => x|*; pi2(y) => y|a} |- with(one, one)")
    bad = Derivation(Sequent(d, ctx), good.rule, good.premises)
    with pytest.raises(DerivationError) as info:
        validate_derivation(bad)
    assert info.value.path == ()


def test_daimon_rule_is_not_a_proof_rule():
    """Test that models do not pass the proof checker."""
    proofs = enumerate_proofs(Context.of({"x0": one()}), 1, daimon=True)
    derivation = next(p for d, p in proofs if d == DAIMON)
    assert isinstance(derivation.rule, DaimonRule)
    assert not check_derivation(derivation)


def test_cut_needs_cut_mode(cut_derivation):
    """Test that cuts are refused by the cut-free checker."""
    assert not check_derivation(cut_derivation)


def test_cut_derivation(cut_derivation):
    """Test a valid cut and the normal form of its conclusion."""
    ok, nf = check_cut_derivation(cut_derivation)
    assert ok
    assert show(nf) == "z|*"


def test_cut_with_wrong_lemma(cut_derivation):
    """Test that the lemma must match the left premise."""
    bad = Derivation(
        cut_derivation.sequent,
        CutRule("x0", down(up(zero()))),
        cut_derivation.premises,
    )
    ok, _ = check_cut_derivation(bad)
    assert not ok


def test_enumerate_units():
    """Test the proofs of the units."""
    proofs = enumerate_proofs(Context.of({"x0": one()}), 1)
    assert [show(d) for d, _ in proofs] == ["x0|*"]
    assert enumerate_proofs(Context.of({"x0": zero()}), 5) == []
    (only,) = enumerate_proofs(Context(slot=with_(one(), one())), 3)
    assert only[1].size == 3


def test_enumerated_proofs_are_derivable():
    """Test enumeration against search, derivation checking and rebuilding."""
    ctx = Context.of({"x0": down(with_(one(), one()))})
    proofs = enumerate_proofs(ctx, 7)
    assert proofs
    sizes = [derivation.size for _, derivation in proofs]
    assert sizes == sorted(sizes)
    for d, derivation in proofs:
        assert isinstance(prove(Sequent(d, ctx)), Derived)
        assert check_derivation(derivation)
        assert material_subject(derivation) == d
