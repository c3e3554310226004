"""Soundness and completeness of proof search over enumerated corpora."""

import pytest

from ludics.core.behaviours.behaviour import Context, dual, enumerate_behaviours
from ludics.core.behaviours.membership import sample_members
from ludics.core.countermodel import (
    build_countermodel,
    open_branch,
    verify_countermodel_membership,
    verify_defeat,
)
from ludics.core.designs.defsystem import DefSystem
from ludics.core.designs.design import NEGATIVE, POSITIVE, X0
from ludics.core.designs.printer import show
from ludics.core.normalize.reduction import orthogonal
from ludics.core.proofsys import (
    Derived,
    Sequent,
    check_derivation,
    enumerate_proofs,
    prove,
)


def context_for(b):
    return Context.of({X0: b}) if b.positive else Context(slot=b)


def proofs(depth, size, polarity=POSITIVE):
    """Every enumerated ``(behaviour, subject, derivation)``."""
    for b in enumerate_behaviours(depth, polarity):
        for d, derivation in enumerate_proofs(context_for(b), size):
            yield b, d, derivation


def check_soundness(depth, size):
    defs = DefSystem()
    checked = 0
    for b, p, derivation in proofs(depth, size):
        assert check_derivation(derivation, defs)
        counters = sample_members(dual(b), 20, defs)
        assert counters, show(p)
        for k in counters:
            outcome = orthogonal(p, k, defs)
            assert outcome.daimon, f"{show(p)} against {show(k)}"
        checked += 1
    return checked


def test_soundness():
    """Test that every small proof normalizes to the daimon against the dual."""
    assert check_soundness(depth=2, size=4) >= 5


@pytest.mark.slow
def test_soundness_exhaustive():
    """Test soundness over behaviours of depth 3 and proofs of size 6."""
    assert check_soundness(depth=3, size=6) >= 50


@pytest.mark.parametrize("polarity", [POSITIVE, NEGATIVE])
def test_derivation_or_countermodel(polarity):
    """Test that each sequent has a derivation or a defeating model, not both."""
    defs = DefSystem()
    behaviours = enumerate_behaviours(2, polarity)
    subjects = {d.key: d for _, d, _ in proofs(2, 4, polarity)}
    derived = refuted = 0
    for b in behaviours:
        ctx = context_for(b)
        for d in subjects.values():
            s = Sequent(d, ctx)
            result = open_branch(s, defs)
            if isinstance(result, Derived):
                assert isinstance(prove(s, defs), Derived)
                assert check_derivation(result.derivation, defs)
                derived += 1
                continue
            assert not isinstance(prove(s, defs), Derived)
            m = build_countermodel(result)
            assert m.exact, str(s)
            assert verify_defeat(d, ctx, m).omega, str(s)
            assert verify_countermodel_membership(m, ctx).holds, str(s)
            refuted += 1
    assert derived > 0
    assert refuted > 0
