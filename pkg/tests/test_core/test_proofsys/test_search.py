"""Tests for next_rule and breadth-first proof search."""

import pytest

from ludics.core.behaviours.behaviour import Context, one
from ludics.core.designs.design import OMEGA
from ludics.core.proofsys import (
    Derived,
    Failed,
    OutOfFuel,
    PositiveRule,
    RuleInstance,
    Sequent,
    StuckName,
    StuckOmega,
    check_derivation,
    next_rule,
    prove,
)
from ludics.core.syntax import parse_design, parse_sequent
from ludics.core.typing import LudicsError, NotAProofError, OpenDesignError

INF = "def inf(x) = x|down<{up(y) => inf(x)}>\ninf(x0) |- x0: down(up(one))"
SHARED = "x0|wp<{* => z|*}, {* => z|*}> |- x0: tensor(bot, bot), z: one"


def sequent(text):
    d, ctx, defs = parse_sequent(text)
    return Sequent(d, ctx), defs


def test_next_rule_positive():
    """Test the positive rule on the unit."""
    s, defs = sequent("x0|* |- x0: one")
    step = next_rule(s, defs)
    assert isinstance(step, RuleInstance)
    assert isinstance(step.rule, PositiveRule)
    assert step.premises == ()
    assert str(step.rule) == "(one, *) on x0"


def test_next_rule_negative_keeps_context():
    """Test that negative premises extend the context."""
    s, defs = sequent("{up(y) => y|*} |- z: one, up(one)")
    step = next_rule(s, defs)
    (premise,) = step.premises
    assert premise.context.variables == ("z", "x")
    assert premise.positive


def test_next_rule_stuck():
    """Test both ways search gets stuck."""
    s, defs = sequent("x0|b |- x0: one")
    step = next_rule(s, defs)
    assert isinstance(step, StuckName)
    assert step.name == "b"
    assert isinstance(next_rule(Sequent(OMEGA, Context.of({"x": one()}))), StuckOmega)


def test_next_rule_rejects_non_proofs():
    """Test conjunctions and cuts are not proof subjects."""
    s, defs = sequent("x0|* /\\ x0|a |- x0: one")
    with pytest.raises(NotAProofError):
        next_rule(s, defs)
    s, defs = sequent("{*() => daimon}|* |-")
    with pytest.raises(NotAProofError):
        next_rule(s, defs)


def test_sequent_must_cover_free_variables():
    """Test that subjects stay within their context."""
    d, _ = parse_design("y|*")
    with pytest.raises(OpenDesignError):
        Sequent(d, Context.of({"x": one()}))


def test_prove_unit():
    """Test a one-node derivation."""
    s, defs = sequent("x0|* |- x0: one")
    result = prove(s, defs)
    assert isinstance(result, Derived)
    assert result.derivation.size == 1
    assert result.derivation.show() == "(one, *) on x0 :: x0|* |- x0: one"
    assert check_derivation(result.derivation, defs)


def test_prove_with():
    """Test a negative subject against a with."""
    s, defs = sequent("{pi1(x) => x|*; pi2(y) => y|*} |- with(one, one)")
    result = prove(s, defs)
    assert isinstance(result, Derived)
    assert result.derivation.size == 3
    assert check_derivation(result.derivation, defs)


def test_prove_failures():
    """Test stuck-name and stuck-omega failures."""
    s, defs = sequent("x0|b |- x0: one")
    result = prove(s, defs)
    assert isinstance(result, Failed)
    assert result.kind == "stuck-name"
    assert len(result.branch) == 1

    s, defs = sequent("{pi1(x) => x|*} |- with(one, one)")
    result = prove(s, defs)
    assert isinstance(result, Failed)
    assert result.kind == "stuck-omega"
    assert result.branch[0].index == 1


def test_prove_periodic():
    """Test that a repeated positive sequent is reported as periodic."""
    s, defs = sequent(INF)
    result = prove(s, defs)
    assert isinstance(result, OutOfFuel)
    assert result.periodic == (0, 2)


def test_prove_out_of_fuel():
    """Test the fuel bound on expanded nodes."""
    s, defs = sequent("{pi1(x) => x|*; pi2(y) => y|*} |- with(one, one)")
    result = prove(s, defs, fuel=1)
    assert isinstance(result, OutOfFuel)
    assert result.periodic is None
    assert result.nodes == 1


def test_prove_linear():
    """Test the linear rule splits and consumes the context."""
    s, defs = sequent("x0|down<{up(y) => y|*}> |- x0: down(up(one)), z: one")
    result = prove(s, defs, linear=True)
    assert isinstance(result, Derived)
    premise = result.derivation.premises[0].sequent
    assert premise.context.variables == ()
    assert str(result.derivation.rule).endswith("_lin on x0")
    assert check_derivation(result.derivation, defs)


def test_prove_linear_shared_variable():
    """Test that a variable used by two premises blocks the linear rule."""
    s, defs = sequent(SHARED)
    assert isinstance(prove(s, defs), Derived)
    with pytest.raises(LudicsError):
        prove(s, defs, linear=True)


def test_prove_records_trace(tmp_path):
    """Test that the search reports to a tracer."""
    from ludics.core.generic.trace import TraceManager

    tracer = TraceManager(persist_dir=str(tmp_path))
    s, defs = sequent("x0|b |- x0: one")
    prove(s, defs, tracer=tracer)
    assert len(tracer) == 1
    df = tracer.to_df()
    assert df.iloc[0]["verdict"] == "failed"
    assert df.iloc[0]["reason"] == "stuck-name"
