"""Tests for open branches, countermodels and their verification."""

import pytest

from ludics.core.countermodel import (
    OpenBranch,
    Periodic,
    Truncated,
    build_approximant,
    build_countermodel,
    inline,
    open_branch,
    replay,
    verify_countermodel_membership,
    verify_defeat,
)
from ludics.core.designs.design import Predesign, iter_nodes
from ludics.core.designs.printer import show
from ludics.core.proofsys import Derived, Sequent, StuckName, StuckOmega
from ludics.core.syntax import parse_sequent
from ludics.core.typing import AssignmentError

INF = "def inf(x) = x|down<{up(y) => inf(x)}>\ninf(x0) |- x0: down(up(one))"
WITH = "{pi1(x) => x|*; pi2(y) => y|*} |- with(one, one)"


def branch_of(text, fuel=None):
    d, ctx, defs = parse_sequent(text)
    return d, ctx, open_branch(Sequent(d, ctx), defs, fuel)


def test_stuck_name_countermodel():
    """Test the model of a head action outside the connective."""
    d, ctx, branch = branch_of("x0|b |- x0: one")
    assert isinstance(branch, OpenBranch)
    assert len(branch) == 0
    assert branch.finite
    assert isinstance(branch.terminal, StuckName)

    m = build_countermodel(branch)
    assert m.exact and not m.cyclic
    assert show(m.design("x0")) == "{*() => daimon}"
    assert m.show() == ["x0 = {*() => daimon}"]
    assert verify_defeat(d, ctx, m).omega
    assert verify_countermodel_membership(m, ctx).holds


def test_stuck_omega_countermodel_on_negative_root():
    """Test the slot counter-design of a negative root with a missing branch."""
    d, ctx, branch = branch_of("{pi1(x) => x|*} |- with(one, one)")
    assert isinstance(branch.terminal, StuckOmega)
    assert branch.opening.action == "pi2"

    m = build_countermodel(branch)
    assert m.slot is not None
    assert show(m.slot).startswith("x0|pi2<")
    assert m.show()[-1].startswith("slot = x0|pi2<")
    assert verify_defeat(d, ctx, m).omega
    report = verify_countermodel_membership(m, ctx)
    assert report.holds
    assert report.entries[0].variable == "slot"


def test_periodic_countermodel():
    """Test the cyclic model of a branch that repeats."""
    d, ctx, branch = branch_of(INF)
    assert branch.periodic
    assert isinstance(branch.terminal, Periodic)
    assert (branch.terminal.start, branch.terminal.length) == (0, 1)
    assert len(replay(branch, 4)) == 4

    m = build_countermodel(branch)
    assert m.cyclic
    assert m.design("x0") == m.model("x0")
    assert any(line.startswith("def ") for line in m.show())
    outcome = verify_defeat(d, ctx, m)
    assert outcome.omega


@pytest.mark.parametrize("level", [1, 2, 3, 4])
def test_periodic_approximants(level):
    """Test approximants along an unrolled periodic branch."""
    d, ctx, branch = branch_of(INF)
    m = build_approximant(branch, level)
    assert m.level == level
    assert not m.exact and not m.cyclic
    outcome = verify_defeat(d, ctx, m)
    assert not outcome.daimon
    if outcome.unknown:
        assert outcome.progress == 2 * level


def conjunct_count(m, ref):
    return sum(isinstance(n, Predesign) for n in iter_nodes(inline(ref, m.defs)))


def test_approximants_grow_with_level():
    """Test that raising the level never removes conjuncts."""
    d, ctx, branch = branch_of(INF)
    models = [build_approximant(branch, k) for k in (1, 2, 3, 4)]
    for low, high in zip(models, models[1:]):
        for i in low.positions:
            low_count = conjunct_count(low, low.position(i))
            assert low_count <= conjunct_count(high, high.position(i))
        for x in set(low.variables) & set(high.variables):
            low_count = conjunct_count(low, low.model(x))
            assert low_count <= conjunct_count(high, high.model(x))
        assert not verify_defeat(d, ctx, low).daimon
    last = len(models[0].positions) - 1
    assert conjunct_count(models[0], models[0].position(last)) == 0
    assert conjunct_count(models[1], models[1].position(last)) >= 1


def test_truncated_countermodel():
    """Test that an unfinished search gives an approximant."""
    d, ctx, branch = branch_of(WITH, fuel=1)
    assert isinstance(branch.terminal, Truncated)
    m = build_countermodel(branch)
    assert m.level == 0
    outcome = verify_defeat(d, ctx, m)
    assert outcome.unknown
    assert outcome.progress == 0


def test_stuck_approximant_is_exact():
    """Test that a level past a stuck branch gives its exact model."""
    _, _, branch = branch_of("x0|b |- x0: one")
    assert build_approximant(branch, 3).exact
    with pytest.raises(ValueError):
        build_approximant(branch, -1)


def test_derivable_sequent_has_no_countermodel():
    """Test that a derivation is returned as such and refused."""
    _, _, result = branch_of(WITH)
    assert isinstance(result, Derived)
    with pytest.raises(AssignmentError):
        build_countermodel(result)


def test_model_for_another_sequent():
    """Test that verification checks the sequent."""
    _, _, branch = branch_of("x0|b |- x0: one")
    m = build_countermodel(branch)
    d, ctx, _ = parse_sequent("x0|c |- x0: one")
    with pytest.raises(AssignmentError):
        verify_defeat(d, ctx, m)
    with pytest.raises(AssignmentError):
        m.model("y")
