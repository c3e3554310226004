"""Tests for meets, the order and the negative daimon."""

import pytest

from ludics.core.designs.algebra import big_meet, daimon_minus, leq, meet
from ludics.core.designs.defsystem import DefSystem
from ludics.core.designs.design import DAIMON, OMEGA, Sum, Var
from ludics.core.designs.equiv import equiv
from ludics.core.designs.printer import show
from ludics.core.syntax import parse_design
from ludics.core.typing import PolarityError


def design(text):
    d, _ = parse_design(text)
    return d


def test_meet_of_positive_designs():
    """Test that the meet collects conjuncts."""
    p, q = design("x|a"), design("y|b")
    both = meet(p, q)
    assert len(both.conjuncts) == 2
    assert leq(both, p)
    assert leq(both, q)
    assert not leq(p, both)


def test_meet_units():
    """Test the daimon as unit and Omega as absorbing element."""
    p = design("x|a<{b => daimon}>")
    assert meet(DAIMON, p) == p
    assert meet(p, OMEGA) == OMEGA
    assert meet(p, p) == p


def test_meet_of_sums():
    """Test that the meet of sums keeps shared names."""
    n = design("{a => x|c; b => daimon}")
    m = design("{a => y|d}")
    out = meet(n, m)
    assert isinstance(out, Sum)
    assert out.names == ("a",)
    assert len(out.get("a").body.conjuncts) == 2


def test_meet_aligns_binders():
    """Test that branches binding different names are aligned."""
    out = meet(design("{a(u) => u|c}"), design("{a(v) => v|d}"))
    branch = out.get("a")
    assert branch.params == ("u",)
    assert {show(c) for c in branch.body.conjuncts} == {"u|c", "u|d"}


def test_meet_polarity_errors():
    """Test that mixed or variable operands are rejected."""
    with pytest.raises(PolarityError):
        meet(design("x|a"), design("{a => daimon}"))
    with pytest.raises(PolarityError):
        meet(Var("x"), design("x|a"))


def test_big_meet():
    """Test empty and non-empty big meets."""
    assert big_meet([]) == DAIMON
    assert big_meet([], negative=True, names={"a": 1}) == daimon_minus({"a": 1})
    assert show(daimon_minus({"a": 1, "b": 0})) == "{a(x1) => daimon; b() => daimon}"
    p, q = design("x|a"), design("y|b")
    assert big_meet([p, q]) == big_meet([q, p])


def test_leq():
    """Test the order on positive designs."""
    p = design("x|a")
    assert leq(OMEGA, p)
    assert not leq(p, OMEGA)
    assert leq(p, DAIMON)
    assert leq(p, p)


def test_meet_laws(random_designs):
    """Test the semilattice laws of the meet on random positive designs."""
    gen = random_designs(seed=41)
    defs = DefSystem()
    for _ in range(500):
        p, q, r = (gen.positive(("x", "y"), depth=4) for _ in range(3))
        assert equiv(meet(p, p, defs), p, defs)
        assert equiv(meet(p, q, defs), meet(q, p, defs), defs)
        left = meet(meet(p, q, defs), r, defs)
        right = meet(p, meet(q, r, defs), defs)
        assert equiv(left, right, defs)
        assert meet(p, OMEGA, defs) == OMEGA
        assert equiv(meet(DAIMON, p, defs), p, defs)
        assert leq(meet(p, q, defs), p, defs)
