"""Tests for synthetic connectives and the layer translations."""

import pytest

from ludics.core.behaviours.behaviour import dual
from ludics.core.llp import (
    bullet,
    circ,
    enumerate_formulas,
    layer_actions,
    llp_dual,
    parse_llp,
    parse_synthetic,
    show_synthetic,
    synthetic_decompose,
    synthetic_shape,
)
from ludics.core.llp.translate import circ_context
from ludics.core.typing import DisjointnessError, PolarityError


def test_parse_synthetic():
    """Test variables and printing of a synthetic connective."""
    c = parse_synthetic("!x * (!y + !z)")
    assert c.variables == ("x", "y", "z")
    assert c.positive
    assert show_synthetic(c) == "!x * (!y + !z)"


def test_additives_share_variables():
    """Test that plus and with may reuse a variable."""
    assert parse_synthetic("?x & ?x").variables == ("x",)


def test_disjointness():
    """Test that tensor and par reject shared variables."""
    with pytest.raises(DisjointnessError):
        parse_synthetic("!x * !x")
    with pytest.raises(DisjointnessError):
        parse_synthetic("B | (?x | (?y & ?x))")


def test_synthetic_needs_variables():
    """Test that formulas under ! are rejected."""
    with pytest.raises(PolarityError):
        parse_synthetic("!T * !x")


def test_decompose():
    """Test the split of a formula into its top layer."""
    c, args = synthetic_decompose(parse_llp("!T * (!B + 1)"))
    assert show_synthetic(c) == "!x1 * (!x2 + 1)"
    assert args == [parse_llp("T"), parse_llp("B")]
    same, _ = synthetic_decompose(parse_llp("!T * !T"))
    assert same.variables == ("x1", "x2")


def test_layer_actions():
    """Test the actions of negative and positive layers."""
    assert layer_actions(parse_synthetic("T")) == []
    assert layer_actions(parse_synthetic("B")) == [()]
    assert layer_actions(parse_synthetic("?x | (?y & B)")) == [("x", "y"), ("x",)]
    assert layer_actions(parse_synthetic("!x * (!y + 1)")) == [("x", "y"), ("x",)]


def test_bullet_names():
    """Test the action names of a translated layer."""
    b = bullet(parse_llp("B | (?1 | (?1 & ?1))"))
    assert not b.positive
    assert b.connective.names == ("wp.*.wp.up.pi1.up", "wp.*.wp.up.pi2.up")
    assert len(b.args) == 3
    assert all(a.positive for a in b.args)


def test_bullet_deterministic():
    """Test that a formula always gives the same behaviour."""
    for f in enumerate_formulas(4):
        assert bullet(f).key == bullet(f).key
        assert bullet(f).polarity == f.polarity


def test_bullet_commutes_with_dual():
    """Test that bullet of the dual is the dual behaviour."""
    for f in enumerate_formulas(4):
        assert bullet(llp_dual(f)).key == dual(bullet(f)).key


def test_circ_units():
    """Test reading back the units."""
    assert circ(bullet(parse_llp("1"))) == parse_llp("1")
    assert circ(bullet(parse_llp("0"))) == parse_llp("0")
    assert circ(bullet(parse_llp("T"))) == parse_llp("T")
    assert circ(bullet(parse_llp("B"))) == parse_llp("B")


def test_circ_bullet_shape():
    """Test that circ after bullet is the identity up to layer shape."""
    formulas = enumerate_formulas(4)[::2] + [
        parse_llp("1 * (!(B | T) * (!T + !B))"),
        parse_llp("B | (?1 | (?1 & ?1))"),
        parse_llp("!(?1 & ?0) + 1 * 1"),
    ]
    assert len(formulas) >= 30
    for f in formulas:
        g = circ(bullet(f))
        assert g.polarity == f.polarity
        assert synthetic_shape(g) == synthetic_shape(f)


def test_shape_ignores_order():
    """Test that reordering inside a layer keeps the shape."""
    assert synthetic_shape(parse_llp("1 + !T")) == synthetic_shape(parse_llp("!T + 1"))
    assert synthetic_shape(parse_llp("?1 | B")) == synthetic_shape(parse_llp("?1"))
    assert synthetic_shape(parse_llp("?1")) != synthetic_shape(parse_llp("?0"))


def test_circ_context():
    """Test reading back a translated context."""
    from ludics.core.behaviours.behaviour import Context

    ctx = Context(
        entries=(("x1", bullet(parse_llp("1"))),), slot=bullet(parse_llp("B"))
    )
    s = circ_context(ctx)
    assert str(s) == "|- ?1, B"
