"""Tests for the text formats of designs, sequents and behaviours."""

import pytest

from ludics.core.behaviours.behaviour import bot, down, one, tensor, top, up
from ludics.core.designs.design import Conj, Predesign, Sum, Var
from ludics.core.designs.signature import Signature
from ludics.core.syntax import (
    parse_behaviour,
    parse_context,
    parse_design,
    parse_sequent,
)
from ludics.core.typing import (
    ArityError,
    DesignSyntaxError,
    DuplicateVariableError,
    GuardednessError,
    PolarityError,
    UnboundDefinitionError,
    UnknownNameError,
)


def test_parse_cut():
    """Test a predesign whose head is a sum."""
    d, _ = parse_design("{ a(x) => daimon } | a< {} >")
    assert isinstance(d, Conj)
    (c,) = d.conjuncts
    assert isinstance(c, Predesign)
    assert isinstance(c.head, Sum)
    assert c.args == (Sum(),)


def test_parse_definitions():
    """Test a guarded recursive definition."""
    d, defs = parse_design("def inf(x) = x | down< { up(y) => inf(x) } >")
    assert d is None
    assert "inf" in defs
    assert defs.lookup("inf").params == ("x",)


def test_signature_block():
    """Test declared names and derived names."""
    d, defs = parse_design("sig { a/1, b/0 }\nx|a<{b => daimon}>")
    assert defs.sig.names == {"a": 1, "b": 0}
    assert d is not None
    assert Signature(names={"a": 0, "b": 2}).arity("wp.a.b") == 2
    assert Signature().arity("pi1.up") == 1


def test_parse_leaves_given_signature_alone():
    """Test that names observed while parsing stay in the parse's copy."""
    sig = Signature(schematic=True)
    _, defs = parse_design("x|a<{b => daimon}>", sig)
    assert defs.sig.names == {"a": 1, "b": 0}
    assert sig.names == {}
    assert defs.sig is not sig


def test_syntax_error_position():
    """Test that syntax errors carry a position."""
    with pytest.raises(DesignSyntaxError) as info:
        parse_design("x|a<")
    assert info.value.position is not None
    assert "line" in str(info.value)


@pytest.mark.parametrize(
    "text, error",
    [
        ("x|a<y> /\\ z|a", ArityError),
        ("sig { a/0 }\nx|b", UnknownNameError),
        ("F(x)", UnboundDefinitionError),
        ("{a(y, y) => y|b}", DuplicateVariableError),
        ("def F(x) = F(x)\nF(x)", GuardednessError),
        ("{a => x|b; a => x|c}", DesignSyntaxError),
        ("_x|a", DesignSyntaxError),
    ],
)
def test_parse_errors(text, error):
    """Test the errors of malformed design files."""
    with pytest.raises(error):
        parse_design(text)


def test_parse_sequent():
    """Test a sequent file."""
    d, ctx, _ = parse_sequent("x0|* |- x0: one")
    assert d.conjuncts[0].head == Var("x0")
    assert ctx.variables == ("x0",)
    assert ctx.behaviour_of("x0") == one()
    _, ctx, _ = parse_sequent("{up(y) => y|*} |- x: one, up(one)")
    assert ctx.slot == up(one())


def test_parse_behaviour():
    """Test the linear-logic keywords and declared connectives."""
    assert parse_behaviour("tensor(bot, top)") == tensor(bot(), top())
    assert parse_behaviour("down(up(one))") == down(up(one()))
    b = parse_behaviour("conn alpha(x, y) { a(x) b(x, y) }\npos alpha<bot, top>")
    assert b.positive
    assert b.connective.names == ("a", "b")
    with pytest.raises(DesignSyntaxError):
        parse_behaviour("pos beta<bot>")


def test_parse_context():
    """Test contexts with one slot at most."""
    ctx = parse_context("x: one, y: down(top), bot")
    assert ctx.variables == ("x", "y")
    assert ctx.slot == bot()
    with pytest.raises(PolarityError):
        parse_context("bot, top")
