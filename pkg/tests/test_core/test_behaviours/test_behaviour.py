"""Tests for connectives and logical behaviours."""

import pytest

from ludics.core.behaviours.behaviour import (
    Context,
    bot,
    down,
    dual,
    enumerate_behaviours,
    library_label,
    negative,
    one,
    par,
    plus,
    positive,
    show_behaviour,
    tensor,
    top,
    up,
    with_,
    zero,
)
from ludics.core.behaviours.connective import TOP, WITH, make_connective
from ludics.core.typing import (
    ConnectiveError,
    DuplicateVariableError,
    PolarityError,
)


def test_library_table():
    """Test the linear-logic connectives."""
    assert WITH.params == ("x1", "x2")
    assert [str(a) for a in WITH.actions] == ["pi1(x1)", "pi2(x2)"]
    assert TOP.params == () and TOP.actions == ()
    assert one().connective.names == ("*",)
    assert zero().connective.names == ()


def test_make_connective():
    """Test a declared four-place connective."""
    alpha = make_connective(
        ("x", "y", "z", "t"),
        [("a", ("x", "y", "t")), ("b", ("t", "x")), ("c", ("y", "x"))],
    )
    assert alpha.arity == 4
    assert alpha.indices(alpha.action("b")) == (3, 0)
    renamed = make_connective(
        ("p", "q", "r", "s"),
        [("a", ("p", "q", "s")), ("b", ("s", "p")), ("c", ("q", "p"))],
    )
    assert alpha.same(renamed)


@pytest.mark.parametrize(
    "params, actions",
    [
        (("x",), [("a", ("x",)), ("a", ())]),
        (("x",), [("a", ("y",))]),
        (("x",), [("a", ("x", "x"))]),
        (("x", "x"), []),
    ],
)
def test_connective_errors(params, actions):
    """Test ill-formed connectives."""
    with pytest.raises(ConnectiveError):
        make_connective(params, actions)


def test_dual():
    """Test that dual flips polarity and is an involution."""
    assert dual(one()) == bot()
    assert dual(tensor(bot(), top())) == par(one(), zero())
    b = plus(up(one()), with_(zero(), one()))
    assert dual(dual(b)) == b


def test_polarity_alternates():
    """Test that arguments have the opposite polarity."""
    with pytest.raises(PolarityError):
        positive(WITH, one(), one())
    with pytest.raises(ConnectiveError):
        negative(WITH, one())


def test_show_behaviour():
    """Test printing with library labels."""
    assert show_behaviour(tensor(bot(), top())) == "tensor(bot, top)"
    assert show_behaviour(down(up(one()))) == "down(up(one))"
    assert library_label(bot()) == "bot"
    assert library_label(one()) == "one"


def test_enumerate_behaviours():
    """Test the depth-bounded enumeration."""
    shallow = enumerate_behaviours(1)
    assert sorted(show_behaviour(b) for b in shallow) == ["one", "zero"]
    deeper = enumerate_behaviours(2)
    assert all(b.positive and b.depth <= 2 for b in deeper)
    assert down(top()) in deeper
    assert tensor(bot(), top()) in deeper
    assert len(set(b.key for b in deeper)) == len(deeper)


def test_context():
    """Test context well-formedness."""
    ctx = Context.of({"x": one(), "y": zero()}, slot=top())
    assert ctx.variables == ("x", "y")
    assert ctx.behaviour_of("y") == zero()
    assert str(ctx) == "x: one, y: zero, top"
    with pytest.raises(DuplicateVariableError):
        Context(entries=(("x", one()), ("x", zero())))
    with pytest.raises(PolarityError):
        Context.of({"x": bot()})
