"""Tests for formulas and strict sequents."""

import pytest

from ludics.core.llp import (
    StrictSequent,
    enumerate_formulas,
    formula,
    llp_dual,
    parse_llp,
    parse_llp_list,
    show_llp,
    size,
)
from ludics.core.typing import (
    DesignSyntaxError,
    NonStrictSequentError,
    PolarityError,
)


def test_parse_units():
    """Test the four units."""
    assert parse_llp("0") == formula("zero")
    assert parse_llp("1") == formula("one")
    assert parse_llp("T") == formula("top")
    assert parse_llp("B") == formula("bot")


def test_precedence_and_printing():
    """Test that additives bind looser than multiplicatives."""
    f = parse_llp("1 * 1 + 0")
    assert f.kind == "plus"
    assert f.args[0].kind == "tensor"
    assert show_llp(parse_llp("1*(!(B|T) * (!T + !B))")) == (
        "1 * (!(B | T) * (!T + !B))"
    )


def test_left_associative():
    """Test that binary connectives group to the left."""
    f = parse_llp("1 * 0 * 1")
    assert f.args[0] == parse_llp("1 * 0")
    assert show_llp(f) == "1 * 0 * 1"
    assert show_llp(parse_llp("1 * (0 * 1)")) == "1 * (0 * 1)"


def test_polarity_errors():
    """Test that mixed polarities are rejected."""
    with pytest.raises(PolarityError):
        parse_llp("1 * B")
    with pytest.raises(PolarityError):
        parse_llp("!1")
    with pytest.raises(PolarityError):
        parse_llp("?T")


def test_syntax_errors():
    """Test malformed input and variables."""
    with pytest.raises(DesignSyntaxError):
        parse_llp("1 *")
    with pytest.raises(DesignSyntaxError):
        parse_llp("!x")


def test_dual():
    """Test linear negation."""
    assert llp_dual(parse_llp("1")) == parse_llp("B")
    assert llp_dual(parse_llp("!(B|T)")) == parse_llp("?(1*0)")
    f = parse_llp("!(?1 & T) + 0")
    assert llp_dual(llp_dual(f)) == f
    assert llp_dual(f).polarity != f.polarity


def test_size():
    """Test formula size."""
    assert size(parse_llp("1")) == 1
    assert size(parse_llp("!(B | T)")) == 4


def test_enumerate_formulas():
    """Test enumeration counts and order."""
    everything = enumerate_formulas(4)
    assert len(everything) == 80
    assert len(set(everything)) == 80
    assert [size(f) for f in everything] == sorted(size(f) for f in everything)
    assert everything[:4] == [parse_llp(t) for t in ("0", "1", "T", "B")]
    assert len(enumerate_formulas(3, "positive")) == 14
    assert all(f.positive for f in enumerate_formulas(3, "positive"))


def test_strict_sequent_parse():
    """Test reading a sequent."""
    s = StrictSequent.parse("|- ?1, ?(1 + 0), B")
    assert s.whynots == (parse_llp("1"), parse_llp("1 + 0"))
    assert s.rest == parse_llp("B")
    assert str(s) == "|- ?1, ?(1 + 0), B"
    assert StrictSequent.parse("|-") == StrictSequent()
    assert StrictSequent.parse("?1") == StrictSequent.of(parse_llp_list("?1"))


def test_non_strict_sequent():
    """Test that two formulas outside ? are rejected."""
    with pytest.raises(NonStrictSequentError):
        StrictSequent.parse("|- 1, B")
    with pytest.raises(NonStrictSequentError):
        StrictSequent.of([parse_llp("1"), parse_llp("0")])
