"""Constant-only polarized linear logic: formulas and strict sequents.

Formulas are written in ASCII: ``0 1 T B`` for the units (``B`` is bottom),
``* + | &`` for tensor, plus, par and with, ``!`` and ``?`` as prefixes.
Additives bind looser than multiplicatives; both are left associative.

Example:
    >>> show_llp(parse_llp("1*(!(B|T) * (!T + !B))"))
    '1 * (!(B | T) * (!T + !B))'
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Literal

import lark as L
from lark.exceptions import UnexpectedInput, VisitError
from pydantic import model_validator

from ludics.core.designs.design import NEGATIVE, POSITIVE
from ludics.core.models import Field, FrozenModel
from ludics.core.typing import (
    DesignSyntaxError,
    LudicsError,
    NonStrictSequentError,
    PolarityError,
)

Kind = Literal[
    "zero", "one", "tensor", "plus", "bang", "top", "bot", "par", "with", "why"
]

POSITIVE_KINDS = ("zero", "one", "tensor", "plus", "bang")
NEGATIVE_KINDS = ("top", "bot", "par", "with", "why")

ARITY = {k: 0 for k in ("zero", "one", "top", "bot")}
ARITY.update({k: 1 for k in ("bang", "why")})
ARITY.update({k: 2 for k in ("tensor", "plus", "par", "with")})

DUAL_KIND = dict(zip(POSITIVE_KINDS + NEGATIVE_KINDS, NEGATIVE_KINDS + POSITIVE_KINDS))

SYMBOL = dict(zip(POSITIVE_KINDS + NEGATIVE_KINDS, "01*+!TB|&?"))

# binding strength used by the printer
LEVEL = {"plus": 1, "with": 1, "tensor": 2, "par": 2}


def kind_polarity(kind: str) -> str:
    return POSITIVE if kind in POSITIVE_KINDS else NEGATIVE


class LLPFormula(FrozenModel):
    """A formula of the constant-only fragment.

    ``!`` takes a negative argument and ``?`` a positive one; the other
    connectives keep the polarity of their arguments.
    """

    kind: Kind
    args: tuple[LLPFormula, ...] = ()

    @model_validator(mode="after")
    def validate_shape(self) -> LLPFormula:
        if len(self.args) != ARITY[self.kind]:
            raise PolarityError(
                f"'{SYMBOL[self.kind]}' takes {ARITY[self.kind]} arguments,"
                f" got {len(self.args)}"
            )
        expected = kind_polarity(self.kind)
        if self.kind in ("bang", "why"):
            expected = NEGATIVE if self.kind == "bang" else POSITIVE
        for a in self.args:
            if a.polarity != expected:
                raise PolarityError(
                    f"'{SYMBOL[self.kind]}' expects {expected} arguments,"
                    f" got '{show_llp(a)}'"
                )
        return self

    @property
    def polarity(self) -> str:
        return kind_polarity(self.kind)

    @property
    def positive(self) -> bool:
        return self.polarity == POSITIVE

    def __str__(self) -> str:
        return show_llp(self)


LLPFormula.model_rebuild()


def formula(kind: str, *args: LLPFormula) -> LLPFormula:
    return LLPFormula(kind=kind, args=args)


def llp_dual(f: LLPFormula) -> LLPFormula:
    """Linear negation: De Morgan on every connective, involutive."""
    return LLPFormula(kind=DUAL_KIND[f.kind], args=tuple(llp_dual(a) for a in f.args))


def size(f: LLPFormula) -> int:
    """Number of connectives and units."""
    return 1 + sum(size(a) for a in f.args)


def show_llp(f: LLPFormula, level: int = 0) -> str:
    if not f.args:
        return SYMBOL[f.kind]
    if len(f.args) == 1:
        return SYMBOL[f.kind] + show_llp(f.args[0], 3)
    mine = LEVEL[f.kind]
    left = show_llp(f.args[0], mine)
    right = show_llp(f.args[1], mine + 1)
    text = f"{left} {SYMBOL[f.kind]} {right}"
    return f"({text})" if mine < level else text


GRAMMAR = r"""
?formula: sum
formula_list: sum ("," sum)*

?sum: sum "+" prod          -> plus
    | sum "&" prod          -> with
    | prod

?prod: prod "*" unary       -> tensor
     | prod "|" unary       -> par
     | unary

?unary: "!" unary           -> bang
      | "?" unary           -> why
      | "!" NAME            -> bang_var
      | "?" NAME            -> why_var
      | "0"                 -> zero
      | "1"                 -> one
      | "T"                 -> top
      | "B"                 -> bot
      | "(" sum ")"

NAME: /[a-z][a-z0-9_]*/

%import common.WS
%ignore WS
"""


@lru_cache(maxsize=1)
def get_parser() -> L.Lark:
    return L.Lark(GRAMMAR, start=["formula", "formula_list"], parser="lalr")


class FormulaBuilder(L.Transformer):

    def __default__(self, data, children, meta):
        if data in ARITY:
            return formula(str(data), *children)
        return super().__default__(data, children, meta)

    def bang_var(self, items):
        raise DesignSyntaxError(
            f"Formulas have no variables, found '!{items[0]}'",
            (items[0].line, items[0].column),
        )

    def why_var(self, items):
        raise DesignSyntaxError(
            f"Formulas have no variables, found '?{items[0]}'",
            (items[0].line, items[0].column),
        )

    def formula_list(self, items):
        return list(items)


def parse_tree(text: str, start: str) -> L.Tree:
    """Parse ``text`` with the formula grammar; lark errors are wrapped."""
    try:
        return get_parser().parse(text, start=start)
    except UnexpectedInput as e:
        line = getattr(e, "line", None)
        column = getattr(e, "column", None)
        position = (line, column) if line is not None else None
        raise DesignSyntaxError(f"Unexpected input in '{text}'", position) from None


def transform(builder: L.Transformer, tree: L.Tree):
    try:
        return builder.transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, LudicsError):
            raise e.orig_exc from None
        raise DesignSyntaxError(str(e.orig_exc)) from None


def parse_llp(text: str) -> LLPFormula:
    """Parse one formula.

    Raises:
        DesignSyntaxError: on malformed input.
        PolarityError: when ``!``, ``?`` or a binary connective mixes polarities.
    """
    return transform(FormulaBuilder(), parse_tree(text, "formula"))


def parse_llp_list(text: str) -> list[LLPFormula]:
    """Parse a comma separated list of formulas."""
    return transform(FormulaBuilder(), parse_tree(text, "formula_list"))


class StrictSequent(FrozenModel):
    """``|- ?P1, ..., ?Pn, D`` with at most one formula ``D`` not under ``?``.

    ``whynots`` holds the ``Pi`` themselves.
    """

    whynots: tuple[LLPFormula, ...] = ()
    rest: LLPFormula | None = Field(
        default=None, description="The unrestricted formula, if any"
    )

    @model_validator(mode="after")
    def validate_whynots(self) -> StrictSequent:
        for p in self.whynots:
            if not p.positive:
                raise PolarityError(f"'?{show_llp(p, 3)}' needs a positive formula")
        return self

    @classmethod
    def of(cls, formulas: list[LLPFormula]) -> StrictSequent:
        """Sort ``formulas`` into ``?``-formulas and the unrestricted one.

        Raises:
            NonStrictSequentError: on two or more formulas not under ``?``.
        """
        whynots, rest = [], []
        for f in formulas:
            if f.kind == "why":
                whynots.append(f.args[0])
            else:
                rest.append(f)
        if len(rest) > 1:
            raise NonStrictSequentError(
                "A strict sequent has at most one formula outside '?': found"
                f" {', '.join(map(show_llp, rest))}"
            )
        return cls(whynots=tuple(whynots), rest=rest[0] if rest else None)

    @classmethod
    def parse(cls, text: str) -> StrictSequent:
        """Parse ``"?A, B"``; a leading ``|-`` is optional."""
        text = text.strip()
        if text.startswith("|-"):
            text = text[2:]
        if not text.strip():
            return cls()
        return cls.of(parse_llp_list(text))

    @property
    def formulas(self) -> list[LLPFormula]:
        out = [formula("why", p) for p in self.whynots]
        if self.rest is not None:
            out.append(self.rest)
        return out

    def __str__(self) -> str:
        return "|- " + ", ".join(show_llp(f) for f in self.formulas)


def as_sequent(s: StrictSequent | str | list[LLPFormula]) -> StrictSequent:
    if isinstance(s, StrictSequent):
        return s
    if isinstance(s, str):
        return StrictSequent.parse(s)
    return StrictSequent.of(list(s))


def enumerate_formulas(size: int, polarity: str | None = None) -> list[LLPFormula]:
    """Every formula with at most ``size`` connectives and units, by size.

    Within a size, units come before ``!``/``?`` and those before binary
    connectives, each in the order of ``POSITIVE_KINDS``/``NEGATIVE_KINDS``.
    """
    table: dict[str, list[list[LLPFormula]]] = {POSITIVE: [[]], NEGATIVE: [[]]}
    for n in range(1, size + 1):
        for pol, kinds in ((POSITIVE, POSITIVE_KINDS), (NEGATIVE, NEGATIVE_KINDS)):
            other = NEGATIVE if pol == POSITIVE else POSITIVE
            layer: list[LLPFormula] = []
            for kind in kinds:
                arity = ARITY[kind]
                if arity == 0 and n == 1:
                    layer.append(formula(kind))
                elif arity == 1 and n > 1:
                    layer.extend(formula(kind, a) for a in table[other][n - 1])
                elif arity == 2 and n > 2:
                    for i in range(1, n - 1):
                        for a in table[pol][i]:
                            for b in table[pol][n - 1 - i]:
                                layer.append(formula(kind, a, b))
            table[pol].append(layer)
    pols = [polarity] if polarity is not None else [POSITIVE, NEGATIVE]
    out = [f for n in range(1, size + 1) for pol in pols for f in table[pol][n]]
    logging.debug(f"Enumerated {len(out)} formulas up to size {size}")
    return out


__all__ = [
    "LLPFormula",
    "StrictSequent",
    "formula",
    "llp_dual",
    "size",
    "show_llp",
    "parse_llp",
    "parse_llp_list",
    "as_sequent",
    "enumerate_formulas",
    "kind_polarity",
    "DUAL_KIND",
    "POSITIVE_KINDS",
    "NEGATIVE_KINDS",
]
