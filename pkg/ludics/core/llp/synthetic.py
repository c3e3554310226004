"""Synthetic connectives: maximal same-polarity layers of a formula."""

from __future__ import annotations

from pydantic import model_validator

from ludics.core.designs.design import POSITIVE
from ludics.core.models import Field, FrozenModel
from ludics.core.typing import DisjointnessError, PolarityError

from .formula import (
    ARITY,
    DUAL_KIND,
    SYMBOL,
    FormulaBuilder,
    Kind,
    LLPFormula,
    kind_polarity,
    parse_tree,
    transform,
)

MULTIPLICATIVES = ("tensor", "par")
LEAVES = ("bang", "why")


class SyntheticConnective(FrozenModel):
    """An expression over ``!x`` (positive) or ``?x`` (negative) leaves.

    The two sides of every tensor or par use disjoint variables; the sides
    of a plus or with may share them.

    Example:
        >>> parse_synthetic("!x * (!y + !z)").variables
        ('x', 'y', 'z')
    """

    kind: Kind
    args: tuple[SyntheticConnective, ...] = ()
    var: str | None = Field(default=None, description="Variable of a ! or ? leaf")

    @model_validator(mode="after")
    def validate_layer(self) -> SyntheticConnective:
        if self.kind in LEAVES:
            if self.var is None or self.args:
                raise PolarityError(f"'{SYMBOL[self.kind]}' leaves carry one variable")
            return self
        if len(self.args) != ARITY[self.kind]:
            raise PolarityError(
                f"'{SYMBOL[self.kind]}' takes {ARITY[self.kind]} arguments"
            )
        for a in self.args:
            if a.polarity != self.polarity:
                raise PolarityError(
                    "A synthetic connective keeps one polarity throughout"
                )
        if self.kind in MULTIPLICATIVES:
            left, right = self.args
            shared = set(left.variables) & set(right.variables)
            if shared:
                raise DisjointnessError(
                    f"Both sides of '{SYMBOL[self.kind]}' in '{show_synthetic(self)}'"
                    f" use {sorted(shared)}"
                )
        return self

    @property
    def polarity(self) -> str:
        return kind_polarity(self.kind)

    @property
    def positive(self) -> bool:
        return self.polarity == POSITIVE

    @property
    def variables(self) -> tuple[str, ...]:
        """Distinct variables, left to right."""
        if self.var is not None:
            return (self.var,)
        out: list[str] = []
        for a in self.args:
            out += [v for v in a.variables if v not in out]
        return tuple(out)

    def dual(self) -> SyntheticConnective:
        return SyntheticConnective(
            kind=DUAL_KIND[self.kind],
            args=tuple(a.dual() for a in self.args),
            var=self.var,
        )

    def __str__(self) -> str:
        return show_synthetic(self)


SyntheticConnective.model_rebuild()


def leaf(kind: str, var: str) -> SyntheticConnective:
    return SyntheticConnective(kind=kind, var=var)


def node(kind: str, *args: SyntheticConnective) -> SyntheticConnective:
    return SyntheticConnective(kind=kind, args=args)


def show_synthetic(c: SyntheticConnective, level: int = 0) -> str:
    if c.var is not None:
        return f"{SYMBOL[c.kind]}{c.var}"
    if not c.args:
        return SYMBOL[c.kind]
    mine = 1 if c.kind in ("plus", "with") else 2
    text = (
        f"{show_synthetic(c.args[0], mine)} {SYMBOL[c.kind]}"
        f" {show_synthetic(c.args[1], mine + 1)}"
    )
    return f"({text})" if mine < level else text


class _SyntheticBuilder(FormulaBuilder):

    def __default__(self, data, children, meta):
        if data in LEAVES:
            raise PolarityError(
                f"A synthetic connective has variables under '{SYMBOL[data]}',"
                " not formulas"
            )
        if data in ARITY:
            return node(str(data), *children)
        return super().__default__(data, children, meta)

    def bang_var(self, items):
        return leaf("bang", str(items[0]))

    def why_var(self, items):
        return leaf("why", str(items[0]))


def parse_synthetic(text: str) -> SyntheticConnective:
    """Parse an expression such as ``"B | (?x | (?y & ?z))"``.

    Raises:
        DesignSyntaxError: on malformed input.
        DisjointnessError: when a tensor or par shares a variable.
    """
    return transform(_SyntheticBuilder(), parse_tree(text, "formula"))


def synthetic_decompose(
    f: LLPFormula,
) -> tuple[SyntheticConnective, list[LLPFormula]]:
    """Split ``f`` into its top layer and the formulas under ``!``/``?``.

    Every leaf gets its own variable ``x1, x2, ...`` left to right, so the
    ``i``-th argument formula fills the ``i``-th variable.
    """
    args: list[LLPFormula] = []

    def walk(g: LLPFormula) -> SyntheticConnective:
        if g.kind in LEAVES:
            args.append(g.args[0])
            return leaf(g.kind, f"x{len(args)}")
        return node(g.kind, *(walk(a) for a in g.args))

    return walk(f), args


def layer_actions(c: SyntheticConnective) -> list[tuple[str, ...]]:
    """Variables of each action of a negative layer, in layer order.

    Top has no action, bottom one empty action, ``?x`` the action ``(x)``;
    par concatenates every pair and with keeps both lists.
    """
    if c.positive:
        c = c.dual()
    if c.kind == "top":
        return []
    if c.kind == "bot":
        return [()]
    if c.kind == "why":
        return [(c.var,)]
    left, right = (layer_actions(a) for a in c.args)
    if c.kind == "par":
        return [a + b for a in left for b in right]
    return left + right


__all__ = [
    "SyntheticConnective",
    "leaf",
    "node",
    "show_synthetic",
    "parse_synthetic",
    "synthetic_decompose",
    "layer_actions",
]
