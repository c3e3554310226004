"""Translations between formulas and logical behaviours.

``bullet`` sends each synthetic layer to one connective whose actions are
named after the layer: ``*`` for bottom, ``up`` for ``?x``, ``pi1.a`` and
``pi2.b`` for the sides of a with, ``wp.a.b`` for a par. ``circ`` reads a
behaviour back as a with of pars of ``?``-formulas, or its dual.
"""

from __future__ import annotations

from functools import reduce

from ludics.core.behaviours.behaviour import (
    Context,
    LogicalBehaviour,
    negative,
    positive,
)
from ludics.core.behaviours.connective import Action, Connective, make_connective
from ludics.core.designs.design import NEGATIVE, POSITIVE
from ludics.core.designs.signature import Signature

from .formula import LLPFormula, StrictSequent, formula, llp_dual
from .synthetic import SyntheticConnective, layer_actions, synthetic_decompose


def bullet_actions(
    c: SyntheticConnective, sig: Signature
) -> list[tuple[str, tuple[str, ...]]]:
    """Named actions of a layer; a positive layer is read through its dual."""
    if c.positive:
        c = c.dual()
    if c.kind == "top":
        return []
    if c.kind == "bot":
        return [("*", ())]
    if c.kind == "why":
        return [("up", (c.var,))]
    left, right = (bullet_actions(a, sig) for a in c.args)
    if c.kind == "par":
        return [(sig.derive_wp(a, b), xs + ys) for a, xs in left for b, ys in right]
    first = [(sig.derive_pi(1, a), xs) for a, xs in left]
    second = [(sig.derive_pi(2, b), ys) for b, ys in right]
    return first + second


def bullet_connective(
    c: SyntheticConnective, sig: Signature | None = None
) -> Connective:
    """The connective of a synthetic layer, placeholders in layer order."""
    sig = sig if sig is not None else Signature()
    return make_connective(c.variables, bullet_actions(c, sig))


def bullet(f: LLPFormula, sig: Signature | None = None) -> LogicalBehaviour:
    """Translate a formula layer by layer; polarity is preserved.

    Example:
        >>> bullet(parse_llp("B | (?1 | (?1 & ?1))")).connective.names
        ('wp.*.wp.up.pi1.up', 'wp.*.wp.up.pi2.up')
    """
    sig = sig if sig is not None else Signature()
    c, args = synthetic_decompose(f)
    connective = bullet_connective(c, sig)
    inner = [bullet(a, sig) for a in args]
    if f.positive:
        return positive(connective, *inner)
    return negative(connective, *inner)


def _fold(kind: str, items: list[LLPFormula], unit: str) -> LLPFormula:
    if not items:
        return formula(unit)
    return reduce(lambda a, b: formula(kind, a, b), items)


def _action_formula(a: Action, by_var: dict[str, LLPFormula]) -> LLPFormula:
    return _fold("par", [formula("why", by_var[x]) for x in a.vars], "bot")


def circ(b: LogicalBehaviour) -> LLPFormula:
    """Read a behaviour back as a formula.

    A negative connective gives the with of its actions, an action the par
    of ``?`` over its arguments; nullary actions give bottom and an empty
    connective top. Positive behaviours use the dual layer.
    """
    by_var = dict(zip(b.connective.params, (circ(a) for a in b.args)))
    if b.positive:
        by_var = {x: llp_dual(n) for x, n in by_var.items()}
    actions = sorted(b.connective.actions, key=lambda a: a.name)
    layer = _fold("with", [_action_formula(a, by_var) for a in actions], "top")
    return llp_dual(layer) if b.positive else layer


def circ_context(ctx: Context) -> StrictSequent:
    """``x1: P1, ..., N`` becomes ``|- ?P1, ..., N`` with every formula read
    back through ``circ``."""
    return StrictSequent(
        whynots=tuple(circ(b) for _, b in ctx.entries),
        rest=circ(ctx.slot) if ctx.slot is not None else None,
    )


def synthetic_shape(f: LLPFormula) -> tuple:
    """``f`` up to reordering and regrouping inside each synthetic layer.

    A layer is kept as the multiset of its actions, each action as the
    multiset of the shapes of its arguments. ``circ(bullet(f))`` has the
    shape of ``f``.
    """
    c, args = synthetic_decompose(f)
    shapes = {f"x{i}": synthetic_shape(a) for i, a in enumerate(args, start=1)}
    actions = sorted(tuple(sorted(shapes[x] for x in xs)) for xs in layer_actions(c))
    return (POSITIVE if f.positive else NEGATIVE, tuple(actions))


__all__ = [
    "bullet",
    "bullet_actions",
    "bullet_connective",
    "circ",
    "circ_context",
    "synthetic_shape",
]
