"""Finite labelled trees as designs, and a top-down tree automaton over them.

Trees are ``eps`` or ``label(t1, t2)``; a leaf ``a`` abbreviates
``a(eps, eps)``. Encoding:

    eps*         = {up(x) => x|eps}
    a(t1, t2)*   = {up(x) => x|a<t1*, t2*>}

The automaton ``Q0`` accepts exactly the trees ``b``, ``a(b, b)``,
``a(b, a(b, b))``, ...: evaluation of ``Q0[t*]`` ends in the daimon for them
and in Omega otherwise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import lark as L
from lark.exceptions import UnexpectedInput

from ludics.core.designs.defsystem import DefSystem
from ludics.core.designs.design import X0, Branch, Design, Ref, Sum, Var, pred
from ludics.core.designs.substitute import substitute
from ludics.core.normalize.outcome import EvalOutcome
from ludics.core.normalize.reduction import evaluate_closed
from ludics.core.syntax import parse_design
from ludics.core.typing import DesignSyntaxError

EPS = "eps"

AUTOMATON = r"""
sig { a/2, b/2, eps/0 }
def Q0(x) = x|down<{a(x, y) => /\{Q1(x), Q0(y)}; b(x, y) => /\{Q2(x), Q2(y)}}>
def Q1(x) = x|down<{b(x, y) => /\{Q2(x), Q2(y)}}>
def Q2(x) = x|down<{eps => daimon}>
"""

TREE_GRAMMAR = r"""
?tree: "eps"                          -> eps
     | LABEL ("(" tree "," tree ")")? -> node
LABEL: /(?!eps(?![a-z0-9]))[a-z][a-z0-9]*/
%import common.WS
%ignore WS
"""


@dataclass(frozen=True)
class Tree:
    label: str = EPS
    children: tuple[Tree, ...] = ()

    @property
    def size(self) -> int:
        """Number of labelled nodes."""
        return 0 if self.label == EPS else 1 + sum(c.size for c in self.children)

    def __str__(self) -> str:
        if self.label == EPS:
            return EPS
        if all(c.label == EPS for c in self.children):
            return self.label
        return f"{self.label}({', '.join(map(str, self.children))})"


LEAF = Tree()


def node(label: str, left: Tree = LEAF, right: Tree = LEAF) -> Tree:
    return Tree(label, (left, right))


class _TreeBuilder(L.Transformer):

    def eps(self, _):
        return LEAF

    def node(self, items):
        label = str(items[0])
        return node(label, *items[1:])


@lru_cache(maxsize=1)
def _tree_parser() -> L.Lark:
    return L.Lark(TREE_GRAMMAR, start="tree")


def parse_tree(text: str) -> Tree:
    """Parse ``a(b, a(b, b))``-style tree text."""
    try:
        return _TreeBuilder().transform(_tree_parser().parse(text))
    except UnexpectedInput as e:
        raise DesignSyntaxError(
            f"Malformed tree '{text}'", (e.line, e.column)
        ) from None


def encode_tree(t: Tree) -> Design:
    """The deterministic linear negative design representing ``t``."""
    if t.label == EPS:
        return Sum((Branch("up", ("x",), pred(Var("x"), EPS)),))
    args = tuple(encode_tree(c) for c in t.children)
    return Sum((Branch("up", ("x",), pred(Var("x"), t.label, *args)),))


def automaton_defs() -> DefSystem:
    """Signature ``a/2, b/2, eps/0`` with the definitions Q0, Q1, Q2."""
    _, defs = parse_design(AUTOMATON)
    return defs


def run_automaton(
    t: Tree, defs: DefSystem | None = None, fuel: int | None = None
) -> EvalOutcome:
    """Evaluate ``Q0[t*]``."""
    defs = defs if defs is not None else automaton_defs()
    closed = substitute(Ref("Q0", (X0,)), {X0: encode_tree(t)}, defs)
    return evaluate_closed(closed, defs, fuel)


def enumerate_trees(max_size: int, labels: tuple[str, ...] = ("a", "b")) -> list[Tree]:
    """All trees with at most ``max_size`` labelled nodes, smallest first."""
    by_size: dict[int, list[Tree]] = {0: [LEAF]}
    for n in range(1, max_size + 1):
        out = []
        for k in range(n):
            for label, left, right in itertools.product(
                labels, by_size[k], by_size[n - 1 - k]
            ):
                out.append(node(label, left, right))
        by_size[n] = sorted(out, key=str)
    return [t for n in range(max_size + 1) for t in by_size[n]]


__all__ = [
    "Tree",
    "LEAF",
    "node",
    "parse_tree",
    "encode_tree",
    "automaton_defs",
    "run_automaton",
    "enumerate_trees",
    "AUTOMATON",
]
