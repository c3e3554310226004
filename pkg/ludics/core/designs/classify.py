from __future__ import annotations

from collections import Counter
from typing import Literal

from ludics.core.models import Field, SchemaModel
from ludics.core.typing import LudicsError

from .defsystem import DefSystem
from .design import Conj, Design, Omega, Predesign, Ref, Sum, Trunc, Var


class Classification(SchemaModel):
    """Structural flags of a design, computed on its unfolding graph."""

    total: bool = Field(description="The design is not Omega")
    closed: bool = Field(description="No free variables")
    linear: bool = Field(
        description="Arguments and head of every predesign use disjoint variables"
    )
    deterministic: bool = Field(
        description="Every conjunction has at most one conjunct"
    )
    cut_free: bool = Field(description="No predesign has an abstraction head")
    identity_free: bool = Field(
        description="No variable occurs as an argument or as the design itself"
    )
    standard: bool = Field(description="Total, cut-free and identity-free")
    is_proof: bool = Field(description="Standard with unary conjunctions only")
    is_model: bool = Field(description="Standard and linear")
    cardinality: int | Literal["infinite"] = Field(
        description="Number of positive action occurrences"
    )


def classify(d: Design, defs: DefSystem | None = None) -> Classification:
    """Classify ``d``; a property fails iff some reachable node violates it."""
    defs = defs if defs is not None else DefSystem()
    walker = _Walker(defs)
    walker.visit(d)

    top = defs.resolve(d) if isinstance(d, Ref) else d
    if isinstance(top, Conj) and any(isinstance(c, Ref) for c in top.conjuncts):
        top = defs.expand(top)
    total = not isinstance(top, Omega)
    cut_free = walker.cut_free
    identity_free = walker.identity_free and not isinstance(top, Var)
    standard = total and cut_free and identity_free
    return Classification(
        total=total,
        closed=not d.free_vars,
        linear=walker.linear,
        deterministic=walker.deterministic,
        cut_free=cut_free,
        identity_free=identity_free,
        standard=standard,
        is_proof=standard and walker.unary,
        is_model=standard and walker.linear,
        cardinality=walker.cardinality(d),
    )


class _Walker:

    def __init__(self, defs: DefSystem) -> None:
        self.defs = defs
        self.seen: set[str] = set()
        self.linear = True
        self.deterministic = True
        self.unary = True
        self.cut_free = True
        self.identity_free = True
        self.occurrences: dict[str, int] = {}
        self.calls: dict[str, Counter] = {}

    def visit(self, d: Design) -> None:
        own = Counter()
        self.occurrences["<top>"] = self._walk(d, own)
        self.calls["<top>"] = own

    def _visit_def(self, ident: str) -> None:
        if ident in self.seen:
            return
        self.seen.add(ident)
        body = self.defs.lookup(ident).body
        own = Counter()
        self.occurrences[ident] = self._walk(body, own)
        self.calls[ident] = own

    def _walk(self, d: Design, calls: Counter) -> int:
        if isinstance(d, Ref):
            calls[d.ident] += 1
            self._visit_def(d.ident)
            return 0
        if isinstance(d, (Var, Omega, Trunc)):
            return 0
        if isinstance(d, Sum):
            return sum(self._walk(b.body, calls) for b in d.branches)
        if isinstance(d, Conj):
            if len(d.conjuncts) > 1:
                self.deterministic = False
            if len(d.conjuncts) != 1:
                self.unary = False
            return sum(self._walk(c, calls) for c in d.conjuncts)
        if isinstance(d, Predesign):
            head = d.head
            if not self._is_variable(head):
                self.cut_free = False
            for a in d.args:
                if self._is_variable(a):
                    self.identity_free = False
            if not _disjoint([d.head, *d.args]):
                self.linear = False
            count = 1 + self._walk(head, calls)
            return count + sum(self._walk(a, calls) for a in d.args)
        raise TypeError(f"Not a design: {d!r}")

    def _is_variable(self, d: Design) -> bool:
        if isinstance(d, Ref):
            try:
                return isinstance(self.defs.resolve(d), Var)
            except LudicsError:
                return False
        return isinstance(d, Var)

    def cardinality(self, d: Design) -> int | str:
        cyclic = _cyclic_nodes(self.calls)
        reachable_from = _reachable(self.calls, "<top>")
        for ident in reachable_from:
            if ident in cyclic and _reaches_action(ident, self.calls, self.occurrences):
                return "infinite"
        return self._count("<top>", {})

    def _count(self, ident: str, memo: dict[str, int]) -> int:
        if ident in memo:
            return memo[ident]
        total = self.occurrences.get(ident, 0)
        for target, n in self.calls.get(ident, {}).items():
            total += n * self._count(target, memo)
        memo[ident] = total
        return total


def _disjoint(parts: list[Design]) -> bool:
    seen: set[str] = set()
    for part in parts:
        fv = part.free_vars
        if seen & fv:
            return False
        seen |= fv
    return True


def _reachable(graph: dict[str, Counter], start: str) -> set[str]:
    out: set[str] = set()
    stack = [start]
    while stack:
        node = stack.pop()
        if node in out:
            continue
        out.add(node)
        stack.extend(graph.get(node, {}))
    return out


def _cyclic_nodes(graph: dict[str, Counter]) -> set[str]:
    return {
        node
        for node in graph
        if any(node in _reachable(graph, t) for t in graph.get(node, {}))
    }


def _reaches_action(ident: str, graph: dict[str, Counter], occ: dict[str, int]) -> bool:
    return any(occ.get(n, 0) > 0 for n in _reachable(graph, ident))


__all__ = ["Classification", "classify"]
