"""Design equivalence, decided as a bisimulation over reference unfoldings."""

from __future__ import annotations

import itertools

from .defsystem import DefSystem
from .design import (
    OMEGA,
    Conj,
    Design,
    Omega,
    Predesign,
    Ref,
    Sum,
    Trunc,
    Var,
    canonical_key,
    iter_nodes,
)
from .substitute import rename

SHARED_PREFIX = "#"


def equiv(d: Design, e: Design, defs: DefSystem | None = None) -> bool:
    """True iff ``d`` and ``e`` are related by a design equivalence.

    Finite designs are compared by canonical key. Designs with references
    are compared coinductively: a pair already under examination is assumed
    equivalent.
    """
    if d.key == e.key:
        return True
    if defs is None:
        return False
    return _Bisimulation(defs).compare(d, e)


class _Bisimulation:

    def __init__(self, defs: DefSystem) -> None:
        self.defs = defs
        self.assumed: set[tuple[str, str]] = set()
        self.refuted: set[tuple[str, str]] = set()
        self._names = itertools.count()

    def compare(self, d: Design, e: Design) -> bool:
        if d.key == e.key:
            return True
        pair = _pair_key(d, e)
        if pair in self.assumed:
            return True
        if pair in self.refuted:
            return False
        snapshot = set(self.assumed)
        self.assumed.add(pair)
        if self._structural(d, e):
            return True
        self.assumed = snapshot
        self.refuted.add(pair)
        return False

    def _structural(self, d: Design, e: Design) -> bool:
        if isinstance(d, Ref) or isinstance(e, Ref):
            polarities = (self.defs.polarity(d), self.defs.polarity(e))
            if "positive" in polarities:
                return self._positive(d, e)
            return self.compare(self.defs.resolve(d), self.defs.resolve(e))
        if isinstance(d, Var) and isinstance(e, Var):
            return d.name == e.name
        if isinstance(d, Sum) and isinstance(e, Sum):
            return self._sums(d, e)
        if isinstance(d, Predesign) and isinstance(e, Predesign):
            return self._predesigns(d, e)
        if isinstance(d, (Conj, Omega, Trunc)) and isinstance(e, (Conj, Omega, Trunc)):
            return self._positive(d, e)
        return False

    def _positive(self, d: Design, e: Design) -> bool:
        p = self.defs.expand(d)
        q = self.defs.expand(e)
        if isinstance(p, (Omega, Trunc)) or isinstance(q, (Omega, Trunc)):
            return type(p) is type(q)
        return self._cover(p.conjuncts, q.conjuncts) and self._cover(
            q.conjuncts, p.conjuncts
        )

    def _cover(self, xs, ys) -> bool:
        for x in xs:
            for y in ys:
                snapshot = set(self.assumed)
                if self.compare(x, y):
                    break
                self.assumed = snapshot
            else:
                return False
        return True

    def _predesigns(self, d: Predesign, e: Predesign) -> bool:
        if d.action != e.action or len(d.args) != len(e.args):
            return False
        if not self.compare(d.head, e.head):
            return False
        return all(self.compare(a, b) for a, b in zip(d.args, e.args))

    def _sums(self, d: Sum, e: Sum) -> bool:
        # An absent name is the Omega component.
        for name in sorted(set(d.names) | set(e.names)):
            b, c = d.get(name), e.get(name)
            if b is None or c is None:
                present = b if b is not None else c
                if not self.compare(present.body, OMEGA):
                    return False
                continue
            if len(b.params) != len(c.params):
                return False
            shared = [f"{SHARED_PREFIX}{next(self._names)}" for _ in b.params]
            left = rename(b.body, dict(zip(b.params, shared)), self.defs)
            right = rename(c.body, dict(zip(c.params, shared)), self.defs)
            if not self.compare(left, right):
                return False
        return True


def _pair_key(d: Design, e: Design) -> tuple[str, str]:
    order: list[str] = []
    for node in itertools.chain(iter_nodes(d), iter_nodes(e)):
        names = (
            [node.name]
            if isinstance(node, Var)
            else list(node.args) if isinstance(node, Ref) else []
        )
        for n in names:
            if n.startswith(SHARED_PREFIX) and n not in order:
                order.append(n)
    env = {n: f"{SHARED_PREFIX}{i}" for i, n in enumerate(order)}
    return canonical_key(d, env), canonical_key(e, env)


__all__ = ["equiv"]
