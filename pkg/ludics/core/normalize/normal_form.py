from __future__ import annotations

from collections import deque

from ludics.core.designs.defsystem import DefSystem
from ludics.core.designs.design import (
    NEGATIVE,
    OMEGA,
    Branch,
    Conj,
    Design,
    Omega,
    Predesign,
    Sum,
    Trunc,
    Var,
)
from ludics.settings import Settings

from .reduction import fire, has_cycle

TRUNC = Trunc()


def normal_form(
    d: Design,
    defs: DefSystem | None = None,
    fuel: int | None = None,
    depth: int | None = None,
) -> Design:
    """Cut-free normal form of ``d`` expanded to ``depth`` layers.

    Each positive position collects the head normal forms reachable by
    reduction, breadth first, with its own ``fuel`` budget. A position that
    reaches Omega or has a cyclic reduction graph becomes Omega; a position
    that runs out of fuel or that meets a truncation becomes ``...``. Layers
    deeper than ``depth`` are ``...`` as well.

    Example:
        >>> normal_form(Var("x"))
        Var(name='x')
    """
    defs = defs if defs is not None else DefSystem()
    engine = Settings.Config.ENGINE
    return _Normalizer(
        defs,
        fuel if fuel is not None else engine.fuel,
    ).run(d, depth if depth is not None else engine.depth)


class _Normalizer:

    def __init__(self, defs: DefSystem, fuel: int) -> None:
        self.defs = defs
        self.fuel = fuel

    def run(self, d: Design, k: int) -> Design:
        if self.defs.polarity(d) == NEGATIVE:
            d = self.defs.resolve(d)
        if isinstance(d, Var):
            return d
        if k <= 0:
            return TRUNC
        if isinstance(d, Sum):
            return Sum.of(
                Branch(b.name, b.params, self.run(b.body, k - 1)) for b in d.branches
            )
        heads = self.harvest(d)
        if isinstance(heads, (Omega, Trunc)):
            return heads
        return Conj.of(
            Predesign(c.head, c.action, tuple(self.run(a, k - 1) for a in c.args))
            for c in heads
        )

    def harvest(self, p: Design) -> list[Predesign] | Omega | Trunc:
        """Head normal forms of every state reachable from ``p``."""
        start = self.defs.expand(p)
        if isinstance(start, (Omega, Trunc)):
            return start

        index = {start.key: 0}
        edges: list[list[int]] = [[]]
        queue = deque([start])
        heads: list[Predesign] = []
        incomplete = False
        while queue and not incomplete:
            state = queue.popleft()
            i = index[state.key]
            for c in state.conjuncts:
                head = self.defs.resolve(c.head)
                if isinstance(head, Var):
                    heads.append(Predesign(head, c.action, c.args))
                    continue
                succ = self.defs.expand(fire(head, c, self.defs))
                if isinstance(succ, Omega):
                    return OMEGA
                if isinstance(succ, Trunc):
                    incomplete = True
                    continue
                j = index.get(succ.key)
                if j is None:
                    if len(index) >= self.fuel:
                        incomplete = True
                        break
                    j = len(index)
                    index[succ.key] = j
                    edges.append([])
                    queue.append(succ)
                edges[i].append(j)
        if has_cycle(edges):
            return OMEGA
        if incomplete:
            return TRUNC
        return heads


__all__ = ["normal_form", "TRUNC"]
