"""The reduction relation, closed evaluation and orthogonality."""

from __future__ import annotations

import logging

from ludics.core.designs.classify import classify
from ludics.core.designs.defsystem import DefSystem
from ludics.core.designs.design import (
    OMEGA,
    POSITIVE,
    X0,
    Conj,
    Design,
    Omega,
    Predesign,
    Sum,
    Trunc,
    Var,
)
from ludics.core.designs.substitute import substitute
from ludics.core.generic.trace import TraceManager
from ludics.core.typing import (
    ArityError,
    NotAtomicError,
    OpenDesignError,
    PolarityError,
)
from ludics.settings import Settings

from .outcome import EvalOutcome, Verdict

GRAY, BLACK = 1, 2


def step(p: Design, defs: DefSystem | None = None) -> list[tuple[Predesign, Design]]:
    """One successor per cut conjunct of ``p``.

    ``(Σ a(x).P_a)|b<N>`` reduces to ``P_b[N/x]``, or to Omega when the sum
    has no ``b`` branch. Head normal forms, Omega and the daimon have no
    successor.
    """
    defs = defs if defs is not None else DefSystem()
    state = defs.expand(p)
    if not isinstance(state, Conj):
        return []
    out = []
    for c in state.conjuncts:
        head = defs.resolve(c.head)
        if isinstance(head, Sum):
            out.append((c, fire(head, c, defs)))
    return out


def fire(head: Sum, c: Predesign, defs: DefSystem) -> Design:
    """Reduce the cut ``head|c.action<c.args>``."""
    branch = head.get(c.action)
    if branch is None:
        return OMEGA
    if len(branch.params) != len(c.args):
        raise ArityError(
            f"Branch '{branch.name}' binds {len(branch.params)} variables,"
            f" applied to {len(c.args)}"
        )
    return substitute(branch.body, dict(zip(branch.params, c.args)), defs)


def successors(state: Conj, defs: DefSystem) -> list[Design]:
    return [d for _, d in step(state, defs)]


def evaluate_closed(
    p: Design,
    defs: DefSystem | None = None,
    fuel: int | None = None,
    tracer: TraceManager | None = None,
) -> EvalOutcome:
    """Explore every reduction sequence of a closed positive design.

    States are compared by canonical fingerprint. Daimon means every maximal
    path ends in the daimon; Omega means some path reaches Omega or revisits
    a state; Unknown means ``fuel`` distinct states were explored first.

    Raises:
        OpenDesignError: if ``p`` has free variables.
        PolarityError: if ``p`` is not positive.
    """
    defs = defs if defs is not None else DefSystem()
    fuel = fuel if fuel is not None else Settings.Config.ENGINE.fuel
    if defs.polarity(p) != POSITIVE:
        raise PolarityError("Only positive designs can be evaluated")
    if p.free_vars:
        raise OpenDesignError(
            f"Cannot evaluate a design with free variables {sorted(p.free_vars)}"
        )
    outcome = _explore(p, defs, fuel)
    logging.debug(
        f"Evaluation finished: {outcome.verdict} after {outcome.states} states"
    )
    if tracer is not None:
        tracer.record("evaluate", **outcome.summary())
    return outcome


def _explore(p: Design, defs: DefSystem, fuel: int) -> EvalOutcome:
    root = defs.expand(p)
    if isinstance(root, Omega):
        return EvalOutcome(verdict=Verdict.OMEGA, states=1, path=["omega"])
    if isinstance(root, Trunc):
        return EvalOutcome(verdict=Verdict.UNKNOWN, states=1)

    keys: list[str] = []
    index: dict[str, int] = {}
    dag: list[list[int]] = []
    color: list[int] = []
    stack: list[tuple[int, list[Design]]] = []
    deepest = 0

    def enter(state: Conj) -> int:
        i = len(keys)
        keys.append(state.key)
        index[state.key] = i
        dag.append([])
        color.append(GRAY)
        stack.append((i, list(reversed(successors(state, defs)))))
        return i

    def trail() -> list[str]:
        return [keys[i] for i, _ in stack]

    enter(root)
    while stack:
        i, pending = stack[-1]
        if not pending:
            color[i] = BLACK
            stack.pop()
            continue
        state = defs.expand(pending.pop())
        if isinstance(state, Omega):
            return EvalOutcome(
                verdict=Verdict.OMEGA,
                states=len(keys),
                path=trail() + ["omega"],
                depth=max(deepest, len(stack)),
            )
        if isinstance(state, Trunc):
            return EvalOutcome(
                verdict=Verdict.UNKNOWN, states=len(keys), depth=deepest
            )
        j = index.get(state.key)
        if j is not None:
            dag[i].append(j)
            if color[j] == GRAY:
                path = trail()
                start = path.index(keys[j])
                return EvalOutcome(
                    verdict=Verdict.OMEGA,
                    states=len(keys),
                    path=path[start:] + [keys[j]],
                    cycle=True,
                    depth=deepest,
                )
            continue
        if len(keys) >= fuel:
            return EvalOutcome(
                verdict=Verdict.UNKNOWN, states=len(keys), depth=deepest
            )
        dag[i].append(enter(state))
        deepest = max(deepest, len(stack) - 1)
    return EvalOutcome(
        verdict=Verdict.DAIMON, states=len(keys), dag=dag, depth=deepest
    )


def has_cycle(edges: list[list[int]]) -> bool:
    """True iff the directed graph ``edges`` has a cycle."""
    color = [0] * len(edges)
    for root in range(len(edges)):
        if color[root]:
            continue
        color[root] = GRAY
        stack = [(root, iter(edges[root]))]
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                color[node] = BLACK
                stack.pop()
            elif color[nxt] == GRAY:
                return True
            elif not color[nxt]:
                color[nxt] = GRAY
                stack.append((nxt, iter(edges[nxt])))
    return False


def check_atomic(p: Design, n: Design, defs: DefSystem) -> None:
    """``p`` standard positive over ``x0``; ``n`` standard closed negative."""
    if defs.polarity(p) != POSITIVE:
        raise NotAtomicError("The positive side must be a positive design")
    if not p.free_vars <= {X0}:
        raise NotAtomicError(
            f"The positive side may only use {X0}, found {sorted(p.free_vars)}"
        )
    if not classify(p, defs).standard:
        raise NotAtomicError("The positive side is not standard")
    if defs.polarity(n) == POSITIVE or isinstance(n, (Var, Omega, Trunc)):
        raise NotAtomicError("The negative side must be an abstraction")
    if n.free_vars:
        raise NotAtomicError("The negative side must be closed")
    if not classify(n, defs).standard:
        raise NotAtomicError("The negative side is not standard")


def orthogonal(
    p: Design,
    n: Design,
    defs: DefSystem | None = None,
    fuel: int | None = None,
    tracer: TraceManager | None = None,
) -> EvalOutcome:
    """Evaluate the interaction ``p[n/x0]``.

    Raises:
        NotAtomicError: if either side is not atomic.
    """
    defs = defs if defs is not None else DefSystem()
    check_atomic(p, n, defs)
    closed = substitute(p, {X0: n}, defs) if X0 in p.free_vars else p
    return evaluate_closed(closed, defs, fuel, tracer)


__all__ = [
    "step",
    "fire",
    "evaluate_closed",
    "orthogonal",
    "check_atomic",
    "has_cycle",
]
