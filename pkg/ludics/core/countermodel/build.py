"""Countermodels read off an open branch.

Each positive step ``i`` gets a negative design ``M(i)`` answering the
action of ``P_i`` on the premise the branch takes; each variable ``y`` gets
the meet ``M(y)`` of the ``M(j)`` whose sequent has head ``y``. The designs
are closed definitions of a copy of the branch's definition system, so
periodic branches give cyclic but finite systems.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field

from ludics.core.behaviours.behaviour import LogicalBehaviour
from ludics.core.behaviours.connective import Connective
from ludics.core.designs.algebra import big_meet, daimon_minus
from ludics.core.designs.defsystem import DefSystem, reachable_definitions
from ludics.core.designs.design import (
    DAIMON,
    X0,
    Branch,
    Conj,
    Design,
    Predesign,
    Ref,
    Sum,
    Var,
    iter_nodes,
    pred,
)
from ludics.core.designs.printer import show, show_defs
from ludics.core.proofsys.rules import StuckName, StuckOmega, focus
from ludics.core.proofsys.search import Derived
from ludics.core.proofsys.sequent import Sequent
from ludics.core.typing import AssignmentError

from .branch import OpenBranch, Periodic, PositiveStep, last_after, replay


@dataclass
class ModelAssignment:
    """Negative designs ``M(i)`` per positive step and ``M(x)`` per variable.

    ``level`` is ``K`` for the approximant ``M^K`` and None for the exact
    model. ``slot`` is the positive counter-design of a negative root.
    """

    branch: OpenBranch
    defs: DefSystem
    positions: dict[int, str] = field(default_factory=dict)
    variables: dict[str, str] = field(default_factory=dict)
    level: int | None = None
    slot: Design | None = None

    @property
    def cyclic(self) -> bool:
        return self.branch.periodic and self.level is None

    @property
    def exact(self) -> bool:
        return self.level is None

    def position(self, i: int) -> Ref:
        return Ref(self.positions[i], ())

    def model(self, x: str) -> Ref:
        try:
            return Ref(self.variables[x], ())
        except KeyError:
            raise AssignmentError(f"No model for variable '{x}'") from None

    def design(self, x: str) -> Design:
        """``M(x)`` written out when finite, else its reference."""
        if self.cyclic:
            return self.model(x)
        return inline(self.model(x), self.defs)

    def bindings(self) -> dict[str, Design]:
        """``M(x)`` for every variable of the root context."""
        return {x: self.model(x) for x in self.branch.root.context.variables}

    def show(self) -> list[str]:
        """``x = M(x)`` lines for the root context; cyclic models list the
        definitions they use."""
        lines = []
        for x in self.branch.root.context.variables:
            lines.append(f"{x} = {show(self.design(x))}")
        if self.slot is not None:
            slot = self.slot if self.cyclic else inline(self.slot, self.defs)
            lines.append(f"slot = {show(slot)}")
        if self.cyclic:
            roots = [self.model(x) for x in self.branch.root.context.variables]
            if self.slot is not None:
                roots.append(self.slot)
            idents: list[str] = []
            for d in roots:
                for ident in reachable_definitions(d, self.defs):
                    if ident not in idents:
                        idents.append(ident)
            lines.extend(show_defs(self.defs, idents))
        return lines


def build_countermodel(b: OpenBranch | Derived) -> ModelAssignment:
    """The model of a stuck or periodic branch; ``M^K`` for a truncated one.

    Raises:
        AssignmentError: when handed a derivation.
    """
    if isinstance(b, Derived):
        raise AssignmentError("A derivable sequent has no countermodel")
    if b.finite:
        out = _Assembler(b, list(b.steps), b.last, None).run()
    elif isinstance(b.terminal, Periodic):
        out = _Assembler(b, list(b.steps), b.last, b.terminal).run()
    else:
        out = build_approximant(b, len(b.steps))
    logging.info(
        f"Countermodel built from {len(b.steps)} steps ({b.terminal}),"
        f" {len(out.variables)} variables"
    )
    return out


def build_approximant(b: OpenBranch, level: int) -> ModelAssignment:
    """``M^K`` with ``K = level``: the branch cut at its ``K``-th positive
    sequent, unrolled first when periodic. A stuck branch no longer than
    ``K`` gives its exact model."""
    if level < 0:
        raise ValueError("Approximation level must be non-negative")
    if b.finite and level >= len(b.steps):
        return _Assembler(b, list(b.steps), b.last, None).run()
    steps = replay(b, level)
    if len(steps) < level and not b.periodic:
        level = len(steps)
    last = last_after(b, steps)
    out = _Assembler(b, steps, last, None, level=level).run()
    return out


class _Assembler:

    def __init__(
        self,
        branch: OpenBranch,
        steps: list[PositiveStep],
        last: Sequent,
        period: Periodic | None,
        level: int | None = None,
    ) -> None:
        self.branch = branch
        self.steps = steps
        self.last = last
        self.period = period
        self.level = level
        self.defs = branch.defs.copy()
        self.universe = universe(branch)

    def run(self) -> ModelAssignment:
        n = len(self.steps)
        heads = [s.var for s in self.steps]
        sums: dict[int, Sum] = {}
        positions: dict[int, str] = {}
        variables = self._variables()

        for i, s in enumerate(self.steps):
            sums[i] = self._step_model(s, variables)
        if self.period is None:
            head, final = self._terminal()
            sums[n] = final
            heads.append(head)

        for i, body in sums.items():
            positions[i] = self.defs.unique_ident(f"m{i}")
            self.defs.define(positions[i], (), body, check=False)

        for v, ident in variables.items():
            occurrences = self._occurrences(v, heads)
            body = big_meet(
                [sums[i] for i in occurrences],
                negative=True,
                defs=self.defs,
                names=self.universe,
            )
            self.defs.define(ident, (), body, check=False)
        self.defs.check()

        slot = None
        opening = self.branch.opening
        if opening is not None:
            args = tuple(Ref(variables[y], ()) for y in opening.fresh)
            slot = pred(Var(X0), opening.action, *args)
        return ModelAssignment(
            self.branch, self.defs, positions, variables, self.level, slot
        )

    def _variables(self) -> dict[str, str]:
        names = list(self.branch.root.context.variables)
        if self.branch.opening is not None:
            names += list(self.branch.opening.fresh)
        for s in self.steps:
            names += [y for y in s.above.fresh if y not in names]
        out: dict[str, str] = {}
        for v in names:
            ident = self.defs.unique_ident(f"m_{v}")
            while ident in out.values():
                ident = f"{ident}'"
            out[v] = ident
        return out

    def _step_model(self, s: PositiveStep, variables: Mapping[str, str]) -> Sum:
        branches = []
        for action in sorted(s.connective.actions, key=lambda a: a.name):
            if action.name == s.action:
                args = tuple(Ref(variables[y], ()) for y in s.above.fresh)
                body = pred(Var(action.vars[s.index]), s.above.action, *args)
            else:
                body = DAIMON
            branches.append(Branch(action.name, action.vars, body))
        return Sum.of(branches)

    def _terminal(self) -> tuple[str | None, Sum]:
        reason = self.branch.terminal
        if self.level is None and isinstance(reason, StuckOmega):
            return None, daimon_minus(self.universe)
        if self.level is None and isinstance(reason, StuckName):
            return reason.var, _all_daimon(reason.connective)
        c = focus(self.last, self.branch.defs)
        if c is None:
            return None, daimon_minus(self.universe)
        z = c.head.name
        return z, _all_daimon(self.last.context.behaviour_of(z).connective)

    def _occurrences(self, v: str, heads: list[str | None]) -> list[int]:
        out = [i for i, h in enumerate(heads) if h == v]
        if self.period is None:
            return out
        renaming = dict(self.period.renaming)
        seen: set[str] = set()
        u = v
        while u in renaming and renaming[u] not in seen:
            u = renaming[u]
            seen.add(u)
            for i in range(self.period.start, len(self.steps)):
                if heads[i] == u and i not in out:
                    out.append(i)
        return sorted(out)


def _all_daimon(c: Connective) -> Sum:
    return Sum.of(Branch(a.name, a.vars, DAIMON) for a in c.actions)


def universe(branch: OpenBranch) -> dict[str, int]:
    """Names answered by the negative daimon: the declared names, the actions
    of the context's connectives and the names the subject uses."""
    names = dict(branch.defs.sig.declared())
    for b in branch.root.context.behaviours():
        _connective_names(b, names)
    roots = [branch.root.subject] + [
        branch.defs.lookup(i).body
        for i in reachable_definitions(branch.root.subject, branch.defs)
    ]
    for d in roots:
        for node in iter_nodes(d):
            if isinstance(node, Predesign):
                names.setdefault(node.action, len(node.args))
            elif isinstance(node, Sum):
                for br in node.branches:
                    names.setdefault(br.name, len(br.params))
    return {k: names[k] for k in sorted(names)}


def _connective_names(b: LogicalBehaviour, names: dict[str, int]) -> None:
    for a in b.connective.actions:
        names.setdefault(a.name, len(a.vars))
    for arg in b.args:
        _connective_names(arg, names)


def inline(d: Design, defs: DefSystem) -> Design:
    """Replace closed references by their bodies; ``d`` must not be cyclic."""
    if isinstance(d, Ref) and not d.args:
        return inline(defs.lookup(d.ident).body, defs)
    if isinstance(d, Predesign):
        return Predesign(
            inline(d.head, defs), d.action, tuple(inline(a, defs) for a in d.args)
        )
    if isinstance(d, Conj):
        return Conj.of(inline(c, defs) for c in d.conjuncts)
    if isinstance(d, Sum):
        return Sum.of(
            Branch(b.name, b.params, inline(b.body, defs)) for b in d.branches
        )
    return d


__all__ = [
    "ModelAssignment",
    "build_countermodel",
    "build_approximant",
    "universe",
    "inline",
]
