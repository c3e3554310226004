"""The open branch of a failed or unfinished proof search."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ludics.core.behaviours.connective import Connective
from ludics.core.designs.defsystem import DefSystem
from ludics.core.generic.trace import TraceManager
from ludics.core.proofsys.rules import RuleInstance, StuckName, StuckOmega, next_rule
from ludics.core.proofsys.search import (
    Branch,
    Derived,
    Failed,
    OutOfFuel,
    live_variables,
    prove,
)
from ludics.core.proofsys.sequent import NegativeRule, PositiveRule, Sequent
from ludics.core.typing import LudicsError


@dataclass(frozen=True)
class NegativeStep:
    """``N |- Psi`` and the branch taken: action ``action`` of ``connective``
    with its premise variables ``fresh``."""

    sequent: Sequent
    connective: Connective
    action: str
    index: int
    fresh: tuple[str, ...]


@dataclass(frozen=True)
class PositiveStep:
    """``P_i |- Theta_i``: rule ``(alpha, a)`` on ``var``, premise ``index``
    taken, then the negative step above it."""

    sequent: Sequent
    var: str
    connective: Connective
    action: str
    index: int
    above: NegativeStep

    @property
    def inner(self) -> Connective:
        return self.above.connective


@dataclass(frozen=True)
class Truncated:
    level: int

    def __str__(self) -> str:
        return f"truncated at {self.level}"


@dataclass(frozen=True)
class Periodic:
    """``P_{start + length}`` repeats ``P_start`` up to renaming of the live
    variables; ``renaming`` maps those of the later sequent to the earlier."""

    start: int
    length: int
    renaming: tuple[tuple[str, str], ...]

    def __str__(self) -> str:
        return f"periodic from {self.start} with period {self.length}"


Terminal = StuckOmega | StuckName | Truncated | Periodic


@dataclass(frozen=True)
class OpenBranch:
    """Positive steps ``P_0 ... P_{n-1}`` and the last positive sequent.

    ``opening`` is the negative step of a negative root. ``last`` is
    ``P_max`` for stuck branches, ``P_K`` for truncated ones and the
    repetition of ``P_start`` for periodic ones.
    """

    root: Sequent
    opening: NegativeStep | None
    steps: tuple[PositiveStep, ...]
    last: Sequent
    terminal: Terminal
    defs: DefSystem
    linear: bool = False

    @property
    def finite(self) -> bool:
        return isinstance(self.terminal, (StuckOmega, StuckName))

    @property
    def periodic(self) -> bool:
        return isinstance(self.terminal, Periodic)

    def __len__(self) -> int:
        return len(self.steps)

    def sequents(self) -> list[Sequent]:
        return [s.sequent for s in self.steps] + [self.last]

    def show(self) -> str:
        lines = []
        if self.opening is not None:
            lines.append(f"N  {self.opening.sequent}  [{self.opening.action}]")
        for i, s in enumerate(self.steps):
            step = f"{s.action} on {s.var}, premise {s.index}"
            lines.append(f"P{i}  {s.sequent}  [{step}]")
            lines.append(f"N{i}  {s.above.sequent}  [{s.above.action}]")
        lines.append(f"P{len(self.steps)}  {self.last}  [{self.terminal}]")
        return "\n".join(lines)


def open_branch(
    s: Sequent,
    defs: DefSystem | None = None,
    fuel: int | None = None,
    linear: bool = False,
    tracer: TraceManager | None = None,
) -> Derived | OpenBranch:
    """Run proof search and return the derivation or the branch that fails.

    Raises:
        NotAProofError: if the subject is not a proof.
        LudicsError: if the fuel ran out before the first positive sequent.
    """
    defs = defs if defs is not None else DefSystem()
    result = prove(s, defs, fuel, linear, tracer)
    if isinstance(result, Derived):
        return result
    branch = _from_search(result.branch)
    if isinstance(result, Failed):
        terminal = result.reason
    elif result.periodic is not None:
        terminal = _periodic(branch, result, defs)
    else:
        terminal = Truncated(len(branch[1]))
    opening, steps, last = branch
    out = OpenBranch(s, opening, steps, last, terminal, defs, linear)
    logging.debug(f"Open branch of {len(steps)} steps, {terminal}")
    return out


def _from_search(
    nodes: Branch,
) -> tuple[NegativeStep | None, tuple[PositiveStep, ...], Sequent]:
    i = 0
    opening = None
    if not nodes[0].sequent.positive:
        if len(nodes) < 2:
            raise LudicsError("Proof search stopped before the first positive sequent")
        opening = _negative_step(nodes[0], nodes[1])
        i = 1
    steps = []
    while i + 2 < len(nodes):
        node = nodes[i]
        rule = node.rule
        if not isinstance(rule, PositiveRule):
            raise LudicsError(f"Expected a positive rule at branch node {i}")
        above = _negative_step(nodes[i + 1], nodes[i + 2])
        steps.append(
            PositiveStep(
                node.sequent, rule.var, rule.connective, rule.action, node.index, above
            )
        )
        i += 2
    return opening, tuple(steps), nodes[i].sequent


def _negative_step(node, child) -> NegativeStep:
    rule = node.rule
    if not isinstance(rule, NegativeRule):
        raise LudicsError("Expected a negative rule in the branch")
    actions = sorted(rule.connective.actions, key=lambda a: a.name)
    base = len(node.sequent.context.entries)
    fresh = tuple(x for x, _ in child.sequent.context.entries[base:])
    return NegativeStep(
        node.sequent, rule.connective, actions[node.index].name, node.index, fresh
    )


def _periodic(branch, result: OutOfFuel, defs: DefSystem) -> Periodic:
    opening, steps, last = branch
    offset = 0 if opening is None else 1
    start = (result.periodic[0] - offset) // 2
    length = result.periodic[1] // 2
    before = live_variables(defs.expand(steps[start].sequent.subject))
    after = live_variables(defs.expand(last.subject))
    return Periodic(start, length, tuple(zip(after, before)))


def replay(branch: OpenBranch, count: int) -> list[PositiveStep]:
    """The first ``count`` positive steps of a periodic branch, unrolled.

    Steps past the repetition follow the premise and action choices of the
    corresponding step one period earlier.
    """
    steps = list(branch.steps)
    if not isinstance(branch.terminal, Periodic):
        return steps[:count]
    period = branch.terminal.length
    current = branch.last
    while len(steps) < count:
        pattern = steps[len(steps) - period]
        step = next_rule(current, branch.defs, branch.linear)
        if not isinstance(step, RuleInstance):
            raise LudicsError("A periodic branch cannot get stuck")
        rule = step.rule
        negative = step.premises[pattern.index]
        inner = next_rule(negative, branch.defs, branch.linear)
        above = inner.premises[pattern.above.index]
        base = len(negative.context.entries)
        fresh = tuple(x for x, _ in above.context.entries[base:])
        top = NegativeStep(
            negative,
            inner.rule.connective,
            pattern.above.action,
            pattern.above.index,
            fresh,
        )
        steps.append(
            PositiveStep(
                current, rule.var, rule.connective, rule.action, pattern.index, top
            )
        )
        current = above
    return steps


def last_after(branch: OpenBranch, steps: list[PositiveStep]) -> Sequent:
    """The positive sequent above the last of ``steps``."""
    if len(steps) == len(branch.steps):
        return branch.last
    if len(steps) < len(branch.steps):
        return branch.steps[len(steps)].sequent
    final = steps[-1]
    inner = next_rule(final.above.sequent, branch.defs, branch.linear)
    return inner.premises[final.above.index]


__all__ = [
    "NegativeStep",
    "PositiveStep",
    "Truncated",
    "Periodic",
    "Terminal",
    "OpenBranch",
    "open_branch",
    "replay",
    "last_after",
]
