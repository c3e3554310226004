from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field

from ludics.core.designs.defsystem import DefSystem
from ludics.core.designs.design import (
    Design,
    Omega,
    Ref,
    Var,
    canonical_key,
    iter_nodes,
)
from ludics.core.generic.trace import TraceManager
from ludics.settings import Settings

from .rules import RuleInstance, Stuck, StuckName, next_rule
from .sequent import Derivation, Rule, Sequent


@dataclass(frozen=True)
class BranchNode:
    """One sequent of a root-to-leaf branch and the step taken from it."""

    sequent: Sequent
    rule: Rule | None = None
    index: int | None = None


Branch = tuple[BranchNode, ...]


@dataclass(frozen=True)
class Derived:
    derivation: Derivation
    nodes: int

    verdict = "derived"


@dataclass(frozen=True)
class Failed:
    """Search got stuck at the last node of ``branch``."""

    branch: Branch
    reason: Stuck
    nodes: int

    verdict = "failed"

    @property
    def kind(self) -> str:
        return "stuck-name" if isinstance(self.reason, StuckName) else "stuck-omega"


@dataclass(frozen=True)
class OutOfFuel:
    """Search stopped unfinished at the last node of ``branch``.

    ``periodic`` is ``(start, length)`` when the positive sequent at
    ``branch[start]`` repeats at ``branch[start + length]``: the branch is
    then infinite and the subject is not derivable.
    """

    branch: Branch
    nodes: int
    periodic: tuple[int, int] | None = None

    verdict = "out-of-fuel"


SearchResult = Derived | Failed | OutOfFuel


@dataclass
class _Node:
    sequent: Sequent
    parent: int | None
    index: int | None
    depth: int
    state: tuple | None
    rule: Rule | None = None
    children: list[int] = field(default_factory=list)


def live_variables(subject: Design) -> list[str]:
    """Free variables of ``subject`` in order of first occurrence."""
    order: list[str] = []
    for node in iter_nodes(subject):
        if isinstance(node, Var):
            names = [node.name]
        elif isinstance(node, Ref):
            names = list(node.args)
        else:
            continue
        for n in names:
            if n in subject.free_vars and n not in order:
                order.append(n)
    return order


def state_key(s: Sequent, defs: DefSystem) -> tuple:
    """Subject up to renaming of its live variables, with their behaviours."""
    subject = defs.expand(s.subject)
    if isinstance(subject, Omega):
        return ("omega",)
    order = live_variables(subject)
    env = {v: f"${i}" for i, v in enumerate(order)}
    behaviours = tuple(s.context.behaviour_of(v).key for v in order)
    return canonical_key(subject, env), behaviours


def prove(
    s: Sequent,
    defs: DefSystem | None = None,
    fuel: int | None = None,
    linear: bool = False,
    tracer: TraceManager | None = None,
) -> SearchResult:
    """Breadth-first cut-free proof search.

    The search tree is unique, so the outcome is a derivation, the branch
    ending at the first stuck node, or the branch of the next node to expand
    when ``fuel`` nodes have been expanded. A positive sequent that repeats
    one of its ancestors up to renaming stops the search with a periodicity
    certificate.

    Raises:
        NotAProofError: if the subject is not a proof.
    """
    defs = defs if defs is not None else DefSystem()
    fuel = fuel if fuel is not None else Settings.Config.ENGINE.fuel
    result = _search(s, defs, fuel, linear)
    logging.debug(f"Proof search finished: {result.verdict} after {result.nodes} nodes")
    if tracer is not None:
        detail = {"nodes": result.nodes, "sequent": str(s)}
        if isinstance(result, Failed):
            detail["reason"] = result.kind
        if isinstance(result, OutOfFuel):
            detail["periodic"] = result.periodic is not None
        tracer.record("prove", verdict=result.verdict, **detail)
    return result


def _search(s: Sequent, defs: DefSystem, fuel: int, linear: bool) -> SearchResult:
    nodes = [_Node(s, None, None, 0, _state(s, defs, linear))]
    queue = deque([0])
    expanded = 0
    while queue:
        if expanded >= fuel:
            return OutOfFuel(_branch(nodes, queue[0]), expanded)
        i = queue.popleft()
        node = nodes[i]
        if node.state is not None:
            ancestor = _repeated(nodes, i)
            if ancestor is not None:
                start = nodes[ancestor].depth
                return OutOfFuel(
                    _branch(nodes, i), expanded, (start, node.depth - start)
                )
        expanded += 1
        step = next_rule(node.sequent, defs, linear)
        if not isinstance(step, RuleInstance):
            return Failed(_branch(nodes, i), step, expanded)
        node.rule = step.rule
        for k, premise in enumerate(step.premises):
            j = len(nodes)
            nodes.append(
                _Node(premise, i, k, node.depth + 1, _state(premise, defs, linear))
            )
            node.children.append(j)
            queue.append(j)

    built: dict[int, Derivation] = {}
    for i in reversed(range(len(nodes))):
        node = nodes[i]
        built[i] = Derivation(
            node.sequent, node.rule, tuple(built[j] for j in node.children)
        )
    return Derived(built[0], expanded)


def _state(s: Sequent, defs: DefSystem, linear: bool) -> tuple | None:
    if linear or not s.positive:
        return None
    return state_key(s, defs)


def _repeated(nodes: list[_Node], i: int) -> int | None:
    target = nodes[i].state
    j = nodes[i].parent
    while j is not None:
        if nodes[j].state == target:
            return j
        j = nodes[j].parent
    return None


def _branch(nodes: list[_Node], i: int) -> Branch:
    path = []
    j: int | None = i
    while j is not None:
        path.append(j)
        j = nodes[j].parent
    path.reverse()
    out = []
    for pos, j in enumerate(path):
        if pos + 1 < len(path):
            child = path[pos + 1]
            out.append(BranchNode(nodes[j].sequent, nodes[j].rule, nodes[child].index))
        else:
            out.append(BranchNode(nodes[j].sequent))
    return tuple(out)


__all__ = [
    "BranchNode",
    "Branch",
    "Derived",
    "Failed",
    "OutOfFuel",
    "SearchResult",
    "prove",
    "live_variables",
    "state_key",
]
