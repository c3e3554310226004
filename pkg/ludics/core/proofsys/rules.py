"""The two rule schemas of the cut-free proof system.

Proof search is deterministic: a positive sequent ``z|a<M...> |- G`` is
decided by the head variable and the action, a negative sequent by the
connective of its slot. ``next_rule`` returns the unique rule instance with
its premises, or the reason the search is stuck.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from ludics.core.behaviours.behaviour import Context, LogicalBehaviour
from ludics.core.behaviours.connective import Action, Connective
from ludics.core.designs.defsystem import DefSystem
from ludics.core.designs.design import OMEGA, Conj, Design, Omega, Predesign, Sum, Var
from ludics.core.designs.substitute import rename
from ludics.core.typing import (
    ArityError,
    LudicsError,
    NotAProofError,
    OpenDesignError,
)

from .sequent import NegativeRule, PositiveRule, Rule, Sequent


@dataclass(frozen=True)
class StuckOmega:
    """The subject is Omega: no rule concludes it."""

    sequent: Sequent

    def __str__(self) -> str:
        return "stuck: omega"


@dataclass(frozen=True)
class StuckName:
    """The head action is not among the actions of the head's connective."""

    sequent: Sequent
    name: str
    connective: Connective
    var: str

    def __str__(self) -> str:
        return (
            f"stuck: name '{self.name}' is not an action of {self.connective}"
            f" at {self.var}"
        )


Stuck = StuckOmega | StuckName


@dataclass(frozen=True)
class RuleInstance:
    rule: Rule
    premises: tuple[Sequent, ...]


def next_rule(
    s: Sequent, defs: DefSystem | None = None, linear: bool = False
) -> RuleInstance | Stuck:
    """The unique rule instance concluding ``s``, or why there is none.

    With ``linear`` set, positive rules split the remaining context among the
    premises by free-variable usage and consume the focused entry.

    Raises:
        NotAProofError: on a non-unary conjunction, a cut, or a variable in
            negative position.
    """
    defs = defs if defs is not None else DefSystem()
    if s.positive:
        return _positive(s, defs, linear)
    return _negative(s, defs)


def focus(s: Sequent, defs: DefSystem) -> Predesign | None:
    """The predesign of a positive proof subject; None for Omega."""
    subject = defs.expand(s.subject)
    if isinstance(subject, Omega):
        return None
    if not isinstance(subject, Conj) or len(subject.conjuncts) != 1:
        raise NotAProofError(
            "A proof subject must be a single predesign, got a conjunction of"
            f" {len(getattr(subject, 'conjuncts', ()))}"
        )
    c = subject.conjuncts[0]
    head = defs.resolve(c.head)
    if not isinstance(head, Var):
        raise NotAProofError("Proof search does not apply to subjects with cuts")
    return Predesign(head, c.action, c.args)


def _positive(s: Sequent, defs: DefSystem, linear: bool) -> RuleInstance | Stuck:
    c = focus(s, defs)
    if c is None:
        return StuckOmega(s)
    z = c.head.name
    b = s.context.behaviour_of(z)
    if b is None:
        raise OpenDesignError(f"Head variable '{z}' is not in the context")
    action = b.connective.action(c.action)
    if action is None:
        return StuckName(s, c.action, b.connective, z)
    if len(action.vars) != len(c.args):
        raise ArityError(
            f"Action '{c.action}' takes {len(action.vars)} arguments,"
            f" got {len(c.args)}"
        )
    slots = premise_slots(b, action)
    if linear:
        contexts = split_context(s.context, z, c.args)
    else:
        contexts = [s.context] * len(c.args)
    premises = tuple(
        Sequent(m, ctx.with_slot(slot)) for m, ctx, slot in zip(c.args, contexts, slots)
    )
    return RuleInstance(PositiveRule(b.connective, c.action, z, linear), premises)


def premise_slots(b: LogicalBehaviour, action: Action) -> list[LogicalBehaviour]:
    """``N_{i_1}, ..., N_{i_m}`` for the action ``a(z_{i_1}, ..., z_{i_m})``."""
    return [b.args[i] for i in b.connective.indices(action)]


def split_context(ctx: Context, z: str, args: Iterable[Design]) -> list[Context]:
    """Give each remaining entry to the unique argument using its variable."""
    args = list(args)
    rest = [(x, b) for x, b in ctx.entries if x != z]
    parts: list[list] = [[] for _ in args]
    for x, b in rest:
        users = [j for j, m in enumerate(args) if x in m.free_vars]
        if len(users) > 1:
            raise LudicsError(
                f"Variable '{x}' is shared by several premises; the linear rule"
                " does not apply"
            )
        if users:
            parts[users[0]].append((x, b))
    return [Context(entries=tuple(p)) for p in parts]


def fresh_names(
    placeholders: Iterable[str], taken: set[str]
) -> tuple[str, ...]:
    """Reuse each placeholder unless taken, else the first free ``{y}{n}``."""
    out = []
    taken = set(taken)
    for y in placeholders:
        name, n = y, 1
        while name in taken:
            name = f"{y}{n}"
            n += 1
        taken.add(name)
        out.append(name)
    return tuple(out)


def _negative(s: Sequent, defs: DefSystem) -> RuleInstance:
    subject = defs.resolve(s.subject)
    if not isinstance(subject, Sum):
        raise NotAProofError(
            "A negative proof subject must be an abstraction,"
            f" got {type(subject).__name__}"
        )
    slot = s.context.slot
    taken = set(s.context.variables) | subject.free_vars
    premises = []
    for action in sorted(slot.connective.actions, key=lambda a: a.name):
        names = fresh_names(action.vars, taken)
        body = negative_body(subject, action, names, defs)
        bound = [(y, slot.arg_for(x)) for y, x in zip(names, action.vars)]
        premises.append(Sequent(body, s.context.extend(bound)))
    return RuleInstance(NegativeRule(slot.connective), tuple(premises))


def negative_body(
    subject: Sum, action: Action, names: tuple[str, ...], defs: DefSystem
) -> Design:
    """Body of the ``action`` branch with its parameters renamed to ``names``;
    Omega for a missing branch."""
    branch = subject.get(action.name)
    if branch is None:
        return OMEGA
    if len(branch.params) != len(names):
        raise ArityError(
            f"Branch '{branch.name}' binds {len(branch.params)} variables,"
            f" the connective expects {len(names)}"
        )
    return rename(branch.body, dict(zip(branch.params, names)), defs)


__all__ = [
    "StuckOmega",
    "StuckName",
    "Stuck",
    "RuleInstance",
    "next_rule",
    "focus",
    "premise_slots",
    "split_context",
    "fresh_names",
    "negative_body",
]
