"""Sequents, rule tags and derivation trees."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from functools import cached_property

from ludics.core.behaviours.behaviour import Context, LogicalBehaviour, show_behaviour
from ludics.core.behaviours.connective import DUAL_LABELS, LIBRARY, Connective
from ludics.core.designs.design import Design
from ludics.core.designs.printer import show, show_action
from ludics.core.typing import OpenDesignError


@dataclass(frozen=True)
class Sequent:
    """``subject |- context``; negative iff the context has a slot."""

    subject: Design
    context: Context

    def __post_init__(self) -> None:
        extra = self.subject.free_vars - set(self.context.variables)
        if extra:
            raise OpenDesignError(
                f"Subject variables {sorted(extra)} are not in the context"
            )

    @property
    def positive(self) -> bool:
        return not self.context.negative

    @cached_property
    def key(self) -> tuple[str, str]:
        return self.subject.key, _context_key(self.context)

    def __str__(self) -> str:
        ctx = str(self.context)
        return f"{show(self.subject)} |- {ctx}" if ctx else f"{show(self.subject)} |-"


def _context_key(ctx: Context) -> str:
    parts = [f"{x}:{b.key}" for x, b in ctx.entries]
    if ctx.slot is not None:
        parts.append(ctx.slot.key)
    return ",".join(parts)


@dataclass(frozen=True)
class PositiveRule:
    """``(pos alpha, a)`` applied on the context variable ``var``."""

    connective: Connective
    action: str
    var: str
    linear: bool = False

    def __str__(self) -> str:
        suffix = "_lin" if self.linear else ""
        conn = _conn(self.connective, True)
        return f"({conn}, {show_action(self.action)}){suffix} on {self.var}"


@dataclass(frozen=True)
class NegativeRule:
    connective: Connective

    def __str__(self) -> str:
        return f"({_conn(self.connective, False)})"


@dataclass(frozen=True)
class CutRule:
    """Cut on ``var`` with lemma behaviour ``lemma`` (positive)."""

    var: str
    lemma: LogicalBehaviour

    def __str__(self) -> str:
        return f"(cut {self.var}: {show_behaviour(self.lemma)})"


@dataclass(frozen=True)
class DaimonRule:
    """The daimon axiom; only admitted when enumerating models."""

    def __str__(self) -> str:
        return "(daimon)"


Rule = PositiveRule | NegativeRule | CutRule | DaimonRule


def _conn(c: Connective, positive: bool) -> str:
    label = LIBRARY.get(c.key)
    if label is not None:
        return DUAL_LABELS[label] if positive else label
    return c.label or str(c)


@dataclass(frozen=True)
class Derivation:
    """A finite derivation tree; ``premises`` follow the rule's order."""

    sequent: Sequent
    rule: Rule
    premises: tuple[Derivation, ...] = field(default=())

    @cached_property
    def size(self) -> int:
        return 1 + sum(p.size for p in self.premises)

    @cached_property
    def height(self) -> int:
        return 1 + max((p.height for p in self.premises), default=0)

    def walk(self) -> Iterator[tuple[tuple[int, ...], Derivation]]:
        """Pre-order ``(path, node)`` pairs; the root has the empty path."""
        stack: list[tuple[tuple[int, ...], Derivation]] = [((), self)]
        while stack:
            path, node = stack.pop()
            yield path, node
            for i in reversed(range(len(node.premises))):
                stack.append((path + (i,), node.premises[i]))

    def show(self) -> str:
        """Indented rule-tagged tree, conclusion first, premises indented."""
        return "\n".join(
            f"{'  ' * len(path)}{node.rule} :: {node.sequent}"
            for path, node in self.walk()
        )

    def __str__(self) -> str:
        return self.show()


__all__ = [
    "Sequent",
    "PositiveRule",
    "NegativeRule",
    "CutRule",
    "DaimonRule",
    "Rule",
    "Derivation",
]
