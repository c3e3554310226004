"""Derivability as a least fixpoint over the sequents reachable from a root.

Both provers describe a sequent by its alternatives: each alternative is a
rule label and the premises that rule needs. A sequent is derivable once
every premise of one of its alternatives is.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Callable, Hashable
from dataclasses import dataclass, field
from typing import Any, Generic, TypeVar

from ludics.core.typing import FuelExhaustedError

S = TypeVar("S", bound=Hashable)

Alternative = tuple[Any, tuple[S, ...]]


@dataclass
class Fixpoint(Generic[S]):
    """The rules of every reachable sequent and the derivable ones.

    ``witness`` maps each derivable sequent to the alternative proving it;
    following witnesses from any derivable sequent ends at axioms.
    """

    root: S
    rules: dict[S, list[Alternative]]
    witness: dict[S, int] = field(default_factory=dict)

    @property
    def derivable(self) -> bool:
        return self.root in self.witness

    @property
    def states(self) -> int:
        return len(self.rules)

    def chosen(self, s: S) -> Alternative:
        return self.rules[s][self.witness[s]]


def reachable(
    root: S, expand: Callable[[S], list[Alternative]], fuel: int
) -> dict[S, list[Alternative]]:
    """Breadth-first closure of ``root`` under ``expand``.

    Raises:
        FuelExhaustedError: when more than ``fuel`` sequents are reachable.
    """
    rules: dict[S, list[Alternative]] = {}
    queue = deque([root])
    while queue:
        s = queue.popleft()
        if s in rules:
            continue
        if len(rules) >= fuel:
            raise FuelExhaustedError(
                f"More than {fuel} sequents are reachable from the root"
            )
        rules[s] = expand(s)
        for _, premises in rules[s]:
            queue.extend(p for p in premises if p not in rules)
    return rules


def least_fixpoint(
    root: S, expand: Callable[[S], list[Alternative]], fuel: int
) -> Fixpoint[S]:
    out = Fixpoint(root, reachable(root, expand, fuel))
    changed = True
    while changed:
        changed = False
        for s, alternatives in out.rules.items():
            if s in out.witness:
                continue
            for i, (_, premises) in enumerate(alternatives):
                if all(p in out.witness for p in premises):
                    out.witness[s] = i
                    changed = True
                    break
    return out


__all__ = ["Fixpoint", "Alternative", "reachable", "least_fixpoint"]
