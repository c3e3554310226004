from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Literal

from pydantic import model_validator

from ludics.core.designs.design import NEGATIVE, POSITIVE
from ludics.core.models import Field, FrozenModel
from ludics.core.typing import ConnectiveError, DuplicateVariableError, PolarityError

from .connective import BOT, DUAL_LABELS, LIBRARY, PAR, TOP, UP, WITH, Connective

Polarity = Literal["positive", "negative"]


class LogicalBehaviour(FrozenModel):
    """``pos alpha<N...>`` or ``neg alpha(P...)``: a finite connective tree.

    Arguments have the opposite polarity. ``key`` identifies behaviours up
    to renaming of connective placeholders.
    """

    polarity: Polarity
    connective: Connective
    args: tuple[LogicalBehaviour, ...] = ()

    @model_validator(mode="after")
    def validate_args(self) -> LogicalBehaviour:
        if len(self.args) != self.connective.arity:
            raise ConnectiveError(
                f"Connective {self.connective} expects {self.connective.arity}"
                f" arguments, got {len(self.args)}"
            )
        for a in self.args:
            if a.polarity == self.polarity:
                raise PolarityError(
                    f"Arguments of a {self.polarity} behaviour must be of the"
                    " opposite polarity"
                )
        return self

    @property
    def positive(self) -> bool:
        return self.polarity == POSITIVE

    @property
    def key(self) -> str:
        return _behaviour_key(self)

    @property
    def depth(self) -> int:
        return 1 + max((a.depth for a in self.args), default=0)

    def arg_for(self, var: str) -> LogicalBehaviour:
        """Argument behaviour bound to the connective placeholder ``var``."""
        return self.args[self.connective.params.index(var)]

    def __str__(self) -> str:
        return show_behaviour(self)


LogicalBehaviour.model_rebuild()


@lru_cache(maxsize=8192)
def _behaviour_key(b: LogicalBehaviour) -> str:
    sign = "+" if b.positive else "-"
    inner = ",".join(a.key for a in b.args)
    return f"{sign}{b.connective.key}<{inner}>"


class Context(FrozenModel):
    """Positive entries ``x:P`` and at most one negative slot."""

    entries: tuple[tuple[str, LogicalBehaviour], ...] = ()
    slot: LogicalBehaviour | None = Field(
        default=None, description="The negative behaviour, if any"
    )

    @model_validator(mode="after")
    def validate_entries(self) -> Context:
        names = [x for x, _ in self.entries]
        if len(set(names)) != len(names):
            raise DuplicateVariableError("Context variables must be distinct")
        for x, b in self.entries:
            if not b.positive:
                raise PolarityError(f"Context entry '{x}' must be positive")
        if self.slot is not None and self.slot.positive:
            raise PolarityError("The context slot must be a negative behaviour")
        return self

    @classmethod
    def of(
        cls, entries: dict[str, LogicalBehaviour] | None = None, slot=None
    ) -> Context:
        return cls(entries=tuple((entries or {}).items()), slot=slot)

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(x for x, _ in self.entries)

    @property
    def negative(self) -> bool:
        return self.slot is not None

    def behaviour_of(self, x: str) -> LogicalBehaviour | None:
        for y, b in self.entries:
            if y == x:
                return b
        return None

    def extend(self, pairs) -> Context:
        return Context(entries=self.entries + tuple(pairs), slot=None)

    def restrict(self, keep) -> Context:
        keep = set(keep)
        return Context(
            entries=tuple((x, b) for x, b in self.entries if x in keep),
            slot=self.slot,
        )

    def with_slot(self, slot: LogicalBehaviour | None) -> Context:
        return Context(entries=self.entries, slot=slot)

    def behaviours(self) -> list[LogicalBehaviour]:
        out = [b for _, b in self.entries]
        if self.slot is not None:
            out.append(self.slot)
        return out

    def __str__(self) -> str:
        parts = [f"{x}: {b}" for x, b in self.entries]
        if self.slot is not None:
            parts.append(str(self.slot))
        return ", ".join(parts)


def dual(b: LogicalBehaviour) -> LogicalBehaviour:
    """Flip polarity, keep the connective, dualize the arguments."""
    return LogicalBehaviour(
        polarity=NEGATIVE if b.positive else POSITIVE,
        connective=b.connective,
        args=tuple(dual(a) for a in b.args),
    )


def positive(connective: Connective, *args: LogicalBehaviour) -> LogicalBehaviour:
    return LogicalBehaviour(polarity=POSITIVE, connective=connective, args=args)


def negative(connective: Connective, *args: LogicalBehaviour) -> LogicalBehaviour:
    return LogicalBehaviour(polarity=NEGATIVE, connective=connective, args=args)


def one() -> LogicalBehaviour:
    return positive(BOT)


def zero() -> LogicalBehaviour:
    return positive(TOP)


def down(n: LogicalBehaviour) -> LogicalBehaviour:
    return positive(UP, n)


def tensor(n: LogicalBehaviour, m: LogicalBehaviour) -> LogicalBehaviour:
    return positive(PAR, n, m)


def plus(n: LogicalBehaviour, m: LogicalBehaviour) -> LogicalBehaviour:
    return positive(WITH, n, m)


def bot() -> LogicalBehaviour:
    return negative(BOT)


def top() -> LogicalBehaviour:
    return negative(TOP)


def up(p: LogicalBehaviour) -> LogicalBehaviour:
    return negative(UP, p)


def par(p: LogicalBehaviour, q: LogicalBehaviour) -> LogicalBehaviour:
    return negative(PAR, p, q)


def with_(p: LogicalBehaviour, q: LogicalBehaviour) -> LogicalBehaviour:
    return negative(WITH, p, q)


def library_label(b: LogicalBehaviour) -> str | None:
    """Linear-logic keyword for ``b``'s connective, if it is in the table."""
    label = LIBRARY.get(b.connective.key)
    if label is None:
        return None
    if b.positive:
        return DUAL_LABELS[label]
    return label


def show_behaviour(b: LogicalBehaviour, names: dict[str, str] | None = None) -> str:
    """Print in the behaviour grammar.

    Connectives outside the linear-logic table print as ``pos NAME<...>`` or
    ``neg NAME(...)``; ``names`` maps connective keys to the declared name,
    defaulting to the connective label.
    """
    label = library_label(b)
    if label is not None:
        if not b.args:
            return label
        return f"{label}({', '.join(show_behaviour(a, names) for a in b.args)})"
    name = (names or {}).get(b.connective.key) or b.connective.label or "c"
    inner = ", ".join(show_behaviour(a, names) for a in b.args)
    if b.positive:
        return f"pos {name}<{inner}>"
    return f"neg {name}({inner})"


def connective_decls(bs: list[LogicalBehaviour]) -> tuple[list[str], dict[str, str]]:
    """``conn`` declarations for the non-library connectives used in ``bs``."""
    names: dict[str, str] = {}
    decls: list[str] = []
    counter = itertools.count(1)

    def visit(b: LogicalBehaviour) -> None:
        key = b.connective.key
        if library_label(b) is None and key not in names:
            names[key] = f"s{next(counter)}"
            c = b.connective
            actions = " ".join(f"{a.name}({', '.join(a.vars)})" for a in c.actions)
            decls.append(f"conn {names[key]}({', '.join(c.params)}) {{ {actions} }}")
        for a in b.args:
            visit(a)

    for b in bs:
        visit(b)
    return decls, names


def enumerate_behaviours(
    depth: int, polarity: Polarity = POSITIVE
) -> list[LogicalBehaviour]:
    """Linear-logic behaviours of depth at most ``depth``, canonically ordered."""
    pos: dict[int, list[LogicalBehaviour]] = {0: []}
    neg: dict[int, list[LogicalBehaviour]] = {0: []}
    for d in range(1, depth + 1):
        lower_neg = [b for k in range(d) for b in neg[k]]
        lower_pos = [b for k in range(d) for b in pos[k]]
        if d == 1:
            pos[d] = [one(), zero()]
            neg[d] = [bot(), top()]
            continue
        new_pos = [down(n) for n in lower_neg]
        new_neg = [up(p) for p in lower_pos]
        for n, m in itertools.product(lower_neg, repeat=2):
            if max(n.depth, m.depth) == d - 1:
                new_pos += [tensor(n, m), plus(n, m)]
        for p, q in itertools.product(lower_pos, repeat=2):
            if max(p.depth, q.depth) == d - 1:
                new_neg += [par(p, q), with_(p, q)]
        pos[d] = [b for b in new_pos if b.depth == d]
        neg[d] = [b for b in new_neg if b.depth == d]
    table = pos if polarity == POSITIVE else neg
    out = [b for k in range(1, depth + 1) for b in table[k]]
    return sorted(out, key=lambda b: (b.depth, len(b.key), b.key))


__all__ = [
    "LogicalBehaviour",
    "Context",
    "dual",
    "positive",
    "negative",
    "one",
    "zero",
    "down",
    "tensor",
    "plus",
    "bot",
    "top",
    "up",
    "par",
    "with_",
    "library_label",
    "show_behaviour",
    "connective_decls",
    "enumerate_behaviours",
]
