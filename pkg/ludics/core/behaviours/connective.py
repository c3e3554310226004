from __future__ import annotations

from functools import lru_cache

from pydantic import model_validator

from ludics.core.models import Field, FrozenModel
from ludics.core.typing import ConnectiveError


@lru_cache(maxsize=4096)
def _connective_key(params: tuple[str, ...], actions: tuple[Action, ...]) -> str:
    index = {p: str(i) for i, p in enumerate(params)}
    parts = sorted(f"{a.name}({','.join(index[v] for v in a.vars)})" for a in actions)
    return f"[{len(params)}|{';'.join(parts)}]"


class Action(FrozenModel):
    """Negative action ``name(vars)`` of a connective."""

    name: str
    vars: tuple[str, ...] = ()

    def __str__(self) -> str:
        return f"{self.name}({', '.join(self.vars)})"


class Connective(FrozenModel):
    """Logical connective: placeholders plus name-distinct actions.

    Two connectives that differ only by a renaming of the placeholders have
    the same ``key``. ``label`` is a display name and takes no part in
    comparisons made through ``key``.
    """

    params: tuple[str, ...] = ()
    actions: tuple[Action, ...] = ()
    label: str | None = Field(default=None, description="Display name")

    @model_validator(mode="after")
    def validate_shape(self) -> Connective:
        if len(set(self.params)) != len(self.params):
            raise ConnectiveError("Connective placeholders must be distinct")
        names = [a.name for a in self.actions]
        if len(set(names)) != len(names):
            raise ConnectiveError("Connective actions must have distinct names")
        for a in self.actions:
            if len(set(a.vars)) != len(a.vars):
                raise ConnectiveError(f"Action {a} repeats a variable")
            outside = set(a.vars) - set(self.params)
            if outside:
                raise ConnectiveError(
                    f"Action {a} uses variables {sorted(outside)} outside the"
                    " placeholders"
                )
        return self

    @property
    def arity(self) -> int:
        return len(self.params)

    def action(self, name: str) -> Action | None:
        for a in self.actions:
            if a.name == name:
                return a
        return None

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.actions)

    def indices(self, action: Action) -> tuple[int, ...]:
        """Positions in ``params`` of the action's variables."""
        return tuple(self.params.index(v) for v in action.vars)

    @property
    def key(self) -> str:
        return _connective_key(self.params, self.actions)

    def same(self, other: Connective) -> bool:
        return self.key == other.key

    def __str__(self) -> str:
        if self.label:
            return self.label
        return f"({', '.join(self.params)}, {{{', '.join(map(str, self.actions))}}})"


def make_connective(
    params: tuple[str, ...] | list[str],
    actions: list[tuple[str, tuple[str, ...] | list[str]]],
    label: str | None = None,
) -> Connective:
    """Build a connective from plain tuples.

    Raises:
        ConnectiveError: on duplicate names, repeated variables or variables
            outside ``params``.
    """
    try:
        return Connective(
            params=tuple(params),
            actions=tuple(Action(name=n, vars=tuple(v)) for n, v in actions),
            label=label,
        )
    except ConnectiveError:
        raise
    except ValueError as e:
        raise ConnectiveError(str(e)) from e


# The linear-logic table; a connective and its dual share the tuple.
PAR = make_connective(("x1", "x2"), [("wp", ("x1", "x2"))], label="par")
WITH = make_connective(("x1", "x2"), [("pi1", ("x1",)), ("pi2", ("x2",))], label="with")
UP = make_connective(("x",), [("up", ("x",))], label="up")
BOT = make_connective((), [("*", ())], label="bot")
TOP = make_connective((), [], label="top")

# Positive labels for the same tuples.
DUAL_LABELS = {
    "par": "tensor",
    "with": "plus",
    "up": "down",
    "bot": "one",
    "top": "zero",
}
LIBRARY = {c.key: c.label for c in (PAR, WITH, UP, BOT, TOP)}


__all__ = [
    "Action",
    "Connective",
    "make_connective",
    "PAR",
    "WITH",
    "UP",
    "BOT",
    "TOP",
    "DUAL_LABELS",
    "LIBRARY",
]
