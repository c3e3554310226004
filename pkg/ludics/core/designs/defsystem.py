from __future__ import annotations

import itertools
from dataclasses import dataclass

from ludics.core.typing import (
    ArityError,
    DuplicateDefinitionError,
    DuplicateVariableError,
    GuardednessError,
    OpenDesignError,
    PolarityError,
    UnboundDefinitionError,
)

from .design import (
    FRESH_PREFIX,
    NEGATIVE,
    POSITIVE,
    Conj,
    Design,
    Omega,
    Predesign,
    Ref,
    Sum,
    Trunc,
)
from .signature import Signature
from .substitute import rename


@dataclass(frozen=True)
class Definition:
    ident: str
    params: tuple[str, ...]
    body: Design


class DefSystem:
    """Finite system of recursive definitions; also the engine context.

    Besides the definitions it owns the fresh-variable generator and the
    specialization memo used by ``substitute``. Distinct instances share no
    state.

    Example:
        >>> defs = DefSystem(Signature(names={"a": 1}))
        >>> defs.define("eta", ("x",), body)
    """

    def __init__(self, sig: Signature | None = None) -> None:
        self.sig = sig if sig is not None else Signature(schematic=True)
        self.definitions: dict[str, Definition] = {}
        self.memo: dict[tuple, str] = {}
        self._counter = itertools.count(1)

    def __contains__(self, ident: str) -> bool:
        return ident in self.definitions

    def __len__(self) -> int:
        return len(self.definitions)

    # definitions

    def define(
        self,
        ident: str,
        params: tuple[str, ...],
        body: Design,
        check: bool = True,
    ) -> Definition:
        if ident in self.definitions:
            raise DuplicateDefinitionError(f"Definition '{ident}' already exists")
        params = tuple(params)
        if len(set(params)) != len(params):
            raise DuplicateVariableError(
                f"Definition '{ident}' repeats a parameter"
            )
        extra = body.free_vars - set(params)
        if extra:
            raise OpenDesignError(
                f"Definition '{ident}' has free variables {sorted(extra)}"
            )
        definition = Definition(ident, params, body)
        self.definitions[ident] = definition
        if check:
            try:
                self.check()
            except Exception:
                del self.definitions[ident]
                raise
        return definition

    def lookup(self, ident: str) -> Definition:
        try:
            return self.definitions[ident]
        except KeyError:
            raise UnboundDefinitionError(
                f"No definition named '{ident}'"
            ) from None

    def unfold(self, ref: Ref) -> Design:
        definition = self.lookup(ref.ident)
        if len(ref.args) != len(definition.params):
            raise ArityError(
                f"'{ref.ident}' expects {len(definition.params)} arguments,"
                f" got {len(ref.args)}"
            )
        return rename(definition.body, dict(zip(definition.params, ref.args)), self)

    def resolve(self, d: Design) -> Design:
        """Unfold top-level references until a non-reference is reached."""
        seen: set[str] = set()
        while isinstance(d, Ref):
            if d.ident in seen:
                raise GuardednessError(f"Reference '{d.ident}' unfolds to itself")
            seen.add(d.ident)
            d = self.unfold(d)
        return d

    def expand(self, p: Design) -> Omega | Conj | Trunc:
        """Flatten positive references out of a positive design."""
        p = self.resolve(p)
        if isinstance(p, (Omega, Trunc)):
            return p
        if not isinstance(p, Conj):
            raise PolarityError("Expected a positive design")
        if not any(isinstance(c, Ref) for c in p.conjuncts):
            return p
        out: list[Predesign] = []
        for c in p.conjuncts:
            if isinstance(c, Ref):
                inner = self.expand(c)
                if isinstance(inner, Omega):
                    return inner
                if isinstance(inner, Trunc):
                    return inner
                out.extend(inner.conjuncts)
            else:
                out.append(c)
        return Conj.of(out)

    def polarity(self, d: Design) -> str | None:
        seen: set[str] = set()
        while isinstance(d, Ref):
            if d.ident in seen:
                return None
            seen.add(d.ident)
            d = self.lookup(d.ident).body
        return d.polarity

    # fresh names

    def fresh(self, hint: str = "x") -> str:
        base = hint.lstrip(FRESH_PREFIX).rstrip("0123456789'") or "x"
        return f"{FRESH_PREFIX}{base}{next(self._counter)}"

    def unique_ident(self, base: str) -> str:
        ident = base
        while ident in self.definitions:
            ident = f"{ident}'"
        return ident

    # well-formedness

    def check(self) -> None:
        """Validate reference arities, polarities and guardedness."""
        for definition in self.definitions.values():
            expected = self._def_polarity(definition.ident, set())
            self._check_refs(definition.body, expected)
        self._check_guarded()

    def check_design(self, d: Design, polarity: str | None = None) -> None:
        self._check_refs(d, polarity or d.polarity)

    def _def_polarity(self, ident: str, seen: set[str]) -> str:
        if ident in seen:
            raise GuardednessError(f"Definition '{ident}' is a bare reference cycle")
        seen.add(ident)
        body = self.lookup(ident).body
        if isinstance(body, Ref):
            return self._def_polarity(body.ident, seen)
        return body.polarity

    def _check_refs(self, d: Design, expected: str | None) -> None:
        if isinstance(d, Ref):
            definition = self.lookup(d.ident)
            if len(d.args) != len(definition.params):
                raise ArityError(
                    f"'{d.ident}' expects {len(definition.params)} arguments,"
                    f" got {len(d.args)}"
                )
            actual = self._def_polarity(d.ident, set())
            if expected is not None and actual != expected:
                raise PolarityError(
                    f"'{d.ident}' is {actual} but used in {expected} position"
                )
        elif isinstance(d, Predesign):
            self._check_refs(d.head, NEGATIVE)
            for a in d.args:
                self._check_refs(a, NEGATIVE)
        elif isinstance(d, Conj):
            for c in d.conjuncts:
                self._check_refs(c, POSITIVE)
        elif isinstance(d, Sum):
            for b in d.branches:
                self._check_refs(b.body, POSITIVE)

    def _check_guarded(self) -> None:
        graph = {
            ident: _unguarded_refs(definition.body)
            for ident, definition in self.definitions.items()
        }
        state: dict[str, int] = {}

        def visit(ident: str, path: list[str]) -> None:
            state[ident] = 1
            for target in graph.get(ident, ()):
                if state.get(target) == 1:
                    cycle = path[path.index(target) :] + [target]
                    raise GuardednessError(
                        f"Unguarded cycle {' -> '.join(cycle)}"
                    )
                if target not in state:
                    visit(target, path + [target])
            state[ident] = 2

        for ident in graph:
            if ident not in state:
                visit(ident, [ident])

    def copy(self) -> DefSystem:
        other = DefSystem(self.sig)
        other.definitions = dict(self.definitions)
        other.memo = dict(self.memo)
        other._counter = itertools.count(next(self._counter))
        return other


def _unguarded_refs(d: Design) -> set[str]:
    """References reachable without crossing a sum branch or a predesign."""
    if isinstance(d, Ref):
        return {d.ident}
    if isinstance(d, Conj):
        out: set[str] = set()
        for c in d.conjuncts:
            if isinstance(c, Ref):
                out.add(c.ident)
        return out
    return set()


def reachable_definitions(d: Design, defs: DefSystem) -> list[str]:
    """Definitions reachable from ``d``, in discovery order."""
    order: list[str] = []
    stack = [d]
    seen: set[str] = set()
    while stack:
        node = stack.pop()
        for sub in _iter_refs(node):
            if sub.ident not in seen:
                seen.add(sub.ident)
                order.append(sub.ident)
                stack.append(defs.lookup(sub.ident).body)
    return order


def _iter_refs(d: Design):
    if isinstance(d, Ref):
        yield d
    elif isinstance(d, Predesign):
        yield from _iter_refs(d.head)
        for a in d.args:
            yield from _iter_refs(a)
    elif isinstance(d, Conj):
        for c in d.conjuncts:
            yield from _iter_refs(c)
    elif isinstance(d, Sum):
        for b in d.branches:
            yield from _iter_refs(b.body)


__all__ = ["DefSystem", "Definition", "reachable_definitions"]
