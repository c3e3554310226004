"""Design terms.

Positive designs are ``Omega``, conjunctions of predesigns (``Conj``; the empty
conjunction is the daimon) and positive references. Negative designs are
variables, named sums and negative references. A ``Predesign`` only ever
occurs inside a ``Conj``.

Values are immutable; structural equality is syntactic. Use ``key`` for the
alpha-normalized canonical fingerprint and ``equiv`` for design equivalence.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property
from typing import ClassVar, Union

POSITIVE = "positive"
NEGATIVE = "negative"

# Prefix of generated variables; the parser rejects it in user input.
FRESH_PREFIX = "_"

# The distinguished variable of atomic positive designs.
X0 = "x0"


@dataclass(frozen=True)
class Omega:
    polarity: ClassVar[str | None] = POSITIVE

    @cached_property
    def free_vars(self) -> frozenset[str]:
        return frozenset()

    @cached_property
    def key(self) -> str:
        return canonical_key(self)


@dataclass(frozen=True)
class Trunc:
    """Truncation marker left by depth-bounded normal forms."""

    polarity: ClassVar[str | None] = None

    @cached_property
    def free_vars(self) -> frozenset[str]:
        return frozenset()

    @cached_property
    def key(self) -> str:
        return canonical_key(self)


@dataclass(frozen=True)
class Var:
    name: str

    polarity: ClassVar[str | None] = NEGATIVE

    @cached_property
    def free_vars(self) -> frozenset[str]:
        return frozenset((self.name,))

    @cached_property
    def key(self) -> str:
        return canonical_key(self)


@dataclass(frozen=True)
class Ref:
    """Reference ``ident(args)`` into a DefSystem; args are variables."""

    ident: str
    args: tuple[str, ...] = ()

    polarity: ClassVar[str | None] = None

    @cached_property
    def free_vars(self) -> frozenset[str]:
        return frozenset(self.args)

    @cached_property
    def key(self) -> str:
        return canonical_key(self)


@dataclass(frozen=True)
class Predesign:
    """Application ``head|action<args>``; a cut when the head is not a
    variable."""

    head: Negative
    action: str
    args: tuple[Negative, ...] = ()

    polarity: ClassVar[str | None] = POSITIVE

    @cached_property
    def free_vars(self) -> frozenset[str]:
        out = set(self.head.free_vars)
        for a in self.args:
            out |= a.free_vars
        return frozenset(out)

    @cached_property
    def key(self) -> str:
        return canonical_key(self)


@dataclass(frozen=True)
class Conj:
    conjuncts: tuple[Predesign | Ref, ...] = ()

    polarity: ClassVar[str | None] = POSITIVE

    @classmethod
    def of(cls, items: Iterable[Predesign | Ref]) -> Conj:
        """Canonical conjunction: deduplicated and sorted by key."""
        seen: dict[str, Predesign | Ref] = {}
        for item in items:
            seen.setdefault(item.key, item)
        return cls(tuple(seen[k] for k in sorted(seen)))

    @property
    def is_daimon(self) -> bool:
        return not self.conjuncts

    @cached_property
    def free_vars(self) -> frozenset[str]:
        out: set[str] = set()
        for c in self.conjuncts:
            out |= c.free_vars
        return frozenset(out)

    @cached_property
    def key(self) -> str:
        return canonical_key(self)


@dataclass(frozen=True)
class Branch:
    name: str
    params: tuple[str, ...]
    body: Positive


@dataclass(frozen=True)
class Sum:
    """Named sum; absent names are the Omega component."""

    branches: tuple[Branch, ...] = ()

    polarity: ClassVar[str | None] = NEGATIVE

    @classmethod
    def of(cls, branches: Iterable[Branch]) -> Sum:
        """Canonical sum: sorted by name, explicit Omega branches dropped."""
        kept = (b for b in branches if not isinstance(b.body, Omega))
        return cls(tuple(sorted(kept, key=lambda b: b.name)))

    def get(self, name: str) -> Branch | None:
        for b in self.branches:
            if b.name == name:
                return b
        return None

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(b.name for b in self.branches)

    @cached_property
    def free_vars(self) -> frozenset[str]:
        out: set[str] = set()
        for b in self.branches:
            out |= b.body.free_vars - set(b.params)
        return frozenset(out)

    @cached_property
    def key(self) -> str:
        return canonical_key(self)


Positive = Union[Omega, Conj, Ref, Trunc]
Negative = Union[Var, Sum, Ref]
Design = Union[Omega, Conj, Predesign, Var, Sum, Ref, Trunc]

DAIMON = Conj()
OMEGA = Omega()


def pred(head: Negative, action: str, *args: Negative) -> Conj:
    """Unary conjunction holding one predesign."""
    return Conj((Predesign(head, action, tuple(args)),))


def as_var(name: str) -> Var:
    return Var(name)


def canonical_key(d: Design, env: dict[str, str] | None = None) -> str:
    """Alpha-normalized fingerprint.

    Bound variables become de Bruijn style levels ``^k``; free variables are
    kept by name unless ``env`` maps them.
    """
    return _key(d, env or {}, 0)


def _key(d, env: dict[str, str], level: int) -> str:
    if isinstance(d, Var):
        return env.get(d.name, d.name)
    if isinstance(d, Omega):
        return "omega"
    if isinstance(d, Trunc):
        return "..."
    if isinstance(d, Ref):
        return f"@{d.ident}({','.join(env.get(a, a) for a in d.args)})"
    if isinstance(d, Predesign):
        args = ",".join(_key(a, env, level) for a in d.args)
        return f"{_key(d.head, env, level)}|{d.action}<{args}>"
    if isinstance(d, Conj):
        keys = sorted({_key(c, env, level) for c in d.conjuncts})
        if not keys:
            return "daimon"
        if len(keys) == 1:
            return keys[0]
        return "/\\{" + ",".join(keys) + "}"
    if isinstance(d, Sum):
        parts = []
        for b in d.branches:
            if isinstance(b.body, Omega):
                continue
            inner = dict(env)
            for i, p in enumerate(b.params):
                inner[p] = f"^{level + i}"
            bound = ",".join(inner[p] for p in b.params)
            body = _key(b.body, inner, level + len(b.params))
            parts.append(f"{b.name}({bound})=>{body}")
        return "{" + ";".join(parts) + "}"
    raise TypeError(f"Not a design: {d!r}")


def iter_nodes(d: Design) -> Iterator[Design]:
    """Pre-order traversal of the syntax tree (references are not unfolded)."""
    stack = [d]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, Predesign):
            stack.extend(reversed(node.args))
            stack.append(node.head)
        elif isinstance(node, Conj):
            stack.extend(reversed(node.conjuncts))
        elif isinstance(node, Sum):
            stack.extend(b.body for b in reversed(node.branches))


def variable_names(d: Design) -> set[str]:
    """Every variable name occurring in ``d``, free or bound."""
    out: set[str] = set()
    for node in iter_nodes(d):
        if isinstance(node, Var):
            out.add(node.name)
        elif isinstance(node, Ref):
            out.update(node.args)
        elif isinstance(node, Sum):
            for b in node.branches:
                out.update(b.params)
    return out


def design_size(d: Design) -> int:
    """Number of predesign, sum and variable nodes."""
    return sum(
        1 for node in iter_nodes(d) if isinstance(node, (Predesign, Sum, Var, Ref))
    )


def contains_trunc(d: Design) -> bool:
    return any(isinstance(node, Trunc) for node in iter_nodes(d))
