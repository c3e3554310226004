"""Meets and the order on positive designs."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from functools import reduce

from ludics.core.typing import ArityError, PolarityError

from .defsystem import DefSystem
from .design import (
    DAIMON,
    OMEGA,
    Branch,
    Conj,
    Design,
    Omega,
    Ref,
    Sum,
    Var,
)
from .equiv import equiv
from .substitute import rename


def daimon_minus(arities: Mapping[str, int]) -> Sum:
    """The negative daimon: every listed name answered by the daimon."""
    return Sum.of(
        Branch(name, tuple(f"x{i}" for i in range(1, ar + 1)), DAIMON)
        for name, ar in arities.items()
    )


def meet(p: Design, q: Design, defs: DefSystem | None = None) -> Design:
    """Binary meet of two positive designs or of two sums.

    Raises:
        PolarityError: on mixed polarities or on a variable operand.
    """
    defs = defs if defs is not None else DefSystem()
    p, q = _prepare(p, defs), _prepare(q, defs)
    if isinstance(p, Sum) and isinstance(q, Sum):
        return _meet_sums(p, q, defs)
    if isinstance(p, Sum) or isinstance(q, Sum):
        raise PolarityError("Cannot meet a positive design with an abstraction")
    if isinstance(p, Omega) or isinstance(q, Omega):
        return OMEGA
    return Conj.of(p.conjuncts + q.conjuncts)


def big_meet(
    xs: Iterable[Design],
    *,
    negative: bool = False,
    defs: DefSystem | None = None,
    names: Mapping[str, int] | None = None,
) -> Design:
    """Meet of a finite set.

    The empty meet is the daimon, or the negative daimon over ``names``
    (default: the declared names of ``defs``) when ``negative`` is set.
    """
    xs = sorted(xs, key=lambda d: d.key)
    if not xs:
        if negative:
            if names is None:
                names = defs.sig.declared() if defs is not None else {}
            return daimon_minus(names)
        return DAIMON
    defs = defs if defs is not None else DefSystem()
    return reduce(lambda a, b: meet(a, b, defs), xs)


def leq(p: Design, q: Design, defs: DefSystem | None = None) -> bool:
    """``p <= q``: p is Omega, or every conjunct of q is a conjunct of p."""
    p, q = _positive(p, defs), _positive(q, defs)
    if isinstance(p, Omega):
        return True
    if isinstance(q, Omega):
        return False
    return all(any(equiv(c, e, defs) for e in p.conjuncts) for c in q.conjuncts)


def _positive(d: Design, defs: DefSystem | None) -> Omega | Conj:
    if isinstance(d, Ref) or (isinstance(d, Conj) and _has_refs(d)):
        if defs is None:
            raise PolarityError("References need a definition system")
        d = defs.expand(d)
    if not isinstance(d, (Omega, Conj)):
        raise PolarityError("Expected a positive design")
    return d


def _has_refs(c: Conj) -> bool:
    return any(isinstance(x, Ref) for x in c.conjuncts)


def _prepare(d: Design, defs: DefSystem) -> Design:
    if isinstance(d, Var):
        raise PolarityError("Cannot meet a variable")
    if isinstance(d, Ref):
        d = defs.resolve(d)
        if isinstance(d, Var):
            raise PolarityError("Cannot meet a variable")
    if isinstance(d, Conj) and _has_refs(d):
        d = defs.expand(d)
    if not isinstance(d, (Omega, Conj, Sum)):
        raise PolarityError(f"Cannot meet {type(d).__name__}")
    return d


def _meet_sums(p: Sum, q: Sum, defs: DefSystem) -> Sum:
    branches = []
    for b in p.branches:
        c = q.get(b.name)
        if c is None:
            continue
        if len(b.params) != len(c.params):
            raise ArityError(f"Branches for '{b.name}' bind different arities")
        params, left, right = _align(b, c, defs)
        branches.append(Branch(b.name, params, meet(left, right, defs)))
    return Sum.of(branches)


def _align(b: Branch, c: Branch, defs: DefSystem):
    if b.params == c.params:
        return b.params, b.body, c.body
    left_free = b.body.free_vars - set(b.params)
    right_free = c.body.free_vars - set(c.params)
    if not set(b.params) & right_free:
        return b.params, b.body, rename(c.body, dict(zip(c.params, b.params)), defs)
    if not set(c.params) & left_free:
        return c.params, rename(b.body, dict(zip(b.params, c.params)), defs), c.body
    params = tuple(defs.fresh(p) for p in b.params)
    return (
        params,
        rename(b.body, dict(zip(b.params, params)), defs),
        rename(c.body, dict(zip(c.params, params)), defs),
    )


__all__ = ["meet", "big_meet", "leq", "daimon_minus"]
