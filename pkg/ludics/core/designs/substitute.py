from __future__ import annotations

from collections.abc import Mapping
from typing import TYPE_CHECKING

from ludics.core.typing import PolarityError

from .design import (
    Branch,
    Conj,
    Design,
    Negative,
    Omega,
    Predesign,
    Ref,
    Sum,
    Trunc,
    Var,
    canonical_key,
)

if TYPE_CHECKING:
    from .defsystem import DefSystem


def substitute(
    d: Design, bindings: Mapping[str, Negative], defs: DefSystem
) -> Design:
    """Simultaneous capture-free substitution of negative designs.

    Bound variables colliding with free variables of a used binding are
    renamed with fresh generated names. References whose arguments receive
    non-variable designs are specialized into (memoized) new definitions.

    Raises:
        PolarityError: if a binding is not a negative design.
    """
    sigma: dict[str, Negative] = {}
    for name, value in bindings.items():
        if defs.polarity(value) != "negative":
            raise PolarityError(
                f"Cannot substitute a positive design for variable '{name}'"
            )
        if isinstance(value, Var) and value.name == name:
            continue
        sigma[name] = value
    return _subst(d, sigma, defs)


def rename(d: Design, mapping: Mapping[str, str], defs: DefSystem) -> Design:
    return _subst(
        d, {k: Var(v) for k, v in mapping.items() if k != v}, defs
    )


def _subst(d: Design, sigma: dict[str, Negative], defs: DefSystem) -> Design:
    if not sigma:
        return d
    fv = d.free_vars
    sigma = {k: v for k, v in sigma.items() if k in fv}
    if not sigma:
        return d
    if isinstance(d, Var):
        return sigma[d.name]
    if isinstance(d, Predesign):
        return Predesign(
            _subst(d.head, sigma, defs),
            d.action,
            tuple(_subst(a, sigma, defs) for a in d.args),
        )
    if isinstance(d, Conj):
        return Conj.of(_subst(c, sigma, defs) for c in d.conjuncts)
    if isinstance(d, Sum):
        return Sum.of(_subst_branch(b, sigma, defs) for b in d.branches)
    if isinstance(d, Ref):
        return _specialize(d, sigma, defs)
    if isinstance(d, (Omega, Trunc)):
        return d
    raise TypeError(f"Not a design: {d!r}")


def _subst_branch(b: Branch, sigma: dict[str, Negative], defs: DefSystem) -> Branch:
    inner = {k: v for k, v in sigma.items() if k not in b.params}
    inner = {k: v for k, v in inner.items() if k in b.body.free_vars}
    if not inner:
        return b
    avoid: set[str] = set()
    for v in inner.values():
        avoid |= v.free_vars
    params = []
    for p in b.params:
        if p in avoid:
            q = defs.fresh(p)
            inner[p] = Var(q)
            params.append(q)
        else:
            params.append(p)
    return Branch(b.name, tuple(params), _subst(b.body, inner, defs))


def _specialize(ref: Ref, sigma: dict[str, Negative], defs: DefSystem) -> Ref:
    values = [sigma.get(a, Var(a)) for a in ref.args]
    if all(isinstance(v, Var) for v in values):
        return Ref(ref.ident, tuple(v.name for v in values))

    outer: list[str] = []
    for v in values:
        names = [v.name] if isinstance(v, Var) else sorted(v.free_vars)
        for n in names:
            if n not in outer:
                outer.append(n)
    index = {n: f"${i}" for i, n in enumerate(outer)}
    pattern = tuple(canonical_key(v, index) for v in values)

    memo_key = (ref.ident, pattern)
    ident = defs.memo.get(memo_key)
    if ident is None:
        definition = defs.lookup(ref.ident)
        ident = defs.unique_ident(f"{ref.ident}'")
        defs.memo[memo_key] = ident
        params = tuple(f"{FRESH_PARAM}{i}" for i in range(len(outer)))
        to_params = {n: Var(p) for n, p in zip(outer, params)}
        canonical_values = [_subst(v, to_params, defs) for v in values]
        body = substitute(
            definition.body, dict(zip(definition.params, canonical_values)), defs
        )
        defs.define(ident, params, body, check=False)
    return Ref(ident, tuple(outer))


FRESH_PARAM = "_p"


__all__ = ["substitute", "rename"]
