from __future__ import annotations

from collections.abc import Iterable
from typing import TYPE_CHECKING

from .design import (
    FRESH_PREFIX,
    Conj,
    Design,
    Omega,
    Predesign,
    Ref,
    Sum,
    Trunc,
    Var,
    variable_names,
)
from .signature import DOWN_ALIAS

if TYPE_CHECKING:
    from .defsystem import DefSystem


def show(d: Design) -> str:
    """Print a design in the input grammar.

    Generated variables, bound or free, are renamed to readable names that
    occur nowhere else in the design.
    """
    taken = variable_names(d)
    return _show(d, _generated(d.free_vars, taken), taken)


def show_definition(ident: str, defs: DefSystem) -> str:
    definition = defs.lookup(ident)
    taken = variable_names(definition.body) | set(definition.params)
    env = _generated(set(definition.params) | definition.body.free_vars, taken)
    params = ", ".join(env.get(p, p) for p in definition.params)
    return f"def {ident}({params}) = {_show(definition.body, env, taken)}"


def show_defs(defs: DefSystem, idents: list[str] | None = None) -> list[str]:
    idents = list(defs.definitions) if idents is None else idents
    return [show_definition(ident, defs) for ident in idents]


def show_action(name: str) -> str:
    return DOWN_ALIAS if name == "up" else name


def _friendly(name: str, taken: set[str]) -> str:
    base = name.lstrip(FRESH_PREFIX).rstrip("0123456789'") or "x"
    candidate = base
    n = 1
    while candidate in taken or candidate.startswith(FRESH_PREFIX):
        candidate = f"{base}{n}"
        n += 1
    taken.add(candidate)
    return candidate


def _generated(names: Iterable[str], taken: set[str]) -> dict[str, str]:
    fresh = sorted(n for n in names if n.startswith(FRESH_PREFIX))
    return {n: _friendly(n, taken) for n in fresh}


def _show(d: Design, env: dict[str, str], taken: set[str]) -> str:
    if isinstance(d, Var):
        return env.get(d.name, d.name)
    if isinstance(d, Omega):
        return "omega"
    if isinstance(d, Trunc):
        return "..."
    if isinstance(d, Ref):
        return f"{d.ident}({', '.join(env.get(a, a) for a in d.args)})"
    if isinstance(d, Predesign):
        head = _show(d.head, env, taken)
        action = show_action(d.action)
        if not d.args:
            return f"{head}|{action}"
        args = ", ".join(_show(a, env, taken) for a in d.args)
        return f"{head}|{action}<{args}>"
    if isinstance(d, Conj):
        if d.is_daimon:
            return "daimon"
        if len(d.conjuncts) == 1:
            return _show(d.conjuncts[0], env, taken)
        return "/\\{" + ", ".join(_show(c, env, taken) for c in d.conjuncts) + "}"
    if isinstance(d, Sum):
        parts = []
        for b in d.branches:
            inner = dict(env)
            shown = []
            for p in b.params:
                if p.startswith(FRESH_PREFIX):
                    inner[p] = _friendly(p, taken)
                else:
                    inner.pop(p, None)
                shown.append(inner.get(p, p))
            body = _show(b.body, inner, taken)
            parts.append(f"{b.name}({', '.join(shown)}) => {body}")
        return "{" + "; ".join(parts) + "}"
    raise TypeError(f"Not a design: {d!r}")


__all__ = ["show", "show_defs", "show_definition", "show_action"]
