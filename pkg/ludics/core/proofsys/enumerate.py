"""Bounded enumeration of derivable sequents by inverting the rules."""

from __future__ import annotations

from collections.abc import Iterator

from ludics.core.behaviours.behaviour import Context
from ludics.core.designs.design import (
    DAIMON,
    Branch,
    Design,
    Sum,
    Var,
    pred,
)
from ludics.core.designs.defsystem import DefSystem
from ludics.core.designs.substitute import substitute
from ludics.core.typing import DerivationError

from .rules import fresh_names, premise_slots
from .sequent import (
    CutRule,
    DaimonRule,
    Derivation,
    NegativeRule,
    PositiveRule,
    Sequent,
)

Entry = tuple[Design, Derivation]


def enumerate_proofs(
    ctx: Context, size: int, daimon: bool = False
) -> list[Entry]:
    """Every derivable ``(subject, derivation)`` with at most ``size`` nodes.

    Subjects are distinct up to alpha-equivalence and ordered by derivation
    size, then canonical key. Negative subjects are the material
    representatives: names outside the connective are absent. With
    ``daimon`` set the daimon is admitted as a one-node positive leaf, which
    yields models such as ``{a(x) => daimon; ...}`` instead of proofs only.
    """
    return _Enumerator(daimon).run(ctx, size)


def iter_proofs(ctx: Context, size: int, daimon: bool = False) -> Iterator[Entry]:
    """Sizes 1, 2, ... up to ``size``, each size's new subjects in order."""
    seen: set[str] = set()
    enumerator = _Enumerator(daimon)
    for budget in range(1, size + 1):
        for d, derivation in enumerator.run(ctx, budget):
            if d.key not in seen:
                seen.add(d.key)
                yield d, derivation


class _Enumerator:

    def __init__(self, daimon: bool) -> None:
        self.daimon = daimon
        self.memo: dict[tuple, list[Entry]] = {}

    def run(self, ctx: Context, budget: int) -> list[Entry]:
        if budget <= 0:
            return []
        key = (_ctx_key(ctx), budget)
        if key not in self.memo:
            if ctx.negative:
                found = self._negative(ctx, budget)
            else:
                found = self._positive(ctx, budget)
            unique: dict[str, Entry] = {}
            for d, derivation in sorted(found, key=lambda e: (e[1].size, e[0].key)):
                unique.setdefault(d.key, (d, derivation))
            self.memo[key] = list(unique.values())
        return self.memo[key]

    def _positive(self, ctx: Context, budget: int) -> list[Entry]:
        out: list[Entry] = []
        if self.daimon:
            out.append((DAIMON, Derivation(Sequent(DAIMON, ctx), DaimonRule())))
        for z, b in ctx.entries:
            for action in sorted(b.connective.actions, key=lambda a: a.name):
                slots = premise_slots(b, action)
                choices = [
                    self.run(ctx.with_slot(slot), budget - len(slots))
                    for slot in slots
                ]
                for combo in _combine(choices, budget - 1):
                    args = tuple(d for d, _ in combo)
                    subject = pred(Var(z), action.name, *args)
                    rule = PositiveRule(b.connective, action.name, z)
                    premises = tuple(p for _, p in combo)
                    derivation = Derivation(Sequent(subject, ctx), rule, premises)
                    out.append((subject, derivation))
        return out

    def _negative(self, ctx: Context, budget: int) -> list[Entry]:
        slot = ctx.slot
        actions = sorted(slot.connective.actions, key=lambda a: a.name)
        premises = []
        for action in actions:
            names = fresh_names(action.vars, set(ctx.variables))
            bound = [(y, slot.arg_for(x)) for y, x in zip(names, action.vars)]
            premises.append((action, names, ctx.extend(bound)))
        choices = [self.run(c, budget - len(actions)) for _, _, c in premises]
        out: list[Entry] = []
        for combo in _combine(choices, budget - 1):
            branches = [
                Branch(action.name, names, d)
                for (action, names, _), (d, _) in zip(premises, combo)
            ]
            subject = Sum.of(branches)
            derivation = Derivation(
                Sequent(subject, ctx),
                NegativeRule(slot.connective),
                tuple(p for _, p in combo),
            )
            out.append((subject, derivation))
        return out


def _combine(choices: list[list[Entry]], budget: int) -> Iterator[tuple[Entry, ...]]:
    """Tuples picking one entry per list with total derivation size <= budget."""
    if not choices:
        yield ()
        return
    head, rest = choices[0], choices[1:]
    floor = len(rest)
    for entry in head:
        remaining = budget - entry[1].size
        if remaining < floor:
            break
        for tail in _combine(rest, remaining):
            yield (entry,) + tail


def _ctx_key(ctx: Context) -> str:
    parts = [f"{x}:{b.key}" for x, b in ctx.entries]
    if ctx.slot is not None:
        parts.append(f"|{ctx.slot.key}")
    return ",".join(parts)


def material_subject(d: Derivation, defs: DefSystem | None = None) -> Design:
    """Rebuild the material subject a derivation proves.

    Negative nodes give sums with exactly the connective's actions, named
    after the variables their premises introduce.

    Raises:
        DerivationError: for a node whose rule cannot be inverted.
    """
    rule = d.rule
    if isinstance(rule, DaimonRule):
        return DAIMON
    if isinstance(rule, PositiveRule):
        args = tuple(material_subject(p, defs) for p in d.premises)
        return pred(Var(rule.var), rule.action, *args)
    if isinstance(rule, NegativeRule):
        base = len(d.sequent.context.entries)
        actions = sorted(rule.connective.actions, key=lambda a: a.name)
        branches = []
        for action, p in zip(actions, d.premises):
            names = tuple(x for x, _ in p.sequent.context.entries[base:])
            body = material_subject(p, defs)
            branches.append(Branch(action.name, names, body))
        return Sum.of(branches)
    if isinstance(rule, CutRule):
        defs = defs if defs is not None else DefSystem()
        left, right = (material_subject(p, defs) for p in d.premises)
        return substitute(left, {rule.var: right}, defs)
    raise DerivationError(f"Cannot rebuild a subject from rule {rule}")


__all__ = ["enumerate_proofs", "iter_proofs", "material_subject"]
