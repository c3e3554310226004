"""Two provers for strict sequents.

``prove_llp`` translates the sequent into a ludics context and decides it in
system L; when derivable it builds the proof design and has it checked by
the ludics proof search. ``prove_llp_syn_direct`` runs the synthetic rules
of the logic itself and serves as the oracle for the first.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import count

from ludics.core.behaviours.behaviour import Context, LogicalBehaviour
from ludics.core.designs.design import Branch, Design, Sum, Var, pred
from ludics.core.designs.signature import Signature
from ludics.core.proofsys.rules import premise_slots
from ludics.core.proofsys.search import Derived, prove
from ludics.core.proofsys.sequent import Derivation, Sequent
from ludics.core.typing import LudicsError
from ludics.settings import Settings

from .formula import LLPFormula, StrictSequent, as_sequent, show_llp
from .search import Alternative, Fixpoint, least_fixpoint, reachable
from .translate import bullet

# |- Gamma (, N): behaviour keys of the positive entries, the slot and the
# entry the first rule must use
LState = tuple[frozenset[str], str | None, str | None]

# |- ?Gamma (, D)
SynState = tuple[frozenset[LLPFormula], LLPFormula | None]


@dataclass(frozen=True)
class LLPResult:
    """Verdict on a strict sequent.

    Results of ``prove_llp`` also carry the proof design, its context and the
    derivation the ludics proof search found for it.
    """

    sequent: StrictSequent
    derivable: bool
    states: int
    subject: Design | None = None
    context: Context | None = None
    derivation: Derivation | None = None

    @property
    def verdict(self) -> str:
        return "derivable" if self.derivable else "underivable"


class _Translation:
    """The ludics side of a strict sequent: behaviours by key."""

    def __init__(self, s: StrictSequent, sig: Signature) -> None:
        self.table: dict[str, LogicalBehaviour] = {}
        self.entries: list[tuple[str, LogicalBehaviour]] = []
        for i, p in enumerate(s.whynots, start=1):
            self.entries.append((f"x{i}", self.add(bullet(p, sig))))
        self.slot = self.focus = None
        if s.rest is not None:
            d = self.add(bullet(s.rest, sig))
            if d.positive:
                self.entries.append(("x0", d))
                self.focus = d.key
            else:
                self.slot = d.key
        self.context = Context(
            entries=tuple(self.entries),
            slot=self.table[self.slot] if self.slot is not None else None,
        )
        self.root: LState = (
            frozenset(b.key for x, b in self.entries if x != "x0"),
            self.slot,
            self.focus,
        )

    def add(self, b: LogicalBehaviour) -> LogicalBehaviour:
        self.table.setdefault(b.key, b)
        for a in b.args:
            self.add(a)
        return b

    def expand(self, state: LState) -> list[Alternative]:
        gamma, slot, focus = state
        if slot is not None:
            n = self.table[slot]
            premises = tuple(
                (gamma | {p.key for p in premise_slots(n, a)}, None, None)
                for a in _actions(n)
            )
            return [(None, premises)]
        out = []
        for key in [focus] if focus is not None else sorted(gamma):
            b = self.table[key]
            for a in _actions(b):
                premises = tuple((gamma, m.key, None) for m in premise_slots(b, a))
                out.append(((key, a.name), premises))
        return out


def _actions(b: LogicalBehaviour):
    return sorted(b.connective.actions, key=lambda a: a.name)


class _Reconstruction:
    """The proof design read off the witnesses of a fixpoint."""

    def __init__(self, t: _Translation, fix: Fixpoint[LState]) -> None:
        self.t = t
        self.fix = fix
        self.fresh = count(1)

    def design(self, state: LState, env: dict[str, str]) -> Design:
        label, premises = self.fix.chosen(state)
        _, slot, _ = state
        if slot is None:
            key, action = label
            args = [self.design(p, env) for p in premises]
            return pred(Var(env[key]), action, *args)
        n = self.t.table[slot]
        branches = []
        for a, p in zip(_actions(n), premises):
            names = tuple(f"y{next(self.fresh)}" for _ in a.vars)
            inner = dict(env)
            for y, x in zip(names, a.vars):
                inner[n.arg_for(x).key] = y
            branches.append(Branch(a.name, names, self.design(p, inner)))
        return Sum.of(branches)


def prove_llp(
    s: StrictSequent | str | list[LLPFormula],
    fuel: int | None = None,
    sig: Signature | None = None,
) -> LLPResult:
    """Decide ``s`` through its translation into system L.

    A positive unrestricted formula is the entry the first rule acts on;
    afterwards every entry stays available. The proof design of a derivable
    sequent is checked by the ludics proof search.

    Raises:
        NonStrictSequentError: if ``s`` has two formulas outside ``?``.
        FuelExhaustedError: when more than ``fuel`` sequents are reachable.
    """
    s = as_sequent(s)
    fuel = fuel if fuel is not None else Settings.Config.ENGINE.fuel
    t = _Translation(s, sig if sig is not None else Signature())
    fix = least_fixpoint(t.root, t.expand, fuel)
    if not fix.derivable:
        logging.info(f"{s}: underivable after {fix.states} sequents")
        return LLPResult(s, False, fix.states)

    env: dict[str, str] = {}
    for x, b in t.entries:
        env.setdefault(b.key, x)
    subject = _Reconstruction(t, fix).design(t.root, env)
    result = prove(Sequent(subject, t.context), fuel=fuel)
    if not isinstance(result, Derived):
        raise LudicsError(f"The proof design of '{s}' was rejected: {result.verdict}")
    logging.info(f"{s}: derivable after {fix.states} sequents")
    return LLPResult(s, True, fix.states, subject, t.context, result.derivation)


def _positive_choices(p: LLPFormula) -> list[tuple[LLPFormula, ...]]:
    """Premises of each positive synthetic rule: the ``!``-leaves collected
    along one choice at every plus."""
    if p.kind == "zero":
        return []
    if p.kind == "one":
        return [()]
    if p.kind == "bang":
        return [(p.args[0],)]
    left, right = (_positive_choices(a) for a in p.args)
    if p.kind == "tensor":
        return [a + b for a in left for b in right]
    return left + right


def _negative_premises(n: LLPFormula) -> list[tuple[LLPFormula, ...]]:
    """Formulas each premise of the negative synthetic rule adds under ``?``."""
    if n.kind == "top":
        return []
    if n.kind == "bot":
        return [()]
    if n.kind == "why":
        return [(n.args[0],)]
    left, right = (_negative_premises(a) for a in n.args)
    if n.kind == "par":
        return [a + b for a in left for b in right]
    return left + right


def _expand_syn(state: SynState) -> list[Alternative]:
    gamma, d = state
    if d is None:
        return [
            (("derelict", p), ((gamma, p),)) for p in sorted(gamma, key=show_llp)
        ]
    if d.positive:
        return [
            (("positive", i), tuple((gamma, n) for n in choice))
            for i, choice in enumerate(_positive_choices(d))
        ]
    premises = tuple((gamma | set(ps), None) for ps in _negative_premises(d))
    return [("negative", premises)]


def _syn_root(s: StrictSequent) -> SynState:
    return frozenset(s.whynots), s.rest


def prove_llp_syn_direct(
    s: StrictSequent | str | list[LLPFormula], fuel: int | None = None
) -> LLPResult:
    """Decide ``s`` with the synthetic rules: every positive subderivation,
    the unique negative one, and dereliction of a ``?``-formula.

    Raises:
        NonStrictSequentError: if ``s`` has two formulas outside ``?``.
        FuelExhaustedError: when more than ``fuel`` sequents are reachable.
    """
    s = as_sequent(s)
    fuel = fuel if fuel is not None else Settings.Config.ENGINE.fuel
    fix = least_fixpoint(_syn_root(s), _expand_syn, fuel)
    logging.debug(f"{s}: {fix.derivable} by the synthetic rules")
    return LLPResult(s, fix.derivable, fix.states)


def reachable_sequents(
    s: StrictSequent | str | list[LLPFormula], fuel: int | None = None
) -> list[StrictSequent]:
    """Every sequent the synthetic rules reach from ``s``, root first."""
    s = as_sequent(s)
    fuel = fuel if fuel is not None else Settings.Config.ENGINE.fuel
    rules = reachable(_syn_root(s), _expand_syn, fuel)
    return [
        StrictSequent(whynots=tuple(sorted(gamma, key=show_llp)), rest=d)
        for gamma, d in rules
    ]


__all__ = [
    "LLPResult",
    "prove_llp",
    "prove_llp_syn_direct",
    "reachable_sequents",
]
