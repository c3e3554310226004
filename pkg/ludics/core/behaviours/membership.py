"""Membership in logical behaviours.

Membership of proofs is decided by proof search, which is exact for proofs.
Models are checked against sampled counter-designs of the dual behaviour:
an Omega among the samples refutes, success is only evidence.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Mapping

from ludics.core.designs.algebra import meet
from ludics.core.designs.classify import classify
from ludics.core.designs.defsystem import DefSystem
from ludics.core.designs.design import (
    DAIMON,
    X0,
    Branch,
    Conj,
    Design,
    Omega,
    Predesign,
    Sum,
    Var,
)
from ludics.core.designs.printer import show
from ludics.core.designs.substitute import substitute
from ludics.core.models import Field, SchemaModel
from ludics.core.normalize.outcome import Verdict
from ludics.core.normalize.reduction import evaluate_closed
from ludics.core.proofsys.enumerate import enumerate_proofs, iter_proofs
from ludics.core.proofsys.search import Derived, Failed, OutOfFuel, prove
from ludics.core.proofsys.sequent import Sequent
from ludics.core.typing import FuelExhaustedError, NotAProofError, PolarityError
from ludics.settings import Settings

from .behaviour import Context, LogicalBehaviour, dual

SAMPLE_SIZE = 6


class EntailmentReport(SchemaModel):
    """Outcome of a sampled entailment check."""

    verdict: Verdict = Field(
        description="omega on a refutation, else daimon or unknown"
    )
    tried: int = Field(default=0, description="Counter-design tuples evaluated")
    daimons: int = Field(default=0, description="Tuples that normalized to the daimon")
    unknowns: int = Field(default=0, description="Tuples that ran out of fuel")
    counter: list[str] | None = Field(
        default=None, description="The refuting counter-designs, printed"
    )

    @property
    def holds(self) -> bool:
        return self.verdict == Verdict.DAIMON

    def summary(self) -> dict[str, str | int]:
        out: dict[str, str | int] = {
            "verdict": Verdict(self.verdict).value,
            "tried": self.tried,
            "daimons": self.daimons,
            "unknowns": self.unknowns,
        }
        if self.counter is not None:
            out["counter"] = " ; ".join(self.counter)
        return out


def member_negative(
    n: Design,
    b: LogicalBehaviour,
    defs: DefSystem | None = None,
    fuel: int | None = None,
) -> bool:
    """Decide ``n`` in ``b`` for a closed negative proof.

    Branches of ``n`` at names outside the connective are ignored.

    Raises:
        PolarityError: if ``b`` is positive.
        NotAProofError: if ``n`` is not a proof.
        FuelExhaustedError: if the search neither succeeds nor fails.
    """
    if b.positive:
        raise PolarityError("member_negative needs a negative behaviour")
    defs = defs if defs is not None else DefSystem()
    return _decide(n, Context(slot=b), defs, fuel)


def member_positive(
    p: Design,
    b: LogicalBehaviour,
    defs: DefSystem | None = None,
    fuel: int | None = None,
) -> bool:
    """Decide ``p`` in ``b`` for a positive proof over ``x0``."""
    if not b.positive:
        raise PolarityError("member_positive needs a positive behaviour")
    defs = defs if defs is not None else DefSystem()
    return _decide(p, Context.of({X0: b}), defs, fuel)


def _decide(d: Design, ctx: Context, defs: DefSystem, fuel: int | None) -> bool:
    if not classify(d, defs).is_proof:
        raise NotAProofError("Exact membership is only decided for proofs")
    result = prove(Sequent(d, ctx), defs, fuel)
    if isinstance(result, Derived):
        return True
    if isinstance(result, Failed):
        return False
    if isinstance(result, OutOfFuel) and result.periodic is not None:
        return False
    raise FuelExhaustedError(
        f"Proof search for '{ctx}' stopped after {result.nodes} nodes"
    )


def ethics_members(
    b: LogicalBehaviour, size: int, daimon: bool = False
) -> list[Design]:
    """Designs ``x0|a<N...>`` with closed members ``N`` of the argument behaviours.

    Bounded by derivation size and ordered by size, then canonical key. With
    ``daimon`` set the arguments may be models built with the daimon.
    """
    if not b.positive:
        raise PolarityError("The ethics is defined for positive behaviours")
    out = []
    for d, _ in enumerate_proofs(Context.of({X0: b}), size, daimon):
        if not isinstance(d, Conj) or len(d.conjuncts) != 1:
            continue
        c = d.conjuncts[0]
        if c.head == Var(X0) and all(not a.free_vars for a in c.args):
            out.append(d)
    return out


def in_ethics(
    d: Design,
    b: LogicalBehaviour,
    defs: DefSystem | None = None,
    fuel: int | None = None,
    samples: int | None = None,
) -> bool:
    """True iff ``d`` is ``x0|a<N...>`` with ``a`` an action of ``b`` and each
    ``N`` a closed member of its argument behaviour.

    Proof arguments are decided exactly; other arguments are sampled.
    """
    if not b.positive:
        raise PolarityError("The ethics is defined for positive behaviours")
    defs = defs if defs is not None else DefSystem()
    state = defs.expand(d)
    if not isinstance(state, Conj) or len(state.conjuncts) != 1:
        return False
    c: Predesign = state.conjuncts[0]
    if defs.resolve(c.head) != Var(X0):
        return False
    action = b.connective.action(c.action)
    if action is None or len(action.vars) != len(c.args):
        return False
    slots = [b.args[i] for i in b.connective.indices(action)]
    for arg, slot in zip(c.args, slots):
        if arg.free_vars:
            return False
        if classify(arg, defs).is_proof:
            if not member_negative(arg, slot, defs, fuel):
                return False
        elif not entails_sampled(arg, Context(slot=slot), defs, fuel, samples).holds:
            return False
    return True


def sample_members(
    b: LogicalBehaviour,
    count: int,
    defs: DefSystem | None = None,
    names: Mapping[str, int] | None = None,
    size: int = SAMPLE_SIZE,
) -> list[Design]:
    """Up to ``count`` members of ``b`` in a reproducible order.

    Proofs and daimon-bearing models come first, by size. Negative members
    are followed by immaterial variants answering every name of ``names``
    outside the connective with the daimon, then pairwise meets. Positive
    members range over ``x0``.
    """
    defs = defs if defs is not None else DefSystem()
    if names is None:
        names = defs.sig.declared()
    ctx = Context.of({X0: b}) if b.positive else Context(slot=b)
    found: dict[str, Design] = {}

    def add(d: Design) -> bool:
        found.setdefault(d.key, d)
        return len(found) >= count

    base = []
    for d, _ in iter_proofs(ctx, size, daimon=True):
        base.append(d)
        if add(d):
            return list(found.values())
    if not b.positive:
        foreign = {a: k for a, k in names.items() if b.connective.action(a) is None}
        for d in base:
            if isinstance(d, Sum) and foreign:
                if add(_with_foreign(d, foreign)):
                    return list(found.values())
    for d, e in itertools.combinations(base, 2):
        if add(meet(d, e, defs)):
            break
    return list(found.values())


def _with_foreign(d: Sum, foreign: Mapping[str, int]) -> Sum:
    extra = [
        Branch(a, tuple(f"x{i}" for i in range(1, k + 1)), DAIMON)
        for a, k in sorted(foreign.items())
        if d.get(a) is None
    ]
    return Sum.of(d.branches + tuple(extra))


def entails_sampled(
    d: Design,
    ctx: Context,
    defs: DefSystem | None = None,
    fuel: int | None = None,
    samples: int | None = None,
) -> EntailmentReport:
    """Evidence for ``d |= ctx`` from sampled counter-designs.

    Each entry ``x: P`` is replaced by a member of the dual of ``P``; for a
    negative context the result is plugged into a member of the dual of the
    slot. The first Omega refutes. The first ``samples`` tuples are tried in
    product order.

    Raises:
        OpenDesignError: if ``d`` uses a variable outside the context.
    """
    defs = defs if defs is not None else DefSystem()
    samples = samples if samples is not None else Settings.Config.ENGINE.samples
    Sequent(d, ctx)
    names = dict(defs.sig.declared())
    for b in ctx.behaviours():
        for action in b.connective.actions:
            names.setdefault(action.name, len(action.vars))
    pools = [sample_members(dual(b), samples, defs, names) for _, b in ctx.entries]
    if ctx.slot is not None:
        pools.append(sample_members(dual(ctx.slot), samples, defs, names))

    report = EntailmentReport(verdict=Verdict.DAIMON)
    for picks in itertools.islice(itertools.product(*pools), samples):
        closed = _plug(d, ctx, picks, defs)
        outcome = evaluate_closed(closed, defs, fuel)
        report.tried += 1
        if outcome.omega:
            report.verdict = Verdict.OMEGA
            report.counter = [show(k) for k in picks]
            break
        if outcome.daimon:
            report.daimons += 1
        else:
            report.unknowns += 1
    # No tuple tried is no evidence either way.
    if report.verdict != Verdict.OMEGA and (report.unknowns or not report.tried):
        report.verdict = Verdict.UNKNOWN
    logging.debug(f"Sampled entailment against '{ctx}': {report.summary()}")
    return report


def _plug(
    d: Design, ctx: Context, picks: tuple[Design, ...], defs: DefSystem
) -> Design:
    bindings = {x: k for (x, _), k in zip(ctx.entries, picks)}
    inner = substitute(d, bindings, defs) if bindings else d
    if ctx.slot is None:
        return inner
    q = picks[-1]
    if isinstance(q, Omega) or X0 not in q.free_vars:
        return q
    return substitute(q, {X0: inner}, defs)


__all__ = [
    "EntailmentReport",
    "member_negative",
    "member_positive",
    "ethics_members",
    "in_ethics",
    "sample_members",
    "entails_sampled",
]
