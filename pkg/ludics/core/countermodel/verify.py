from __future__ import annotations

import logging

from ludics.core.behaviours.behaviour import (
    Context,
    LogicalBehaviour,
    dual,
    show_behaviour,
)
from ludics.core.behaviours.membership import member_negative, sample_members
from ludics.core.designs.classify import classify
from ludics.core.designs.design import X0, Design
from ludics.core.designs.printer import show
from ludics.core.designs.substitute import substitute
from ludics.core.models import Field, SchemaModel
from ludics.core.normalize.outcome import EvalOutcome, Verdict
from ludics.core.normalize.reduction import evaluate_closed, orthogonal
from ludics.core.proofsys.sequent import Sequent
from ludics.core.typing import AssignmentError, FuelExhaustedError
from ludics.settings import Settings

from .build import ModelAssignment, universe


def verify_defeat(
    subject: Design,
    ctx: Context,
    m: ModelAssignment,
    fuel: int | None = None,
) -> EvalOutcome:
    """Evaluate the subject against its countermodel.

    The expected verdict is Omega. An approximant only certifies that the
    interaction follows the branch for a number of steps, so a verdict other
    than Omega is reported as Unknown with that progress.

    Raises:
        AssignmentError: if ``m`` was built for another sequent.
    """
    if Sequent(subject, ctx).key != m.branch.root.key:
        raise AssignmentError("The model was built for another sequent")
    bindings = m.bindings()
    closed = substitute(subject, bindings, m.defs) if bindings else subject
    if m.slot is not None:
        closed = substitute(m.slot, {X0: closed}, m.defs)
    outcome = evaluate_closed(closed, m.defs, fuel)
    if not m.exact and not outcome.omega:
        outcome = EvalOutcome(
            verdict=Verdict.UNKNOWN,
            states=outcome.states,
            depth=outcome.depth,
            progress=2 * m.level,
        )
    logging.info(f"Countermodel verdict: {Verdict(outcome.verdict).value}")
    return outcome


class EntryCheck(SchemaModel):
    """Membership of one model in the dual of its context behaviour."""

    variable: str = Field(description="Context variable, or 'slot'")
    behaviour: str = Field(description="The behaviour whose dual must hold the model")
    method: str = Field(description="exact or sampled")
    tried: int = Field(default=0, description="Sampled designs evaluated")
    verdict: Verdict = Field(description="daimon when the model passed")
    counter: str | None = Field(
        default=None, description="A sampled member the model failed against"
    )


class MembershipReport(SchemaModel):
    entries: list[EntryCheck] = Field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(e.verdict == Verdict.DAIMON for e in self.entries)

    def lines(self) -> list[str]:
        return [
            f"{e.variable}: {Verdict(e.verdict).value} ({e.method}, {e.tried} tried)"
            for e in self.entries
        ]


def verify_countermodel_membership(
    m: ModelAssignment,
    ctx: Context,
    fuel: int | None = None,
    samples: int | None = None,
) -> MembershipReport:
    """Check ``M(x)`` lies in the dual of ``P`` for every entry ``x: P``.

    Finite models that are proofs are decided by proof search; otherwise
    the model is evaluated against the first ``samples`` members of ``P``.
    A negative root also checks its slot counter-design against members of
    the slot behaviour.
    """
    samples = samples if samples is not None else Settings.Config.ENGINE.samples
    names = universe(m.branch)
    report = MembershipReport()
    for x, b in ctx.entries:
        report.entries.append(
            _check_negative(x, m.model(x), b, m, names, fuel, samples)
        )
    if ctx.slot is not None and m.slot is not None:
        report.entries.append(_check_slot(m.slot, ctx.slot, m, names, fuel, samples))
    logging.debug(f"Countermodel membership: {report.lines()}")
    return report


def _check_negative(
    x: str,
    model: Design,
    b: LogicalBehaviour,
    m: ModelAssignment,
    names: dict[str, int],
    fuel: int | None,
    samples: int,
) -> EntryCheck:
    label = show_behaviour(b)
    if not m.cyclic and classify(model, m.defs).is_proof:
        try:
            ok = member_negative(model, dual(b), m.defs, fuel)
            return EntryCheck(
                variable=x,
                behaviour=label,
                method="exact",
                verdict=Verdict.DAIMON if ok else Verdict.OMEGA,
            )
        except FuelExhaustedError:
            pass
    check = EntryCheck(
        variable=x, behaviour=label, method="sampled", verdict=Verdict.DAIMON
    )
    pairs = ((e, model) for e in sample_members(b, samples, m.defs, names))
    return _sample(check, pairs, m, fuel)


def _check_slot(
    q: Design,
    slot: LogicalBehaviour,
    m: ModelAssignment,
    names: dict[str, int],
    fuel: int | None,
    samples: int,
) -> EntryCheck:
    check = EntryCheck(
        variable="slot",
        behaviour=show_behaviour(slot),
        method="sampled",
        verdict=Verdict.DAIMON,
    )
    pairs = ((q, n) for n in sample_members(slot, samples, m.defs, names))
    return _sample(check, pairs, m, fuel, counter=1)


def _sample(
    check: EntryCheck,
    pairs,
    m: ModelAssignment,
    fuel: int | None,
    counter: int = 0,
) -> EntryCheck:
    """Evaluate each pair; ``counter`` picks the sampled side to report."""
    for pair in pairs:
        outcome = orthogonal(*pair, m.defs, fuel)
        check.tried += 1
        if outcome.omega:
            check.verdict = Verdict.OMEGA
            check.counter = show(pair[counter])
            break
        if outcome.unknown:
            check.verdict = Verdict.UNKNOWN
    return check


__all__ = [
    "verify_defeat",
    "verify_countermodel_membership",
    "EntryCheck",
    "MembershipReport",
]
