"""Command line: ``ludics [OPTIONS] COMMAND ...``.

Exit codes: 0 for daimon, derivable or a countermodel found; 1 for omega,
underivable or a periodic branch; 2 when fuel ran out; 3 on usage, parse and
engine errors.
"""

from __future__ import annotations

import logging
import sys
from dataclasses import dataclass
from pathlib import Path

import click
from pydantic import ValidationError

from ludics.core.behaviours.behaviour import Context, connective_decls, show_behaviour
from ludics.core.behaviours.membership import ethics_members
from ludics.core.countermodel import (
    Truncated,
    build_countermodel,
    open_branch,
    verify_countermodel_membership,
    verify_defeat,
)
from ludics.core.designs.defsystem import DefSystem
from ludics.core.designs.design import POSITIVE
from ludics.core.designs.printer import show
from ludics.core.generic.trace import TraceManager
from ludics.core.llp import (
    bullet,
    circ,
    parse_llp,
    prove_llp,
    prove_llp_syn_direct,
    show_llp,
    synthetic_shape,
)
from ludics.core.llp.formula import StrictSequent
from ludics.core.normalize.normal_form import normal_form
from ludics.core.normalize.outcome import EvalOutcome, Verdict
from ludics.core.normalize.reduction import evaluate_closed, orthogonal
from ludics.core.proofsys.enumerate import enumerate_proofs
from ludics.core.proofsys.search import Derived, Failed, prove
from ludics.core.proofsys.sequent import Sequent
from ludics.core.syntax import parse_behaviour, parse_design, parse_sequent
from ludics.core.typing import LudicsError
from ludics.protocols.configs import EngineConfig
from ludics.settings import Settings

EXIT_OK, EXIT_REFUTED, EXIT_UNKNOWN, EXIT_ERROR = 0, 1, 2, 3

VERDICT_EXIT = {
    Verdict.DAIMON: EXIT_OK,
    Verdict.OMEGA: EXIT_REFUTED,
    Verdict.UNKNOWN: EXIT_UNKNOWN,
}

INPUT = click.Path(exists=True, dir_okay=False, path_type=Path)


@dataclass
class Invocation:
    engine: EngineConfig
    tracer: TraceManager | None = None

    @property
    def fuel(self) -> int:
        return self.engine.fuel

    def emit(self, lines: list[str], report: dict) -> None:
        """Print ``lines``, or ``key: value`` lines in report format."""
        if self.engine.format == "report":
            for k, v in report.items():
                click.echo(f"{k}: {v}")
        else:
            for line in lines:
                click.echo(line)

    def finish(self, code: int) -> int:
        if self.tracer is not None:
            self.tracer.record("exit", code=code)
            self.tracer.dump()
        return code


@click.group()
@click.option("--fuel", type=click.IntRange(min=1), default=None, help="State budget")
@click.option("--depth", type=click.IntRange(min=1), default=None, help="Print depth")
@click.option(
    "--samples",
    type=click.IntRange(min=1),
    default=None,
    help="Sampled counter-designs",
)
@click.option("--format", "fmt", type=click.Choice(["text", "report"]), default=None)
@click.option(
    "--trace-dir",
    type=click.Path(file_okay=False, path_type=Path),
    default=None,
    help="Write a CSV trace of engine events here",
)
@click.pass_context
def cli(ctx, fuel, depth, samples, fmt, trace_dir):
    """Designs, behaviours and proof search."""
    flags = {"fuel": fuel, "depth": depth, "samples": samples, "format": fmt}
    overrides = {k: v for k, v in flags.items() if v is not None}
    engine = EngineConfig(**{**Settings.Config.ENGINE.model_dump(), **overrides})
    tracer = None
    if trace_dir is not None:
        update = {"persist_dir": str(trace_dir)}
        config = Settings.Config.TRACE.model_copy(update=update)
        tracer = TraceManager.from_config(config)
    ctx.obj = Invocation(engine, tracer)


def _outcome_lines(outcome: EvalOutcome) -> list[str]:
    lines = [Verdict(outcome.verdict).value]
    if outcome.omega:
        kind = "cycle" if outcome.cycle else "path"
        lines.append(f"certificate ({kind}): {' -> '.join(outcome.path)}")
    return lines


@cli.command("normalize")
@click.argument("file", type=INPUT)
@click.pass_obj
def normalize_cmd(inv: Invocation, file: Path) -> int:
    """Print the normal form of a design file; closed positive designs also
    get their evaluation verdict."""
    design, defs = parse_design(file.read_text())
    if design is None:
        raise click.UsageError(f"{file} holds no design")
    nf = normal_form(design, defs, inv.fuel, inv.engine.depth)
    lines, report = [show(nf)], {"normal_form": show(nf)}
    code = EXIT_OK
    if defs.polarity(design) == POSITIVE and not design.free_vars:
        outcome = evaluate_closed(design, defs, inv.fuel, inv.tracer)
        lines += _outcome_lines(outcome)
        report.update(outcome.summary())
        code = VERDICT_EXIT[Verdict(outcome.verdict)]
    inv.emit(lines, report)
    return inv.finish(code)


def _merge(first: DefSystem, second: DefSystem) -> DefSystem:
    out = first.copy()
    for ident, d in second.definitions.items():
        if ident not in out:
            out.define(ident, d.params, d.body, check=False)
    out.check()
    return out


@cli.command("orthogonal")
@click.argument("positive_file", type=INPUT)
@click.argument("negative_file", type=INPUT)
@click.pass_obj
def orthogonal_cmd(inv: Invocation, positive_file: Path, negative_file: Path) -> int:
    """Evaluate ``P[N/x0]`` for a positive design over x0 and a closed
    negative one."""
    p, pdefs = parse_design(positive_file.read_text())
    n, ndefs = parse_design(negative_file.read_text(), pdefs.sig)
    if p is None or n is None:
        raise click.UsageError("Both files must hold a design")
    outcome = orthogonal(p, n, _merge(pdefs, ndefs), inv.fuel, inv.tracer)
    inv.emit(_outcome_lines(outcome), outcome.summary())
    return inv.finish(VERDICT_EXIT[Verdict(outcome.verdict)])


@cli.command("prove")
@click.argument("file", type=INPUT)
@click.option("--linear", is_flag=True, help="Use the linear positive rule")
@click.pass_obj
def prove_cmd(inv: Invocation, file: Path, linear: bool) -> int:
    """Run proof search on a sequent file."""
    subject, context, defs = parse_sequent(file.read_text())
    result = prove(Sequent(subject, context), defs, inv.fuel, linear, inv.tracer)
    report = {"verdict": result.verdict, "nodes": result.nodes}
    if isinstance(result, Derived):
        report["size"] = result.derivation.size
        inv.emit(["derivable", result.derivation.show()], report)
        return inv.finish(EXIT_OK)
    last = result.branch[-1].sequent
    if isinstance(result, Failed):
        report.update(reason=result.kind, at=str(last))
        inv.emit([f"underivable: {result.reason}", f"at {last}"], report)
        return inv.finish(EXIT_REFUTED)
    if result.periodic is not None:
        start, length = result.periodic
        report.update(periodic_start=start, period=length)
        inv.emit(
            [f"underivable: branch repeats from node {start} every {length} nodes"],
            report,
        )
        return inv.finish(EXIT_REFUTED)
    report["at"] = str(last)
    lines = [f"unknown: fuel ran out after {result.nodes} nodes", f"at {last}"]
    inv.emit(lines, report)
    return inv.finish(EXIT_UNKNOWN)


@cli.command("countermodel")
@click.argument("file", type=INPUT)
@click.option("--linear", is_flag=True, help="Use the linear positive rule")
@click.pass_obj
def countermodel_cmd(inv: Invocation, file: Path, linear: bool) -> int:
    """Build and check the countermodel of an underivable sequent."""
    subject, context, defs = parse_sequent(file.read_text())
    branch = open_branch(Sequent(subject, context), defs, inv.fuel, linear, inv.tracer)
    if isinstance(branch, Derived):
        inv.emit(["derivable: no countermodel"], {"verdict": "derived"})
        return inv.finish(EXIT_REFUTED)
    m = build_countermodel(branch)
    defeat = verify_defeat(subject, context, m, inv.fuel)
    members = verify_countermodel_membership(m, context, inv.fuel, inv.engine.samples)
    lines = [f"branch: {len(branch)} steps, {branch.terminal}"]
    lines += m.show()
    lines.append(f"defeat: {Verdict(defeat.verdict).value}")
    lines += [f"member {line}" for line in members.lines()]
    report = {
        "terminal": str(branch.terminal),
        "steps": len(branch),
        "exact": m.exact,
        "cyclic": m.cyclic,
        "defeat": Verdict(defeat.verdict).value,
        "membership": "pass" if members.holds else "fail",
    }
    inv.emit(lines, report)
    if isinstance(branch.terminal, Truncated):
        return inv.finish(EXIT_UNKNOWN)
    return inv.finish(EXIT_OK if defeat.omega and members.holds else EXIT_REFUTED)


@cli.command("enumerate")
@click.argument("behaviour")
@click.option("--size", type=click.IntRange(min=1), default=4, show_default=True)
@click.option("--daimon", is_flag=True, help="Admit the daimon: list models too")
@click.pass_obj
def enumerate_cmd(inv: Invocation, behaviour: str, size: int, daimon: bool) -> int:
    """List members of a behaviour given inline or as a file: the ethics of
    a positive behaviour, proofs of a negative one."""
    path = Path(behaviour)
    b = parse_behaviour(path.read_text() if path.is_file() else behaviour)
    if b.positive:
        found = ethics_members(b, size, daimon)
    else:
        found = [d for d, _ in enumerate_proofs(Context(slot=b), size, daimon)]
    lines = [show(d) for d in found]
    inv.emit(lines, {"behaviour": show_behaviour(b), "members": len(found)})
    return inv.finish(EXIT_OK)


@cli.group("llp")
def llp_group():
    """Constant-only polarized linear logic."""


@llp_group.command("check")
@click.argument("sequent")
@click.pass_obj
def llp_check(inv: Invocation, sequent: str) -> int:
    """Decide a strict sequent such as ``"?1, B | T"`` with both provers."""
    s = StrictSequent.parse(sequent)
    via_l = prove_llp(s, inv.fuel)
    direct = prove_llp_syn_direct(s, inv.fuel)
    if via_l.derivable != direct.derivable:
        raise LudicsError(
            f"The provers disagree on '{s}': {via_l.verdict} against {direct.verdict}"
        )
    lines = [f"{s}: {via_l.verdict}"]
    if via_l.subject is not None:
        lines.append(f"proof: {show(via_l.subject)}")
    report = {"sequent": str(s), "verdict": via_l.verdict, "states": via_l.states}
    inv.emit(lines, report)
    return inv.finish(EXIT_OK if via_l.derivable else EXIT_REFUTED)


@llp_group.command("translate")
@click.argument("text")
@click.pass_obj
def llp_translate(inv: Invocation, text: str) -> int:
    """Print the behaviour of a formula in the behaviour grammar."""
    b = bullet(parse_llp(text))
    decls, names = connective_decls([b])
    printed = show_behaviour(b, names)
    inv.emit(decls + [printed], {"behaviour": printed, "connectives": len(decls)})
    return inv.finish(EXIT_OK)


@llp_group.command("roundtrip")
@click.argument("text")
@click.pass_obj
def llp_roundtrip(inv: Invocation, text: str) -> int:
    """Translate a formula and read it back; exit 1 if the layers differ."""
    f = parse_llp(text)
    back = circ(bullet(f))
    same = synthetic_shape(f) == synthetic_shape(back)
    lines = [show_llp(back), "isomorphic" if same else "not isomorphic"]
    report = {"formula": show_llp(f), "back": show_llp(back), "isomorphic": same}
    inv.emit(lines, report)
    return inv.finish(EXIT_OK if same else EXIT_REFUTED)


def main(argv: list[str] | None = None) -> int:
    """Run the command line and return its exit code."""
    try:
        code = cli.main(args=argv, prog_name="ludics", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return EXIT_ERROR
    except click.Abort:
        return EXIT_ERROR
    except (LudicsError, ValidationError) as e:
        logging.debug(f"Command failed: {e}")
        click.echo(f"error: {e}", err=True)
        return EXIT_ERROR
    return code if isinstance(code, int) else EXIT_OK


def run() -> None:
    sys.exit(main())


__all__ = ["cli", "main", "run", "Invocation"]
