from __future__ import annotations

from ludics.core.behaviours.behaviour import dual
from ludics.core.designs.classify import classify
from ludics.core.designs.defsystem import DefSystem
from ludics.core.designs.design import Design, Sum, contains_trunc
from ludics.core.designs.equiv import equiv
from ludics.core.designs.substitute import substitute
from ludics.core.normalize.normal_form import normal_form
from ludics.core.typing import DerivationError, LudicsError

from .rules import RuleInstance, negative_body, next_rule
from .sequent import CutRule, Derivation, NegativeRule, PositiveRule, Sequent


def validate_derivation(
    d: Derivation, defs: DefSystem | None = None, cuts: bool = False
) -> None:
    """Check every node against its rule schema.

    Raises:
        DerivationError: at the first offending node, with its path.
    """
    defs = defs if defs is not None else DefSystem()
    for path, node in d.walk():
        try:
            _check_node(node, defs, cuts)
        except _Mismatch as e:
            raise DerivationError(str(e), path) from None
        except LudicsError as e:
            raise DerivationError(str(e), path) from None


def check_derivation(d: Derivation, defs: DefSystem | None = None) -> bool:
    try:
        validate_derivation(d, defs)
    except DerivationError:
        return False
    return True


def check_cut_derivation(
    d: Derivation,
    defs: DefSystem | None = None,
    fuel: int | None = None,
    depth: int | None = None,
) -> tuple[bool, Design]:
    """Validate a derivation that may use the cut rule.

    Returns the check result and the normal form of the root subject. When
    that normal form is fully computed it must itself be a proof.
    """
    defs = defs if defs is not None else DefSystem()
    try:
        validate_derivation(d, defs, cuts=True)
        ok = True
    except DerivationError:
        ok = False
    nf = normal_form(d.sequent.subject, defs, fuel, depth)
    if ok and not contains_trunc(nf):
        ok = classify(nf, defs).is_proof
    return ok, nf


class _Mismatch(Exception):
    pass


def _check_node(node: Derivation, defs: DefSystem, cuts: bool) -> None:
    rule = node.rule
    if isinstance(rule, PositiveRule):
        _check_positive(node, defs)
    elif isinstance(rule, NegativeRule):
        _check_negative(node, defs)
    elif isinstance(rule, CutRule):
        if not cuts:
            raise _Mismatch("Cut rule used outside cut-checking mode")
        _check_cut(node, defs)
    else:
        raise _Mismatch(f"Rule {rule} is not part of the proof system")


def _same(got: Sequent, want: Sequent, defs: DefSystem) -> None:
    if got.key[1] != want.key[1]:
        raise _Mismatch(f"Premise context '{got.context}' should be '{want.context}'")
    if not equiv(got.subject, want.subject, defs):
        raise _Mismatch("Premise subject does not match the rule")


def _check_positive(node: Derivation, defs: DefSystem) -> None:
    rule = node.rule
    if not node.sequent.positive:
        raise _Mismatch("A positive rule needs a positive sequent")
    expected = next_rule(node.sequent, defs, linear=rule.linear)
    if not isinstance(expected, RuleInstance):
        raise _Mismatch(f"No rule concludes this sequent ({expected})")
    want = expected.rule
    if (rule.var, rule.action) != (want.var, want.action):
        raise _Mismatch(f"Rule {rule} does not match the head of the subject")
    if not rule.connective.same(want.connective):
        raise _Mismatch(f"Rule {rule} uses the wrong connective")
    if len(node.premises) != len(expected.premises):
        raise _Mismatch(
            f"Rule {rule} needs {len(expected.premises)} premises,"
            f" got {len(node.premises)}"
        )
    for got, premise in zip(node.premises, expected.premises):
        _same(got.sequent, premise, defs)


def _check_negative(node: Derivation, defs: DefSystem) -> None:
    s = node.sequent
    slot = s.context.slot
    if slot is None:
        raise _Mismatch("A negative rule needs a negative behaviour")
    if not node.rule.connective.same(slot.connective):
        raise _Mismatch(f"Rule {node.rule} does not match the negative behaviour")
    subject = defs.resolve(s.subject)
    if not isinstance(subject, Sum):
        raise _Mismatch("The subject of a negative rule must be an abstraction")
    actions = sorted(slot.connective.actions, key=lambda a: a.name)
    if len(node.premises) != len(actions):
        raise _Mismatch(
            f"Rule {node.rule} needs {len(actions)} premises, got {len(node.premises)}"
        )
    base = s.context.entries
    for action, premise in zip(actions, node.premises):
        got = premise.sequent
        added = got.context.entries[len(base) :]
        if got.context.slot is not None or got.context.entries[: len(base)] != base:
            raise _Mismatch("Premise context must extend the conclusion context")
        if len(added) != len(action.vars):
            raise _Mismatch(f"Premise for {action} binds {len(added)} variables")
        names = tuple(y for y, _ in added)
        if set(names) & subject.free_vars:
            raise _Mismatch(f"Premise variables {names} are not fresh")
        for (_, b), x in zip(added, action.vars):
            if b.key != slot.arg_for(x).key:
                raise _Mismatch(f"Variable for {x} carries the wrong behaviour")
        body = negative_body(subject, action, names, defs)
        if not equiv(got.subject, body, defs):
            raise _Mismatch(f"Premise subject does not match the {action.name} branch")


def _pairs(entries) -> set[tuple[str, str]]:
    return {(x, b.key) for x, b in entries}


def _check_cut(node: Derivation, defs: DefSystem) -> None:
    rule = node.rule
    if len(node.premises) != 2:
        raise _Mismatch("The cut rule has exactly two premises")
    left, right = (p.sequent for p in node.premises)
    lemma = left.context.behaviour_of(rule.var)
    if lemma is None or lemma.key != rule.lemma.key:
        raise _Mismatch(f"Left premise must hold {rule.var}: {rule.lemma}")
    if right.context.slot is None or right.context.slot.key != dual(lemma).key:
        raise _Mismatch("Right premise must end with the dual of the cut behaviour")
    gamma = [(x, b) for x, b in left.context.entries if x != rule.var]
    if not _pairs(right.context.entries) <= _pairs(gamma):
        raise _Mismatch("Right premise context must be part of the left one")
    if _pairs(node.sequent.context.entries) != _pairs(gamma):
        raise _Mismatch("Conclusion context must drop the cut variable")
    slots = (node.sequent.context.slot, left.context.slot)
    if (slots[0] is None) != (slots[1] is None) or (
        slots[0] is not None and slots[0].key != slots[1].key
    ):
        raise _Mismatch(
            "Conclusion must keep the negative behaviour of the left premise"
        )
    expected = substitute(left.subject, {rule.var: right.subject}, defs)
    if not equiv(node.sequent.subject, expected, defs):
        raise _Mismatch("Conclusion subject must be the left subject after the cut")


__all__ = ["validate_derivation", "check_derivation", "check_cut_derivation"]
