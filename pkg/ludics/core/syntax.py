"""Text formats: one lark grammar for designs, behaviours, contexts and
sequents."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache

import lark as L
from lark.exceptions import UnexpectedInput, VisitError

from ludics.core.behaviours.behaviour import (
    Context,
    LogicalBehaviour,
    bot,
    down,
    negative,
    one,
    par,
    plus,
    positive,
    tensor,
    top,
    up,
    with_,
    zero,
)
from ludics.core.behaviours.connective import Connective, make_connective
from ludics.core.designs.defsystem import DefSystem
from ludics.core.designs.design import (
    DAIMON,
    FRESH_PREFIX,
    OMEGA,
    Branch,
    Conj,
    Design,
    Predesign,
    Ref,
    Sum,
    Var,
    iter_nodes,
)
from ludics.core.designs.signature import DOWN_ALIAS, Signature
from ludics.core.typing import (
    DesignSyntaxError,
    DuplicateVariableError,
    LudicsError,
    PolarityError,
)

GRAMMAR = r"""
design_file: header* design?
sequent_file: header* design "|-" context
behaviour_file: header* bany
context_file: header* context

?header: sig_decl | def_decl | conn_decl
sig_decl: "sig" "{" (sig_item ("," sig_item)*)? "}"
sig_item: NAME "/" INT
def_decl: "def" WORD "(" vars? ")" "=" design
conn_decl: "conn" WORD "(" vars? ")" "{" conn_action* "}"
conn_action: NAME ("(" vars? ")")?
vars: WORD ("," WORD)*

?design: pdesign | ndesign

?pdesign: "omega"                                       -> omega
        | "daimon"                                      -> daimon
        | conj_item
        | "/\\" "{" (conj_item ("," conj_item)*)? "}"   -> conj
        | conj_item ("/\\" conj_item)+                  -> conj

?conj_item: pred | ref
pred: ndesign "|" NAME ("<" (ndesign ("," ndesign)*)? ">")?

?ndesign: WORD                                          -> var
        | "{" (branch (";" branch)*)? "}"               -> sum
        | ref
ref: WORD "(" (WORD ("," WORD)*)? ")"
branch: NAME ("(" vars? ")")? "=>" pdesign

?bany: bpos | bneg
?bpos: "pos" WORD "<" (bneg ("," bneg)*)? ">"           -> b_pos
     | "one"                                            -> b_one
     | "zero"                                           -> b_zero
     | "down" "(" bneg ")"                              -> b_down
     | "tensor" "(" bneg "," bneg ")"                   -> b_tensor
     | "plus" "(" bneg "," bneg ")"                     -> b_plus
?bneg: "neg" WORD "(" (bpos ("," bpos)*)? ")"           -> b_neg
     | "bot"                                            -> b_bot
     | "top"                                            -> b_top
     | "up" "(" bpos ")"                                -> b_up
     | "par" "(" bpos "," bpos ")"                      -> b_par
     | "with" "(" bpos "," bpos ")"                     -> b_with

context: (ctx_item ("," ctx_item)*)?
?ctx_item: WORD ":" bpos                                -> ctx_entry
         | bneg                                         -> ctx_slot

WORD: /(?!(?:omega|daimon|def|sig|conn|pos|neg|one|zero|bot|top|up|down|tensor|plus|par|with)(?![A-Za-z0-9_']))[A-Za-z_][A-Za-z0-9_']*/
NAME: /[A-Za-z*][A-Za-z0-9_'*.]*/

%import common.INT
%import common.WS
%ignore WS
%ignore /#[^\n]*/
"""

STARTS = ["design_file", "sequent_file", "behaviour_file", "context_file"]


@lru_cache(maxsize=1)
def get_parser() -> L.Lark:
    return L.Lark(GRAMMAR, start=STARTS)


@dataclass
class Header:
    """Declarations collected from the header of a file."""

    names: dict[str, int] | None = None
    definitions: list[tuple[str, tuple[str, ...], Design]] = field(
        default_factory=list
    )
    connectives: dict[str, Connective] = field(default_factory=dict)


class _Builder(L.Transformer):
    """Tree to values; names are checked afterwards against the signature."""

    def __init__(self, connectives: dict[str, Connective] | None = None):
        super().__init__()
        self.connectives = connectives or {}

    # headers

    def sig_item(self, items):
        return str(items[0]), int(items[1])

    def sig_decl(self, items):
        names: dict[str, int] = {}
        for name, ar in items:
            if name in names and names[name] != ar:
                raise DesignSyntaxError(f"Name '{name}' declared twice")
            names[name] = ar
        return ("sig", names)

    def vars(self, items):
        names = [_word(t) for t in items]
        if len(set(names)) != len(names):
            raise DuplicateVariableError(
                f"Variables {names} repeat a name", _pos(items[0])
            )
        return tuple(names)

    def def_decl(self, items):
        ident = _word(items[0])
        params = items[1] if len(items) == 3 else ()
        return ("def", ident, params, items[-1])

    def conn_action(self, items):
        return str(items[0]), items[1] if len(items) > 1 else ()

    def conn_decl(self, items):
        ident = _word(items[0])
        rest = list(items[1:])
        params = rest.pop(0) if rest and _is_vars(rest[0]) else ()
        return ("conn", ident, make_connective(params, rest, label=ident))

    # designs

    def omega(self, _):
        return OMEGA

    def daimon(self, _):
        return DAIMON

    def conj(self, items):
        return Conj.of(_conjunct(c) for c in items)

    def pred(self, items):
        head, name, *args = items
        action = "up" if str(name) == DOWN_ALIAS else str(name)
        return Conj((Predesign(head, action, tuple(args)),))

    def var(self, items):
        return Var(_word(items[0]))

    def ref(self, items):
        return Ref(_word(items[0]), tuple(_word(t) for t in items[1:]))

    def branch(self, items):
        name = str(items[0])
        params = items[1] if len(items) == 3 else ()
        return Branch(name, params, _positive(items[-1]))

    def sum(self, items):
        names = [b.name for b in items]
        if len(set(names)) != len(names):
            raise DesignSyntaxError(f"Sum repeats a branch name among {names}")
        return Sum.of(items)

    # behaviours

    def _named(self, items) -> Connective:
        ident = str(items[0])
        try:
            return self.connectives[ident]
        except KeyError:
            raise DesignSyntaxError(
                f"Unknown connective '{ident}'", _pos(items[0])
            ) from None

    def b_pos(self, items):
        return positive(self._named(items), *items[1:])

    def b_neg(self, items):
        return negative(self._named(items), *items[1:])

    def b_one(self, _):
        return one()

    def b_zero(self, _):
        return zero()

    def b_bot(self, _):
        return bot()

    def b_top(self, _):
        return top()

    def b_down(self, items):
        return down(items[0])

    def b_up(self, items):
        return up(items[0])

    def b_tensor(self, items):
        return tensor(*items)

    def b_plus(self, items):
        return plus(*items)

    def b_par(self, items):
        return par(*items)

    def b_with(self, items):
        return with_(*items)

    def ctx_entry(self, items):
        return (_word(items[0]), items[1])

    def ctx_slot(self, items):
        return items[0]

    def context(self, items):
        entries = tuple(i for i in items if isinstance(i, tuple))
        slots = [i for i in items if isinstance(i, LogicalBehaviour)]
        if len(slots) > 1:
            raise PolarityError("A context holds at most one negative behaviour")
        return Context(entries=entries, slot=slots[0] if slots else None)


def _is_vars(value) -> bool:
    return isinstance(value, tuple) and all(isinstance(v, str) for v in value)


def _pos(token) -> tuple[int, int] | None:
    line = getattr(token, "line", None)
    return (line, token.column) if line is not None else None


def _word(token) -> str:
    name = str(token)
    if name.startswith(FRESH_PREFIX):
        raise DesignSyntaxError(
            f"Identifier '{name}' uses the reserved prefix '{FRESH_PREFIX}'",
            _pos(token),
        )
    return name


def _positive(d: Design) -> Design:
    if isinstance(d, (Var, Sum)):
        raise PolarityError("Expected a positive design")
    return d


def _conjunct(d: Design):
    if isinstance(d, Conj) and len(d.conjuncts) == 1:
        return d.conjuncts[0]
    if isinstance(d, Ref):
        return d
    raise PolarityError("Conjuncts must be predesigns or positive references")


def _run(text: str, start: str):
    try:
        tree = get_parser().parse(text, start=start)
    except UnexpectedInput as e:
        raise DesignSyntaxError(
            f"Unexpected input: {_excerpt(e, text)}", (e.line, e.column)
        ) from None

    header = Header()
    body = []
    conn_builder = _Builder()
    for child in tree.children:
        if isinstance(child, L.Tree) and child.data == "conn_decl":
            _, ident, connective = _transform(conn_builder, child)
            header.connectives[ident] = connective
        else:
            body.append(child)

    builder = _Builder(header.connectives)
    values = []
    for child in body:
        value = _transform(builder, child) if isinstance(child, L.Tree) else child
        if isinstance(value, tuple) and value and value[0] == "sig":
            header.names = value[1]
        elif isinstance(value, tuple) and value and value[0] == "def":
            header.definitions.append(value[1:])
        else:
            values.append(value)
    return header, values


def _transform(builder: _Builder, tree: L.Tree):
    try:
        return builder.transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, LudicsError):
            raise e.orig_exc from None
        raise DesignSyntaxError(str(e.orig_exc)) from None


def _excerpt(e: UnexpectedInput, text: str) -> str:
    try:
        return e.get_context(text).strip().splitlines()[0]
    except Exception:
        return str(e)


def _system(header: Header, sig: Signature | None) -> DefSystem:
    if header.names is not None:
        if sig is not None:
            merged = dict(sig.names)
            merged.update(header.names)
            sig = Signature(names=merged)
        else:
            sig = Signature(names=header.names)
    elif sig is not None:
        sig = sig.model_copy(deep=True)
    defs = DefSystem(sig)
    for ident, params, body in header.definitions:
        defs.define(ident, params, body, check=False)
    for definition in defs.definitions.values():
        check_names(definition.body, defs.sig)
    defs.check()
    return defs


def check_names(d: Design, sig: Signature) -> None:
    """Check every action is used with its arity."""
    for node in iter_nodes(d):
        if isinstance(node, Sum):
            for b in node.branches:
                sig.observe(b.name, len(b.params))
        elif isinstance(node, Predesign):
            sig.observe(node.action, len(node.args))


def _finish(d: Design, defs: DefSystem) -> Design:
    check_names(d, defs.sig)
    defs.check_design(d, defs.polarity(d))
    return d


def parse_design(
    text: str, sig: Signature | None = None
) -> tuple[Design | None, DefSystem]:
    """Parse a design file: ``sig {...}``, ``def`` lines, then an expression.

    Raises:
        DesignSyntaxError: with line and column on malformed input.
        ArityError: when a name is used with the wrong arity.
        UnboundDefinitionError: for references to undefined identifiers.
        DuplicateVariableError: when a binder repeats a variable.
    """
    header, values = _run(text, "design_file")
    defs = _system(header, sig)
    design = _finish(values[0], defs) if values else None
    logging.debug(f"Parsed design file with {len(defs)} definitions")
    return design, defs


def parse_sequent(
    text: str, sig: Signature | None = None
) -> tuple[Design, Context, DefSystem]:
    """Parse ``DESIGN |- x:BPOS, ... [, BNEG]``."""
    header, values = _run(text, "sequent_file")
    defs = _system(header, sig)
    design, context = values
    return _finish(design, defs), context, defs


def parse_behaviour(text: str) -> LogicalBehaviour:
    """Parse a behaviour, optionally preceded by ``conn`` declarations."""
    _, values = _run(text, "behaviour_file")
    return values[0]


def parse_context(text: str) -> Context:
    _, values = _run(text, "context_file")
    return values[0]


__all__ = [
    "GRAMMAR",
    "parse_design",
    "parse_sequent",
    "parse_behaviour",
    "parse_context",
    "check_names",
]
