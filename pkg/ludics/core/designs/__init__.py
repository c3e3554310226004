from .algebra import big_meet, daimon_minus, leq, meet
from .classify import Classification, classify
from .defsystem import DefSystem, Definition, reachable_definitions
from .design import (
    DAIMON,
    NEGATIVE,
    OMEGA,
    POSITIVE,
    X0,
    Branch,
    Conj,
    Design,
    Omega,
    Predesign,
    Ref,
    Sum,
    Trunc,
    Var,
    as_var,
    canonical_key,
    contains_trunc,
    design_size,
    pred,
)
from .equiv import equiv
from .fax import fax
from .printer import show, show_action, show_definition, show_defs
from .signature import Signature
from .substitute import rename, substitute

__all__ = [
    "Design",
    "Omega",
    "Trunc",
    "Var",
    "Ref",
    "Predesign",
    "Conj",
    "Branch",
    "Sum",
    "DAIMON",
    "OMEGA",
    "POSITIVE",
    "NEGATIVE",
    "X0",
    "pred",
    "as_var",
    "canonical_key",
    "contains_trunc",
    "design_size",
    "Signature",
    "DefSystem",
    "Definition",
    "reachable_definitions",
    "substitute",
    "rename",
    "equiv",
    "show",
    "show_action",
    "show_definition",
    "show_defs",
    "daimon_minus",
    "meet",
    "big_meet",
    "leq",
    "Classification",
    "classify",
    "fax",
]
