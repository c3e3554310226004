from .formula import (
    LLPFormula,
    StrictSequent,
    enumerate_formulas,
    formula,
    llp_dual,
    parse_llp,
    parse_llp_list,
    show_llp,
    size,
)
from .prover import LLPResult, prove_llp, prove_llp_syn_direct, reachable_sequents
from .search import Fixpoint, least_fixpoint, reachable
from .synthetic import (
    SyntheticConnective,
    layer_actions,
    parse_synthetic,
    show_synthetic,
    synthetic_decompose,
)
from .translate import (
    bullet,
    bullet_connective,
    circ,
    circ_context,
    synthetic_shape,
)

__all__ = [
    "LLPFormula",
    "StrictSequent",
    "enumerate_formulas",
    "formula",
    "llp_dual",
    "parse_llp",
    "parse_llp_list",
    "show_llp",
    "size",
    "LLPResult",
    "prove_llp",
    "prove_llp_syn_direct",
    "reachable_sequents",
    "Fixpoint",
    "least_fixpoint",
    "reachable",
    "SyntheticConnective",
    "layer_actions",
    "parse_synthetic",
    "show_synthetic",
    "synthetic_decompose",
    "bullet",
    "bullet_connective",
    "circ",
    "circ_context",
    "synthetic_shape",
]
