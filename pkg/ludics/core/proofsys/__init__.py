from .check import check_cut_derivation, check_derivation, validate_derivation
from .enumerate import enumerate_proofs, iter_proofs, material_subject
from .rules import (
    RuleInstance,
    Stuck,
    StuckName,
    StuckOmega,
    focus,
    fresh_names,
    negative_body,
    next_rule,
    premise_slots,
    split_context,
)
from .search import (
    Branch,
    BranchNode,
    Derived,
    Failed,
    OutOfFuel,
    SearchResult,
    live_variables,
    prove,
    state_key,
)
from .sequent import (
    CutRule,
    DaimonRule,
    Derivation,
    NegativeRule,
    PositiveRule,
    Rule,
    Sequent,
)

__all__ = [
    "Sequent",
    "Derivation",
    "Rule",
    "PositiveRule",
    "NegativeRule",
    "CutRule",
    "DaimonRule",
    "RuleInstance",
    "Stuck",
    "StuckName",
    "StuckOmega",
    "next_rule",
    "focus",
    "premise_slots",
    "split_context",
    "fresh_names",
    "negative_body",
    "Branch",
    "BranchNode",
    "Derived",
    "Failed",
    "OutOfFuel",
    "SearchResult",
    "prove",
    "live_variables",
    "state_key",
    "validate_derivation",
    "check_derivation",
    "check_cut_derivation",
    "enumerate_proofs",
    "iter_proofs",
    "material_subject",
]
