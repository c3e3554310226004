from .normal_form import TRUNC, normal_form
from .outcome import EvalOutcome, Verdict
from .reduction import (
    check_atomic,
    evaluate_closed,
    fire,
    has_cycle,
    orthogonal,
    step,
)

__all__ = [
    "EvalOutcome",
    "Verdict",
    "step",
    "fire",
    "evaluate_closed",
    "orthogonal",
    "check_atomic",
    "has_cycle",
    "normal_form",
    "TRUNC",
]
