from .branch import (
    NegativeStep,
    OpenBranch,
    Periodic,
    PositiveStep,
    Terminal,
    Truncated,
    open_branch,
    replay,
)
from .build import ModelAssignment, build_approximant, build_countermodel, inline
from .verify import (
    EntryCheck,
    MembershipReport,
    verify_countermodel_membership,
    verify_defeat,
)

__all__ = [
    "NegativeStep",
    "PositiveStep",
    "Truncated",
    "Periodic",
    "Terminal",
    "OpenBranch",
    "open_branch",
    "replay",
    "ModelAssignment",
    "build_countermodel",
    "build_approximant",
    "inline",
    "verify_defeat",
    "verify_countermodel_membership",
    "EntryCheck",
    "MembershipReport",
]
