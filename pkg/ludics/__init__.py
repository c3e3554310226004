"""Computational ludics: designs, behaviours, proof search and countermodels."""

import logging

from .core.behaviours import Context, LogicalBehaviour
from .core.designs import DefSystem, Signature
from .core.syntax import parse_behaviour, parse_design, parse_sequent
from .settings import Settings
from .version import __version__

__all__ = [
    "Settings",
    "__version__",
    "DefSystem",
    "Signature",
    "Context",
    "LogicalBehaviour",
    "parse_design",
    "parse_sequent",
    "parse_behaviour",
]

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)
