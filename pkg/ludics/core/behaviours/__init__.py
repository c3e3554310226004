from .behaviour import (
    Context,
    LogicalBehaviour,
    bot,
    connective_decls,
    down,
    dual,
    enumerate_behaviours,
    library_label,
    negative,
    one,
    par,
    plus,
    positive,
    show_behaviour,
    tensor,
    top,
    up,
    with_,
    zero,
)
from .connective import (
    BOT,
    PAR,
    TOP,
    UP,
    WITH,
    Action,
    Connective,
    make_connective,
)

__all__ = [
    "Action",
    "Connective",
    "make_connective",
    "PAR",
    "WITH",
    "UP",
    "BOT",
    "TOP",
    "LogicalBehaviour",
    "Context",
    "dual",
    "positive",
    "negative",
    "one",
    "zero",
    "down",
    "tensor",
    "plus",
    "bot",
    "top",
    "up",
    "par",
    "with_",
    "library_label",
    "show_behaviour",
    "connective_decls",
    "enumerate_behaviours",
]
