from ludics.core.typing import SchematicSignatureError

from .defsystem import DefSystem
from .design import Branch, Ref, Sum, Var, pred
from .signature import Signature

FAX_IDENT = "eta"


def fax(sig: Signature, x: str = "x") -> tuple[Ref, DefSystem]:
    """Infinitary eta-expansion of ``x`` over the declared names of ``sig``.

    ``eta(x) = { a(y1..yn) => x|a<eta(y1), ..., eta(yn)> ; ... }``
    """
    if sig.schematic:
        raise SchematicSignatureError("fax needs a finite signature")
    defs = DefSystem(sig)
    branches = []
    for name, ar in sig.declared().items():
        params = tuple(f"y{i}" for i in range(1, ar + 1))
        if x in params:
            params = tuple(f"{p}'" for p in params)
        args = tuple(Ref(FAX_IDENT, (p,)) for p in params)
        branches.append(Branch(name, params, pred(Var(x), name, *args)))
    defs.define(FAX_IDENT, (x,), Sum.of(branches))
    return Ref(FAX_IDENT, (x,)), defs


__all__ = ["fax", "FAX_IDENT"]
