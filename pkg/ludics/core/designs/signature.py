from pydantic import PrivateAttr, field_validator

from ludics.core.models import Field, SchemaModel
from ludics.core.typing import ArityError, UnknownNameError

# Names every signature carries; the linear-logic library is built from them.
BUILTIN_NAMES: dict[str, int] = {"*": 0, "up": 1, "pi1": 1, "pi2": 1, "wp": 2}

# Accepted in predesign position as an alias of ``up``.
DOWN_ALIAS = "down"

RESERVED_WORDS = frozenset({"x0", DOWN_ALIAS})


class Signature(SchemaModel):
    """Names with arities.

    Declared names come from ``sig { a/1, ... }`` blocks. Derived names such
    as ``pi1.up`` or ``wp.*.up`` are parsed in prefix form and their arity is
    computed on demand and cached. A schematic signature accepts any name
    and records the arity of its first use.

    Example:
        >>> sig = Signature(names={"a": 0, "b": 2})
        >>> sig.arity("wp.a.b")
        2
    """

    names: dict[str, int] = Field(
        default_factory=dict, description="Declared names and their arities"
    )
    schematic: bool = Field(
        default=False,
        description="Accept undeclared names, fixing their arity on first use",
    )
    _derived: dict[str, int] = PrivateAttr(default_factory=dict)

    @field_validator("names")
    def validate_names(cls, v: dict[str, int]) -> dict[str, int]:
        for name, ar in v.items():
            if name in RESERVED_WORDS:
                raise ValueError(f"'{name}' is reserved and cannot be a name")
            if "." in name:
                raise ValueError(f"Declared name '{name}' cannot contain '.'")
            if ar < 0:
                raise ValueError(f"Arity of '{name}' must be non-negative")
            if name in BUILTIN_NAMES and BUILTIN_NAMES[name] != ar:
                raise ValueError(
                    f"'{name}' is built in with arity {BUILTIN_NAMES[name]}"
                )
        return v

    @property
    def finite(self) -> bool:
        return not self.schematic

    def declared(self) -> dict[str, int]:
        """Declared names, sorted; the range of fax and of the negative
        daimon."""
        return {k: self.names[k] for k in sorted(self.names)}

    def arity(self, name: str) -> int:
        if name in self.names:
            return self.names[name]
        if name in BUILTIN_NAMES:
            return BUILTIN_NAMES[name]
        if "." in name:
            return self._derived_arity(name)
        raise UnknownNameError(f"Name '{name}' is not in the signature")

    def knows(self, name: str) -> bool:
        try:
            self.arity(name)
        except UnknownNameError:
            return False
        return True

    def observe(self, name: str, arity: int) -> None:
        """Check ``name`` is used with ``arity``; record it when schematic."""
        if self.schematic and not self.knows(name):
            if "." in name:
                raise UnknownNameError(f"Malformed derived name '{name}'")
            if name in RESERVED_WORDS:
                raise UnknownNameError(f"'{name}' is reserved and cannot be a name")
            self.names[name] = arity
            return
        expected = self.arity(name)
        if expected != arity:
            raise ArityError(
                f"Name '{name}' has arity {expected}, used with {arity} variables"
            )

    def derive_pi(self, index: int, name: str) -> str:
        if index not in (1, 2):
            raise ValueError("Projection index must be 1 or 2")
        derived = f"pi{index}.{name}"
        self._derived[derived] = self.arity(name)
        return derived

    def derive_wp(self, left: str, right: str) -> str:
        derived = f"wp.{left}.{right}"
        self._derived[derived] = self.arity(left) + self.arity(right)
        return derived

    def _derived_arity(self, name: str) -> int:
        if name in self._derived:
            return self._derived[name]
        tokens = name.split(".")
        ar, end = self._parse_tokens(tokens, 0, name)
        if end != len(tokens):
            raise UnknownNameError(f"Malformed derived name '{name}'")
        self._derived[name] = ar
        return ar

    def _parse_tokens(self, tokens: list[str], i: int, name: str) -> tuple[int, int]:
        if i >= len(tokens):
            raise UnknownNameError(f"Malformed derived name '{name}'")
        tok = tokens[i]
        more = i + 1 < len(tokens)
        if tok in ("pi1", "pi2") and more:
            return self._parse_tokens(tokens, i + 1, name)
        if tok == "wp" and more:
            left, j = self._parse_tokens(tokens, i + 1, name)
            right, k = self._parse_tokens(tokens, j, name)
            return left + right, k
        if tok in self.names:
            return self.names[tok], i + 1
        if tok in BUILTIN_NAMES:
            return BUILTIN_NAMES[tok], i + 1
        raise UnknownNameError(f"Name '{tok}' in '{name}' is not in the signature")


__all__ = ["Signature", "BUILTIN_NAMES", "DOWN_ALIAS", "RESERVED_WORDS"]
