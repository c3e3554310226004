"""Error hierarchy of the ludics engine."""

__all__ = [
    "LudicsError",
    "DesignSyntaxError",
    "UnknownNameError",
    "ArityError",
    "UnboundDefinitionError",
    "DuplicateDefinitionError",
    "DuplicateVariableError",
    "PolarityError",
    "GuardednessError",
    "OpenDesignError",
    "NotAtomicError",
    "NotAProofError",
    "SchematicSignatureError",
    "ConnectiveError",
    "DisjointnessError",
    "NonStrictSequentError",
    "DerivationError",
    "FuelExhaustedError",
    "AssignmentError",
]


class LudicsError(Exception):
    """Base exception for errors raised by the ludics engine."""

    def __init__(
        self,
        message: str = "Ludics error.",
        position: tuple[int, int] | None = None,
    ):
        self.position = position
        position_info = (
            f" (line {position[0]}, column {position[1]})" if position else ""
        )
        super().__init__(f"{message}{position_info}")


class DesignSyntaxError(LudicsError):
    """Exception raised when a text does not conform to the grammar."""

    def __init__(
        self,
        message: str = "Syntax error.",
        position: tuple[int, int] | None = None,
    ):
        super().__init__(message, position)


class UnknownNameError(LudicsError):
    """Exception raised when a name is not in the signature."""

    def __init__(
        self,
        message: str = "Unknown name.",
        position: tuple[int, int] | None = None,
    ):
        super().__init__(message, position)


class ArityError(UnknownNameError):
    """Exception raised when a name is used with the wrong arity."""

    def __init__(
        self,
        message: str = "Arity mismatch.",
        position: tuple[int, int] | None = None,
    ):
        super().__init__(message, position)


class UnboundDefinitionError(LudicsError):
    """Exception raised when a reference names no definition."""

    def __init__(
        self,
        message: str = "Unbound definition reference.",
        position: tuple[int, int] | None = None,
    ):
        super().__init__(message, position)


class DuplicateDefinitionError(LudicsError):

    def __init__(
        self,
        message: str = "Definition already exists.",
        position: tuple[int, int] | None = None,
    ):
        super().__init__(message, position)


class DuplicateVariableError(LudicsError):
    """Exception raised when one binder repeats a variable."""

    def __init__(
        self,
        message: str = "Duplicate variable.",
        position: tuple[int, int] | None = None,
    ):
        super().__init__(message, position)


class PolarityError(LudicsError):
    """Exception raised when a design of the wrong polarity is used."""

    def __init__(
        self,
        message: str = "Polarity mismatch.",
        position: tuple[int, int] | None = None,
    ):
        super().__init__(message, position)


class GuardednessError(LudicsError):
    """Exception raised when a definition cycle crosses no action."""

    def __init__(
        self,
        message: str = "Unguarded recursive definition.",
        position: tuple[int, int] | None = None,
    ):
        super().__init__(message, position)


class OpenDesignError(LudicsError):

    def __init__(
        self,
        message: str = "Design has free variables.",
        position: tuple[int, int] | None = None,
    ):
        super().__init__(message, position)


class NotAtomicError(LudicsError):

    def __init__(
        self,
        message: str = "Design is not atomic.",
        position: tuple[int, int] | None = None,
    ):
        super().__init__(message, position)


class NotAProofError(LudicsError):
    """Exception raised when proof search meets a subject that is no proof."""

    def __init__(
        self,
        message: str = "Subject is not a proof.",
        position: tuple[int, int] | None = None,
    ):
        super().__init__(message, position)


class SchematicSignatureError(LudicsError):

    def __init__(
        self,
        message: str = "Operation requires a finite signature.",
        position: tuple[int, int] | None = None,
    ):
        super().__init__(message, position)


class ConnectiveError(LudicsError):
    """Exception raised for ill-formed logical connectives."""

    def __init__(
        self,
        message: str = "Ill-formed connective.",
        position: tuple[int, int] | None = None,
    ):
        super().__init__(message, position)


class DisjointnessError(LudicsError):
    """Exception raised when a synthetic layer shares variables across a
    multiplicative."""

    def __init__(
        self,
        message: str = "Variable sets of a multiplicative are not disjoint.",
        position: tuple[int, int] | None = None,
    ):
        super().__init__(message, position)


class NonStrictSequentError(LudicsError):

    def __init__(
        self,
        message: str = "Sequent is not strict.",
        position: tuple[int, int] | None = None,
    ):
        super().__init__(message, position)


class DerivationError(LudicsError):
    """Exception raised when a derivation node violates its rule schema."""

    def __init__(
        self,
        message: str = "Invalid derivation.",
        path: tuple[int, ...] = (),
    ):
        self.path = path
        path_info = f" at node {'.'.join(map(str, path)) or 'root'}"
        super().__init__(f"{message}{path_info}")


class FuelExhaustedError(LudicsError):

    def __init__(
        self,
        message: str = "Fuel exhausted before a verdict was reached.",
        position: tuple[int, int] | None = None,
    ):
        super().__init__(message, position)


class AssignmentError(LudicsError):

    def __init__(
        self,
        message: str = "Model assignment does not match the sequent.",
        position: tuple[int, int] | None = None,
    ):
        super().__init__(message, position)
