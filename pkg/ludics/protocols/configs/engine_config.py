from typing import Any

from pydantic import field_validator

from ludics.core.models import Field, SchemaModel


class EngineConfig(SchemaModel):
    """Budgets shared by evaluation, proof search and sampling.

    Attributes:
        fuel: Maximum number of explored states (evaluation) or expanded
            nodes (proof search) before giving up with an Unknown verdict
        depth: Depth bound used when printing normal forms
        samples: Number of counter-designs drawn for sampled checks
        format: Output format of the command line, ``text`` or ``report``

    Example:
        >>> config = EngineConfig(fuel=500, samples=10)
    """

    fuel: int = Field(
        default=100000,
        description="Maximum explored states or proof-search nodes",
        ge=1,
    )
    depth: int = Field(
        default=8,
        description="Depth bound for normal-form expansion",
        ge=1,
    )
    samples: int = Field(
        default=20,
        description="Number of sampled counter-designs per check",
        ge=1,
    )
    format: str = Field(
        default="text",
        description="Output format for command results",
        pattern=r"^(text|report)$",
    )

    @field_validator("fuel", "depth", "samples", mode="before")
    def validate_budget(cls, v: Any) -> int:
        """Reject booleans and non-integral budgets."""
        if isinstance(v, bool) or not isinstance(v, int):
            raise ValueError("Budgets must be integers")
        return v
