from enum import Enum

from ludics.core.models import Field, SchemaModel


class Verdict(str, Enum):
    DAIMON = "daimon"
    OMEGA = "omega"
    UNKNOWN = "unknown"


class EvalOutcome(SchemaModel):
    """Verdict of a closed evaluation together with its certificate.

    ``Daimon`` carries the explored reduction DAG (``dag[i]`` lists the
    successor states of state ``i``; state 0 is the root). ``Omega`` carries a
    path of state fingerprints ending in ``omega`` or, when ``cycle`` is set,
    in a revisited state. ``Unknown`` reports how far the search got.
    """

    verdict: Verdict = Field(description="daimon, omega or unknown")
    states: int = Field(default=0, description="Distinct states explored")
    path: list[str] = Field(
        default_factory=list, description="Certificate path for omega"
    )
    cycle: bool = Field(
        default=False, description="The omega certificate is a cycle"
    )
    dag: list[list[int]] = Field(
        default_factory=list, description="Explored reduction graph for daimon"
    )
    depth: int = Field(default=0, description="Deepest state reached")
    progress: int | None = Field(
        default=None,
        description="Reduction steps certified before an approximation ran out",
    )

    @property
    def daimon(self) -> bool:
        return self.verdict == Verdict.DAIMON

    @property
    def omega(self) -> bool:
        return self.verdict == Verdict.OMEGA

    @property
    def unknown(self) -> bool:
        return self.verdict == Verdict.UNKNOWN

    def summary(self) -> dict[str, str | int | bool]:
        """Flat ``key: value`` view used by reports and traces."""
        out: dict[str, str | int | bool] = {
            "verdict": Verdict(self.verdict).value,
            "states": self.states,
            "depth": self.depth,
        }
        if self.omega:
            out["certificate"] = "cycle" if self.cycle else "omega-path"
            out["path_length"] = len(self.path)
        if self.progress is not None:
            out["progress"] = self.progress
        return out


__all__ = ["Verdict", "EvalOutcome"]
