from pydantic import BaseModel, ConfigDict, Field

__all__ = ["SchemaModel", "FrozenModel", "Field"]


common_config = {
    "populate_by_name": True,
    "arbitrary_types_allowed": True,
    "use_enum_values": True,
}


class SchemaModel(BaseModel):

    model_config = ConfigDict(extra="forbid", validate_default=False, **common_config)


class FrozenModel(BaseModel):
    """Immutable, hashable value object."""

    model_config = ConfigDict(extra="forbid", frozen=True, **common_config)
