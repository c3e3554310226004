from .engine_config import EngineConfig
from .trace_config import TraceConfig

__all__ = ["EngineConfig", "TraceConfig"]
