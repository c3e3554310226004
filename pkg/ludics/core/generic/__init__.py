from .trace import TraceEntry, TraceManager

__all__ = ["TraceEntry", "TraceManager"]
