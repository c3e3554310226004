from ludics.protocols.configs import EngineConfig, TraceConfig

DEFAULT_ENGINE_CONFIG = EngineConfig(
    fuel=100000,
    depth=8,
    samples=20,
    format="text",
)

DEFAULT_TRACE_CONFIG = TraceConfig(
    persist_dir="./data/traces",
    subfolder=None,
    file_prefix="trace",
    capacity=None,
    extension=".csv",
    use_timestamp=True,
    hash_digits=5,
    auto_save_on_exit=False,
    clear_after_dump=True,
)


class Settings:

    class Config:
        ENGINE: EngineConfig = DEFAULT_ENGINE_CONFIG
        TRACE: TraceConfig = DEFAULT_TRACE_CONFIG


__all__ = ["Settings", "DEFAULT_ENGINE_CONFIG", "DEFAULT_TRACE_CONFIG"]
