import atexit
import logging
from datetime import datetime, timezone
from pathlib import Path

import pandas as pd

from ludics.core.models import Field, SchemaModel
from ludics.libs.file import create_path
from ludics.protocols.configs.trace_config import TraceConfig


class TraceEntry(SchemaModel):
    """One recorded engine event."""

    event: str = Field(description="Kind of event, e.g. 'evaluate' or 'prove'")
    detail: dict[str, str | int | float | bool | None] = Field(
        default_factory=dict, description="Flat key/value payload"
    )
    timestamp: str = Field(
        default_factory=lambda: datetime.now(timezone.utc).isoformat(),
        description="Creation time in ISO format",
    )


class TraceManager:
    """Collects engine events and persists them as CSV.

    Engine entry points (evaluation, proof search, the command line) accept an
    optional tracer and record one entry per verdict. Entries stay in memory
    until ``capacity`` is reached, ``dump`` is called, or the interpreter
    exits when ``auto_save_on_exit`` is set.

    Example:
        >>> tracer = TraceManager(persist_dir="./traces", capacity=100)
        >>> tracer.record("evaluate", verdict="daimon", states=3)
        >>> tracer.dump()
    """

    def __init__(
        self,
        entries: list[TraceEntry] | None = None,
        persist_dir: str | Path | None = None,
        subfolder: str | None = None,
        file_prefix: str | None = None,
        capacity: int | None = None,
        extension: str = ".csv",
        use_timestamp: bool = True,
        hash_digits: int = 5,
        auto_save_on_exit: bool = False,
        clear_after_dump: bool = True,
    ) -> None:
        self.entries: list[TraceEntry] = list(entries or [])

        self.persist_dir = persist_dir
        self.subfolder = subfolder
        self.file_prefix = file_prefix
        self.capacity = capacity
        self.extension = extension
        self.use_timestamp = use_timestamp
        self.hash_digits = hash_digits
        self.clear_after_dump = clear_after_dump

        if auto_save_on_exit:
            atexit.register(self.save_at_exit)

    def __len__(self) -> int:
        return len(self.entries)

    def log(self, entry: TraceEntry, /) -> None:
        if self.capacity and len(self.entries) >= self.capacity:
            try:
                self.dump(clear=self.clear_after_dump)
            except Exception as e:
                logging.error(f"Failed to auto-dump trace: {e}")

        self.entries.append(entry)

    def record(self, event: str, /, **detail) -> TraceEntry:
        """Build a TraceEntry from keyword fields and log it."""
        entry = TraceEntry(
            event=event,
            detail={k: _flat(v) for k, v in detail.items()},
        )
        self.log(entry)
        return entry

    def to_df(self) -> pd.DataFrame:
        rows = [
            {"event": e.event, "timestamp": e.timestamp, **e.detail}
            for e in self.entries
        ]
        return pd.DataFrame(rows)

    def dump(
        self, clear: bool | None = None, persist_path: str | Path | None = None
    ) -> Path | None:
        """Write the collected entries to a CSV file.

        Returns:
            The path written to, or None when there was nothing to dump.
        """
        if not self.entries:
            logging.debug("No trace entries to dump")
            return None

        try:
            fp = Path(persist_path) if persist_path else self._create_path()
            self.to_df().to_csv(fp, index=False)
            logging.info(f"Successfully dumped trace to {fp}")

            if self.clear_after_dump if clear is None else clear:
                self.entries.clear()
            return fp
        except Exception as e:
            logging.error(f"Failed to dump trace: {e}")
            raise

    def _create_path(self) -> Path:
        persist_path = self.persist_dir or "./data/traces"
        directory = (
            f"{persist_path}/{self.subfolder}" if self.subfolder else persist_path
        )
        return create_path(
            directory=directory,
            filename=self.file_prefix or "trace",
            extension=self.extension,
            timestamp=self.use_timestamp,
            random_hash_digits=self.hash_digits,
        )

    def save_at_exit(self) -> None:
        if self.entries:
            try:
                self.dump(clear=self.clear_after_dump)
            except Exception as e:
                logging.error(f"Failed to save trace on exit: {e}")

    @classmethod
    def from_config(
        cls,
        config: TraceConfig,
        entries: list[TraceEntry] | None = None,
    ) -> "TraceManager":
        """Create a TraceManager from a TraceConfig."""
        return cls(
            entries=entries,
            persist_dir=config.persist_dir,
            subfolder=config.subfolder,
            file_prefix=config.file_prefix,
            capacity=config.capacity,
            extension=config.extension,
            use_timestamp=config.use_timestamp,
            hash_digits=config.hash_digits,
            auto_save_on_exit=config.auto_save_on_exit,
            clear_after_dump=config.clear_after_dump,
        )


def _flat(value):
    if value is None or isinstance(value, (str, int, float, bool)):
        return value
    return str(value)


__all__ = ["TraceConfig", "TraceEntry", "TraceManager"]
