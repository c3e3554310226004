"""Tests for the TraceManager class."""

import pandas as pd
import pytest
from pydantic import ValidationError

from ludics.core.designs.design import DAIMON
from ludics.core.generic.trace import TraceEntry, TraceManager
from ludics.core.normalize.reduction import evaluate_closed
from ludics.protocols.configs import EngineConfig, TraceConfig


@pytest.fixture
def temp_dir(tmp_path):
    """Create a temporary directory for trace files."""
    return tmp_path


def test_trace_manager_creation():
    """Test basic TraceManager creation."""
    manager = TraceManager()
    assert len(manager) == 0
    assert manager.clear_after_dump is True


def test_trace_manager_with_config():
    """Test TraceManager creation with configuration."""
    config = TraceConfig(
        persist_dir="test_traces",
        capacity=100,
        file_prefix="test_",
        extension=".csv",
        hash_digits=3,
    )
    manager = TraceManager.from_config(config)

    assert str(manager.persist_dir) == "test_traces"
    assert manager.capacity == 100
    assert manager.file_prefix == "test_"
    assert manager.hash_digits == 3


def test_record_flattens_detail():
    """Test that record keeps scalars and prints everything else."""
    manager = TraceManager()
    entry = manager.record("prove", verdict="failed", nodes=3, path=("a", "b"))

    assert isinstance(entry, TraceEntry)
    assert entry.detail == {"verdict": "failed", "nodes": 3, "path": "('a', 'b')"}
    assert len(manager) == 1


def test_to_df():
    """Test the DataFrame view of recorded entries."""
    manager = TraceManager()
    manager.record("evaluate", verdict="daimon", states=1)
    manager.record("exit", code=0)
    df = manager.to_df()

    assert isinstance(df, pd.DataFrame)
    assert list(df["event"]) == ["evaluate", "exit"]
    assert df.iloc[0]["states"] == 1


def test_evaluation_is_traced():
    """Test that evaluation records its verdict."""
    manager = TraceManager()
    evaluate_closed(DAIMON, tracer=manager)

    assert len(manager) == 1
    assert manager.entries[0].detail["verdict"] == "daimon"


def test_trace_manager_capacity(temp_dir):
    """Test that reaching capacity dumps the collected entries."""
    manager = TraceManager(persist_dir=temp_dir, capacity=2)
    manager.record("a")
    manager.record("b")
    assert len(manager) == 2

    manager.record("c")
    assert len(manager) == 1
    assert len(list(temp_dir.glob("*.csv"))) == 1


def test_trace_manager_dump(temp_dir):
    """Test trace dumping."""
    manager = TraceManager(persist_dir=temp_dir)
    manager.record("evaluate", verdict="omega")

    path = manager.dump()
    assert path is not None and path.exists()
    assert len(manager) == 0
    assert pd.read_csv(path).iloc[0]["verdict"] == "omega"


def test_trace_manager_no_clear_after_dump(temp_dir):
    """Test behavior when clear_after_dump is False."""
    manager = TraceManager(persist_dir=temp_dir, clear_after_dump=False)
    manager.record("evaluate")
    manager.dump()

    assert len(manager) == 1


def test_trace_manager_custom_path(temp_dir):
    """Test dumping to a custom path."""
    custom_path = temp_dir / "custom" / "run.csv"
    custom_path.parent.mkdir(parents=True, exist_ok=True)

    manager = TraceManager()
    manager.record("evaluate")
    assert manager.dump(persist_path=custom_path) == custom_path
    assert custom_path.exists()


def test_trace_manager_empty_dump():
    """Test dumping with no entries."""
    assert TraceManager().dump() is None


def test_trace_manager_file_naming(temp_dir):
    """Test trace file naming conventions."""
    manager = TraceManager(persist_dir=temp_dir, file_prefix="test_", hash_digits=5)

    path = manager._create_path()
    assert path.name.startswith("test_")
    assert path.suffix == ".csv"


def test_trace_manager_subfolder(temp_dir):
    """Test dumping into a subfolder."""
    manager = TraceManager(persist_dir=temp_dir, subfolder="runs")
    manager.record("evaluate")
    manager.dump()

    subfolder = temp_dir / "runs"
    assert subfolder.exists()
    assert any(subfolder.iterdir())


def test_trace_manager_save_at_exit(temp_dir):
    """Test save at exit."""
    manager = TraceManager(persist_dir=temp_dir, auto_save_on_exit=True)
    manager.record("evaluate")
    manager.save_at_exit()

    assert len(list(temp_dir.glob("*.csv"))) > 0


@pytest.mark.parametrize(
    "kwargs",
    [{"capacity": 0}, {"hash_digits": 11}, {"extension": "csv"}],
)
def test_trace_config_validation(kwargs):
    """Test invalid trace configurations."""
    with pytest.raises(ValidationError):
        TraceConfig(**kwargs)


def test_trace_config_default_dir():
    """Test the default trace directory."""
    config = TraceConfig(persist_dir=None)
    assert str(config.persist_dir) == "data/traces"


@pytest.mark.parametrize(
    "kwargs",
    [{"fuel": 0}, {"samples": True}, {"depth": 2.5}, {"format": "json"}],
)
def test_engine_config_validation(kwargs):
    """Test invalid engine budgets and formats."""
    with pytest.raises(ValidationError):
        EngineConfig(**kwargs)


def test_engine_config_defaults():
    """Test the default engine configuration."""
    config = EngineConfig()
    assert config.fuel == 100000
    assert config.format == "text"
