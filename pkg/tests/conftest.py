import pytest

from enose.calibration import Gas, SensorChannel
from enose.config import ServiceConfig, default_config
from enose.simulator import banana_preset, generate_trace
from enose.store import Batch, IngestionStore


@pytest.fixture
def config(tmp_path) -> ServiceConfig:
    return default_config(tmp_path / "data")


@pytest.fixture
def store(config) -> IngestionStore:
    return IngestionStore(config)


@pytest.fixture
def channels(config) -> dict[Gas, SensorChannel]:
    return {c.gas: c.resolve() for c in config.channels.values()}


@pytest.fixture(scope="session")
def banana_trace():
    """Zero-noise banana trace against the default calibration."""
    cfg = default_config("unused")
    chans = {c.gas: c.resolve() for c in cfg.channels.values()}
    return generate_trace(banana_preset(), chans, batch_id="banana-1")


def register_banana(store: IngestionStore, batch_id: str = "banana-1",
                    weight_kg: float = 4.0, started_at: int = 1_755_000_000) -> Batch:
    batch = Batch(batch_id=batch_id, fruit="banana", weight_kg=weight_kg,
                  started_at=started_at, quality_config_id="banana")
    store.register_batch(batch)
    return batch
