"""Append-only telemetry store with derived-reading computation.

Layout under the data directory, one subdirectory per batch:

    batches/<batch_id>/batch.json      batch metadata (atomic replace)
    batches/<batch_id>/raw.jsonl       telemetry records, wire format
    batches/<batch_id>/derived.jsonl   computed readings, 1:1 with raw

Raw lines are never rewritten. Each accepted record is appended as a
single write; a torn trailing line (interrupted write) is detected and
discarded when the store opens. Derived readings are recomputable from
raw + config, and any derived tail missing after a crash is rebuilt on
load.
"""

from __future__ import annotations

import bisect
import csv
import io
import json
import re
import threading
from dataclasses import dataclass
from pathlib import Path

from .calibration import (
    Gas,
    SensorChannel,
    normalize_per_kg,
    voltage_to_ppm,
    voltage_to_resistance,
)
from .config import ChannelConfig, ServiceConfig
from .errors import (
    BatchConflictError,
    EnoseError,
    InvalidReferenceError,
    InvalidWeightError,
    OutOfRangeVoltageError,
    StaleRecordError,
    UnknownBatchError,
)
from .quality import QualityModelConfig
from .records import DerivedReading, TelemetryRecord
from .signal_metrics import SignalSeries

#: Only configured calibration set; kept as a reference for forward compat.
CALIBRATION_ID = "default"

_BATCH_ID_RE = re.compile(r"^[A-Za-z0-9_-]{1,64}$")

FAULT_VOLTAGE = "out-of-range-voltage"
FAULT_WARMUP = "warming-up"


@dataclass(frozen=True)
class Batch:
    batch_id: str
    fruit: str
    weight_kg: float
    started_at: int  # UTC epoch seconds
    quality_config_id: str
    calibration_id: str = CALIBRATION_ID

    def as_dict(self) -> dict:
        return {
            "batch_id": self.batch_id,
            "fruit": self.fruit,
            "weight_kg": self.weight_kg,
            "started_at": self.started_at,
            "quality_config_id": self.quality_config_id,
            "calibration_id": self.calibration_id,
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "Batch":
        return cls(
            batch_id=str(obj["batch_id"]),
            fruit=str(obj["fruit"]),
            weight_kg=float(obj["weight_kg"]),
            started_at=int(obj["started_at"]),
            quality_config_id=str(obj["quality_config_id"]),
            calibration_id=str(obj.get("calibration_id", CALIBRATION_ID)),
        )


class _Derivation:
    """Per-batch conversion state: resolved Ro values and warm-up windows."""

    def __init__(self, batch: Batch, config: ServiceConfig, model: QualityModelConfig):
        self.batch = batch
        self.model = model
        self.channel_configs: dict[Gas, ChannelConfig] = {
            c.gas: c for c in config.channels.values()
        }
        self.resolved: dict[Gas, SensorChannel] = {}
        self.warmup_rs: dict[Gas, list[float]] = {}
        for gas, cc in self.channel_configs.items():
            if cc.ro_ohms is not None:
                self.resolved[gas] = cc.resolve()
            else:
                self.warmup_rs[gas] = []

    def derive(self, record: TelemetryRecord) -> DerivedReading:
        ppm: dict[str, float] = {}
        ppm_per_kg: dict[str, float] = {}
        clamped: dict[str, bool] = {}
        faulted: dict[str, str] = {}
        faulted_gases: set[Gas] = set()

        for gas, cc in self.channel_configs.items():
            v = record.voltages[cc.channel_id]
            if gas not in self.resolved:
                # warm-up: accumulate clean-air Rs until the window fills
                try:
                    rs = voltage_to_resistance(v, cc.resolve(ro_ohms=1.0))
                except OutOfRangeVoltageError:
                    faulted[gas.value] = FAULT_VOLTAGE
                    faulted_gases.add(gas)
                    continue
                window = self.warmup_rs[gas]
                window.append(rs)
                if len(window) >= (cc.ro_warmup_samples or 1):
                    self.resolved[gas] = cc.resolve(ro_ohms=sum(window) / len(window))
                faulted[gas.value] = FAULT_WARMUP
                faulted_gases.add(gas)
                continue
            try:
                value, was_clamped = voltage_to_ppm(v, self.resolved[gas])
            except OutOfRangeVoltageError:
                faulted[gas.value] = FAULT_VOLTAGE
                faulted_gases.add(gas)
                continue
            ppm[gas.value] = value
            ppm_per_kg[gas.value] = normalize_per_kg(value, self.batch.weight_kg)
            clamped[gas.value] = was_clamped

        score = self.model.score(
            ppm_per_kg={Gas(g): x for g, x in ppm_per_kg.items()},
            temp_c=record.temp_c,
            rh_pct=record.rh_pct,
            timestamp=record.timestamp,
            faulted=faulted_gases,
        )
        return DerivedReading(
            batch_id=record.batch_id,
            timestamp=record.timestamp,
            ppm=ppm,
            ppm_per_kg=ppm_per_kg,
            clamped=clamped,
            faulted=faulted,
            quality=score,
        )


class _BatchState:
    def __init__(self, batch: Batch, directory: Path, derivation: _Derivation):
        self.batch = batch
        self.dir = directory
        self.derivation = derivation
        self.raw: list[TelemetryRecord] = []
        self.derived: list[DerivedReading] = []
        self.lock = threading.Lock()

    @property
    def raw_path(self) -> Path:
        return self.dir / "raw.jsonl"

    @property
    def derived_path(self) -> Path:
        return self.dir / "derived.jsonl"


def _read_jsonl(path: Path) -> list[dict]:
    """Read a JSONL file, discarding a torn trailing line in place.

    A line is torn when the file does not end in a newline or the final
    line fails to parse; the file is truncated back to the last good
    record. Corruption anywhere else is refused outright.
    """
    if not path.exists():
        return []
    data = path.read_bytes()
    entries: list[dict] = []
    offset = 0
    while offset < len(data):
        newline = data.find(b"\n", offset)
        torn = newline < 0  # no terminator: interrupted write
        line = data[offset:] if torn else data[offset:newline]
        if not torn:
            try:
                entries.append(json.loads(line))
                offset = newline + 1
                continue
            except json.JSONDecodeError:
                torn = newline + 1 >= len(data)
        if torn:
            with path.open("r+b") as fh:
                fh.truncate(offset)
            break
        raise EnoseError(f"{path}: corrupt record mid-log at byte {offset}")
    return entries


def _append_line(path: Path, line: str) -> None:
    with path.open("a", encoding="utf-8") as fh:
        fh.write(line + "\n")
        fh.flush()


class IngestionStore:
    """Single-writer-per-batch telemetry store."""

    def __init__(self, config: ServiceConfig):
        self.config = config
        self.root = Path(config.data_dir) / "batches"
        self.root.mkdir(parents=True, exist_ok=True)
        self._states: dict[str, _BatchState] = {}
        self._registry_lock = threading.Lock()
        for batch_dir in sorted(self.root.iterdir()):
            if (batch_dir / "batch.json").exists():
                self._load_batch(batch_dir)

    # -- loading -----------------------------------------------------------

    def _model_for(self, batch: Batch) -> QualityModelConfig:
        try:
            return self.config.quality_models[batch.quality_config_id]
        except KeyError:
            raise InvalidReferenceError(
                f"batch {batch.batch_id}: unknown quality config "
                f"{batch.quality_config_id!r}"
            ) from None

    def _load_batch(self, batch_dir: Path) -> None:
        batch = Batch.from_dict(json.loads((batch_dir / "batch.json").read_text()))
        state = _BatchState(batch, batch_dir, _Derivation(batch, self.config, self._model_for(batch)))
        raw_entries = _read_jsonl(state.raw_path)
        derived_entries = _read_jsonl(state.derived_path)
        state.raw = [TelemetryRecord.from_wire(e) for e in raw_entries]
        stored = [DerivedReading.from_dict(e) for e in derived_entries[: len(state.raw)]]
        if len(derived_entries) > len(state.raw):
            # derived log ran ahead of raw (torn raw tail): rewrite to match
            with state.derived_path.open("w", encoding="utf-8") as fh:
                for reading in stored:
                    fh.write(reading.to_json_line() + "\n")
        # replay raw through the derivation state; rebuild any missing tail
        for i, record in enumerate(state.raw):
            recomputed = state.derivation.derive(record)
            if i < len(stored):
                state.derived.append(stored[i])
            else:
                _append_line(state.derived_path, recomputed.to_json_line())
                state.derived.append(recomputed)
        self._states[batch.batch_id] = state

    # -- registration ------------------------------------------------------

    def register_batch(self, batch: Batch) -> str:
        if not _BATCH_ID_RE.match(batch.batch_id):
            raise ValueError(
                f"batch id must match {_BATCH_ID_RE.pattern}, got {batch.batch_id!r}"
            )
        if not (batch.weight_kg > 0):
            raise InvalidWeightError(f"batch weight must be > 0 kg, got {batch.weight_kg}")
        if batch.calibration_id != CALIBRATION_ID:
            raise InvalidReferenceError(f"unknown calibration config {batch.calibration_id!r}")
        model = self._model_for(batch)
        with self._registry_lock:
            if batch.batch_id in self._states:
                raise BatchConflictError(f"batch {batch.batch_id!r} already registered")
            batch_dir = self.root / batch.batch_id
            batch_dir.mkdir(parents=True, exist_ok=True)
            tmp = batch_dir / "batch.json.tmp"
            tmp.write_text(json.dumps(batch.as_dict(), indent=2))
            tmp.replace(batch_dir / "batch.json")
            self._states[batch.batch_id] = _BatchState(
                batch, batch_dir, _Derivation(batch, self.config, model)
            )
        return batch.batch_id

    def _state(self, batch_id: str) -> _BatchState:
        try:
            return self._states[batch_id]
        except KeyError:
            raise UnknownBatchError(f"no batch {batch_id!r}") from None

    def get_batch(self, batch_id: str) -> Batch:
        return self._state(batch_id).batch

    def list_batches(self) -> list[Batch]:
        return [s.batch for s in self._states.values()]

    # -- ingestion ----------------------------------------------------------

    def ingest(self, record: TelemetryRecord) -> DerivedReading:
        state = self._state(record.batch_id)
        with state.lock:
            if record.timestamp < state.batch.started_at:
                raise StaleRecordError(
                    f"record at {record.timestamp} predates batch start "
                    f"{state.batch.started_at}"
                )
            if state.raw and record.timestamp <= state.raw[-1].timestamp:
                # A byte-identical resend of any stored record is a no-op
                # returning the stored reading, so clients can retry or
                # replay a whole trace safely. Anything else in the past
                # is rejected as stale.
                idx = bisect.bisect_left(
                    state.raw, record.timestamp, key=lambda r: r.timestamp
                )
                if idx < len(state.raw) and state.raw[idx] == record:
                    return state.derived[idx]
                if idx < len(state.raw) and state.raw[idx].timestamp == record.timestamp:
                    raise StaleRecordError(
                        f"conflicting record at {record.timestamp}: differs from stored"
                    )
                raise StaleRecordError(
                    f"record at {record.timestamp} older than newest stored "
                    f"{state.raw[-1].timestamp}"
                )
            reading = state.derivation.derive(record)
            _append_line(state.raw_path, record.to_json_line())
            _append_line(state.derived_path, reading.to_json_line())
            state.raw.append(record)
            state.derived.append(reading)
            return reading

    # -- queries -------------------------------------------------------------

    def latest(self, batch_id: str) -> DerivedReading | None:
        state = self._state(batch_id)
        with state.lock:
            return state.derived[-1] if state.derived else None

    def query_history(self, batch_id: str, ts_from: int | None = None,
                      ts_to: int | None = None, max_points: int | None = None
                      ) -> list[DerivedReading]:
        """Chronological readings in [ts_from, ts_to], downsampled by a
        uniform stride that always keeps the first and last points."""
        if max_points is not None and max_points < 1:
            raise ValueError(f"max_points must be >= 1, got {max_points}")
        state = self._state(batch_id)
        with state.lock:
            readings = list(state.derived)
        if ts_from is not None:
            readings = [r for r in readings if r.timestamp >= ts_from]
        if ts_to is not None:
            readings = [r for r in readings if r.timestamp <= ts_to]
        n = len(readings)
        if max_points is None or n <= max_points:
            return readings
        if max_points == 1:
            return [readings[-1]]
        stride = -(-(n - 1) // (max_points - 1))  # ceil division
        picked = list(range(0, n, stride))
        if picked[-1] != n - 1:
            picked.append(n - 1)
        return [readings[i] for i in picked]

    def raw_records(self, batch_id: str) -> list[TelemetryRecord]:
        state = self._state(batch_id)
        with state.lock:
            return list(state.raw)

    def recompute_derived(self, batch_id: str) -> list[DerivedReading]:
        """Re-run the derivation over the raw log; equals the stored
        derived readings whenever log and config are intact."""
        state = self._state(batch_id)
        derivation = _Derivation(state.batch, self.config, self._model_for(state.batch))
        with state.lock:
            return [derivation.derive(r) for r in state.raw]

    def signal_series(self, batch_id: str) -> dict[str, SignalSeries]:
        """Per-channel voltage series over the stored raw records."""
        state = self._state(batch_id)
        with state.lock:
            raw = list(state.raw)
        out: dict[str, SignalSeries] = {}
        for cid in sorted(self.config.channels):
            out[cid] = SignalSeries(
                channel_id=cid,
                timestamps=[r.timestamp for r in raw],
                values=[r.voltages[cid] for r in raw],
            )
        return out

    # -- export ---------------------------------------------------------------

    def export_csv(self, batch_id: str) -> str:
        """CSV document of all derived readings, 6 significant digits."""
        state = self._state(batch_id)
        with state.lock:
            rows = list(zip(state.raw, state.derived))
        channel_ids = sorted(self.config.channels)
        gas_names = [g.value for g in Gas]
        factors = [f.value for f in self._model_for(state.batch).weights]
        header = (["ts"] + [f"v_{c}" for c in channel_ids]
                  + [f"ppm_{g}" for g in gas_names]
                  + [f"ppm_per_kg_{g}" for g in gas_names]
                  + ["temp_c", "rh_pct"]
                  + [f"q_{f}" for f in factors] + ["q_total", "category"])
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for record, reading in rows:
            row: list[str] = [str(record.timestamp)]
            row += [_fmt(record.voltages[c]) for c in channel_ids]
            row += [_fmt(reading.ppm.get(g)) for g in gas_names]
            row += [_fmt(reading.ppm_per_kg.get(g)) for g in gas_names]
            row += [_fmt(record.temp_c), _fmt(record.rh_pct)]
            factor_values = {f.value: q for f, q in reading.quality.factors.items()}
            row += [_fmt(factor_values.get(f)) for f in factors]
            row += [_fmt(reading.quality.total), reading.quality.category.value]
            writer.writerow(row)
        return buf.getvalue()


def _fmt(value: float | None) -> str:
    return "" if value is None else format(value, ".6g")


def parse_csv_export(text: str) -> list[dict]:
    """Parse an export back into python values (None for empty cells)."""
    reader = csv.DictReader(io.StringIO(text))
    out = []
    for row in reader:
        parsed: dict = {}
        for key, cell in row.items():
            if key in ("category",):
                parsed[key] = cell
            elif key == "ts":
                parsed[key] = int(cell)
            else:
                parsed[key] = float(cell) if cell != "" else None
        out.append(parsed)
    return out
