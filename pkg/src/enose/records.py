"""Telemetry wire format shared by the simulator, the store, and the API.

One record per line, JSON encoded:

    {"batch": "b1", "ts": 1755000000,
     "v": {"mq3": 0.78, "mq4": 1.08, "mq135": 1.42},
     "temp_c": 32.0, "rh": 97.0}

Timestamps are UTC epoch seconds. The same schema is used for the
simulator file output, the append-only raw log, and the POST /telemetry
body.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .quality import QualityScore

GAS_CHANNELS = ("mq3", "mq4", "mq135")


@dataclass(frozen=True)
class TelemetryRecord:
    batch_id: str
    timestamp: int
    voltages: dict[str, float]  # channel_id -> volts
    temp_c: float
    rh_pct: float

    def __post_init__(self):
        missing = [c for c in GAS_CHANNELS if c not in self.voltages]
        if missing:
            raise ValueError(f"record missing gas channels: {missing}")
        if not math.isfinite(self.temp_c):
            raise ValueError(f"temperature not finite: {self.temp_c}")
        if not (0.0 <= self.rh_pct <= 100.0):
            raise ValueError(f"relative humidity outside [0, 100]: {self.rh_pct}")

    def to_wire(self) -> dict:
        return {
            "batch": self.batch_id,
            "ts": self.timestamp,
            "v": {c: self.voltages[c] for c in sorted(self.voltages)},
            "temp_c": self.temp_c,
            "rh": self.rh_pct,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_wire(), separators=(",", ":"))

    @classmethod
    def from_wire(cls, obj: dict) -> "TelemetryRecord":
        try:
            return cls(
                batch_id=str(obj["batch"]),
                timestamp=int(obj["ts"]),
                voltages={str(k): float(v) for k, v in obj["v"].items()},
                temp_c=float(obj["temp_c"]),
                rh_pct=float(obj["rh"]),
            )
        except (KeyError, TypeError) as e:
            raise ValueError(f"malformed telemetry record: {e}") from e


@dataclass(frozen=True)
class DerivedReading:
    """Concentrations and quality score computed from one raw record."""

    batch_id: str
    timestamp: int
    ppm: dict[str, float]          # gas name -> ppm
    ppm_per_kg: dict[str, float]   # gas name -> ppm/kg
    clamped: dict[str, bool]       # gas name -> detection-range clamp flag
    faulted: dict[str, str]        # gas name -> fault reason
    quality: QualityScore

    def as_dict(self) -> dict:
        return {
            "batch": self.batch_id,
            "ts": self.timestamp,
            "ppm": dict(self.ppm),
            "ppm_per_kg": dict(self.ppm_per_kg),
            "clamped": dict(self.clamped),
            "faulted": dict(self.faulted),
            "quality": self.quality.as_dict(),
        }

    def to_json_line(self) -> str:
        return json.dumps(self.as_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, obj: dict) -> "DerivedReading":
        return cls(
            batch_id=str(obj["batch"]),
            timestamp=int(obj["ts"]),
            ppm={str(k): float(v) for k, v in obj["ppm"].items()},
            ppm_per_kg={str(k): float(v) for k, v in obj["ppm_per_kg"].items()},
            clamped={str(k): bool(v) for k, v in obj["clamped"].items()},
            faulted={str(k): str(v) for k, v in obj["faulted"].items()},
            quality=QualityScore.from_dict(obj["quality"]),
        )
