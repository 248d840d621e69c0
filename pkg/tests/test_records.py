"""Wire format for telemetry records and derived readings."""

import json

import pytest

from enose.quality import Category, Factor, QualityScore
from enose.records import DerivedReading, TelemetryRecord


def sample_record(**overrides):
    fields = dict(
        batch_id="b1",
        timestamp=1_755_000_000,
        voltages={"mq3": 0.74, "mq4": 1.1, "mq135": 1.4},
        temp_c=32.0,
        rh_pct=97.0,
    )
    fields.update(overrides)
    return TelemetryRecord(**fields)


class TestTelemetryRecord:
    def test_wire_keys(self):
        wire = sample_record().to_wire()
        assert set(wire) == {"batch", "ts", "v", "temp_c", "rh"}
        assert set(wire["v"]) == {"mq3", "mq4", "mq135"}

    def test_json_line_round_trip(self):
        record = sample_record()
        assert TelemetryRecord.from_wire(json.loads(record.to_json_line())) == record

    def test_missing_gas_channel_rejected(self):
        with pytest.raises(ValueError, match="mq4"):
            sample_record(voltages={"mq3": 0.74, "mq135": 1.4})

    @pytest.mark.parametrize("rh", [-1.0, 101.0])
    def test_humidity_domain(self, rh):
        with pytest.raises(ValueError):
            sample_record(rh_pct=rh)

    def test_nonfinite_temperature_rejected(self):
        with pytest.raises(ValueError):
            sample_record(temp_c=float("nan"))

    def test_malformed_wire_payload(self):
        with pytest.raises(ValueError):
            TelemetryRecord.from_wire({"batch": "b1", "ts": 0})


class TestDerivedReading:
    def test_dict_round_trip(self):
        score = QualityScore(
            factors={f: 0.5 for f in Factor},
            total=0.5,
            category=Category.MODERATE,
            timestamp=1_755_000_000,
        )
        reading = DerivedReading(
            batch_id="b1",
            timestamp=1_755_000_000,
            ppm={"ethanol": 80.0},
            ppm_per_kg={"ethanol": 20.0},
            clamped={"ethanol": False},
            faulted={"methane": "out-of-range-voltage"},
            quality=score,
        )
        assert DerivedReading.from_dict(json.loads(reading.to_json_line())) == reading
