"""Deterministic trace generation and replay."""

import dataclasses
import math

import numpy as np
import pytest

from enose.calibration import Gas, voltage_to_ppm
from enose.errors import ReplayAbortedError, UnencodableProfileError
from enose.simulator import (
    GasRamp,
    RipeningProfile,
    banana_preset,
    generate_trace,
    replay,
)


def flat_profile(ppm_by_gas=None, **overrides) -> RipeningProfile:
    ppm_by_gas = ppm_by_gas or {Gas.ETHANOL: 80.0, Gas.METHANE: 450.0, Gas.AMMONIA: 35.0}
    fields = dict(
        fruit="test",
        weight_kg=1.0,
        gases={g: GasRamp(initial_ppm=c, plateau_ppm=c, growth_rate=1.0,
                          midpoint_hours=1.0) for g, c in ppm_by_gas.items()},
        mean_temp_c=20.0,
        mean_rh_pct=80.0,
        duration_hours=0.5,
        interval_seconds=60.0,
    )
    fields.update(overrides)
    return RipeningProfile(**fields)


class TestGasRamp:
    def test_degenerate_logistic_is_constant(self):
        ramp = GasRamp(initial_ppm=42.0, plateau_ppm=42.0, growth_rate=1.0,
                       midpoint_hours=5.0)
        for h in (0.0, 5.0, 100.0):
            assert ramp.ppm_at(h) == 42.0

    def test_midpoint_symmetry(self):
        ramp = GasRamp(initial_ppm=40.0, plateau_ppm=472.0, growth_rate=0.22,
                       midpoint_hours=30.0)
        assert ramp.ppm_at(30.0) == (40.0 + 472.0) / 2.0

    def test_monotone_when_plateau_above_initial(self):
        ramp = GasRamp(initial_ppm=10.0, plateau_ppm=100.0, growth_rate=0.5,
                       midpoint_hours=12.0)
        hours = np.linspace(0.0, 48.0, 1000)
        ppm = ramp.ppm_at(hours)
        assert np.all(np.diff(ppm) >= 0)

    def test_surge_stacks_on_top(self):
        base = GasRamp(10.0, 100.0, 0.5, 12.0)
        surged = GasRamp(10.0, 100.0, 0.5, 12.0,
                         surge_ppm=50.0, surge_rate=1.0, surge_midpoint_hours=40.0)
        assert surged.ppm_at(60.0) > base.ppm_at(60.0)

    @pytest.mark.parametrize("kwargs", [
        dict(initial_ppm=-1.0, plateau_ppm=10.0, growth_rate=1.0, midpoint_hours=1.0),
        dict(initial_ppm=10.0, plateau_ppm=5.0, growth_rate=1.0, midpoint_hours=1.0),
        dict(initial_ppm=1.0, plateau_ppm=10.0, growth_rate=0.0, midpoint_hours=1.0),
        dict(initial_ppm=1.0, plateau_ppm=10.0, growth_rate=1.0, midpoint_hours=1.0,
             surge_ppm=5.0),
    ])
    def test_invalid_ramps_rejected(self, kwargs):
        with pytest.raises(ValueError):
            GasRamp(**kwargs)


class TestGenerateTrace:
    def test_constant_profile_encodes_constant_ppm(self, channels):
        profile = flat_profile()
        trace = generate_trace(profile, channels)
        assert len(trace) == profile.record_count == 30
        for record in trace:
            for gas, expected in ((Gas.ETHANOL, 80.0), (Gas.METHANE, 450.0),
                                  (Gas.AMMONIA, 35.0)):
                ch = channels[gas]
                ppm, clamped = voltage_to_ppm(record.voltages[ch.channel_id], ch)
                assert not clamped
                assert ppm == pytest.approx(expected, rel=1e-9)

    def test_deterministic_for_same_seed(self, channels):
        profile = banana_preset(voltage_noise_std=0.01, env_noise_std=0.2)
        a = generate_trace(profile, channels)
        b = generate_trace(profile, channels)
        assert [r.to_json_line() for r in a] == [r.to_json_line() for r in b]

    def test_seed_changes_noise(self, channels):
        a = generate_trace(banana_preset(voltage_noise_std=0.01), channels)
        b = generate_trace(banana_preset(voltage_noise_std=0.01, seed=1), channels)
        assert a[0].voltages != b[0].voltages

    def test_zero_noise_round_trip_fidelity(self, channels, banana_trace):
        profile = banana_preset()
        hours = np.array([(r.timestamp - banana_trace[0].timestamp) / 3600.0
                          for r in banana_trace])
        worst = 0.0
        for gas, ramp in profile.gases.items():
            ch = channels[gas]
            expected = ramp.ppm_at(hours)
            for i, record in enumerate(banana_trace):
                got, _ = voltage_to_ppm(record.voltages[ch.channel_id], ch)
                worst = max(worst, abs(got - expected[i]) / expected[i])
        assert worst < 1e-6

    def test_methane_crosses_thresholds_in_order(self, channels, banana_trace):
        ch = channels[Gas.METHANE]
        weight = banana_preset().weight_kg
        per_kg = np.array([
            voltage_to_ppm(r.voltages[ch.channel_id], ch)[0] / weight
            for r in banana_trace
        ])
        first_ripe = int(np.argmax(per_kg >= 92.0))
        first_decomposed = int(np.argmax(per_kg >= 177.0))
        assert per_kg[first_ripe] >= 92.0
        assert per_kg[first_decomposed] >= 177.0
        assert 0 < first_ripe < first_decomposed

    def test_unencodable_profile_names_gas(self, channels):
        profile = flat_profile({Gas.ETHANOL: 1e300, Gas.METHANE: 450.0,
                                Gas.AMMONIA: 35.0})
        with pytest.raises(UnencodableProfileError, match="ethanol"):
            generate_trace(profile, channels)

    def test_noise_stays_inside_rails(self, channels):
        profile = dataclasses.replace(banana_preset(voltage_noise_std=1.5), duration_hours=2.0)
        trace = generate_trace(profile, channels)
        for record in trace:
            for v in record.voltages.values():
                assert 0.0 < v < 5.0

    def test_timestamps_are_minute_cadence_epochs(self, channels):
        trace = generate_trace(flat_profile(), channels)
        deltas = {b.timestamp - a.timestamp for a, b in zip(trace, trace[1:])}
        assert deltas == {60}
        assert all(isinstance(r.timestamp, int) for r in trace)


class TestReplay:
    def test_batch_delivery_preserves_order(self, channels):
        trace = generate_trace(flat_profile(duration_hours=10 / 60.0), channels)
        seen = []
        assert replay(trace, seen.append) == 10
        assert seen == list(trace)

    def test_empty_trace_completes(self):
        assert replay([], lambda r: None) == 0

    def test_sink_failure_carries_index(self, channels):
        trace = generate_trace(flat_profile(), channels)

        def sink(record):
            if record is trace[5]:
                raise RuntimeError("sink down")

        with pytest.raises(ReplayAbortedError) as exc:
            replay(trace, sink)
        assert exc.value.index == 5

    def test_invalid_speedup_rejected(self):
        with pytest.raises(ValueError):
            replay([], lambda r: None, speedup=0.0)

    def test_finite_speedup_paces_delivery(self, channels):
        import time
        trace = generate_trace(flat_profile(duration_hours=3 / 60.0), channels)
        start = time.monotonic()
        replay(trace, lambda r: None, speedup=1200.0)  # two 60 s gaps -> 0.1 s
        assert time.monotonic() - start >= 0.08


class TestBananaPreset:
    def test_record_count(self):
        assert banana_preset().record_count == 5040

    def test_noise_free_by_default(self):
        profile = banana_preset()
        assert profile.voltage_noise_std == 0.0
        assert profile.env_noise_std == 0.0

    def test_requires_every_gas(self):
        with pytest.raises(ValueError):
            flat_profile({Gas.ETHANOL: 80.0, Gas.METHANE: 450.0})
