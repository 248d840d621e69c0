"""Deterministic e-nose device simulator.

Replaces the sealed-container rig: per-gas concentrations follow a
logistic ramp (optionally a sum of two logistics to mimic the late
decomposition upturn), are encoded to divider voltages through the
calibration inverse, and get Gaussian noise added in the voltage domain,
where real sensor noise lives.

Randomness comes from numpy's PCG64 generator seeded from the profile,
so the same profile always yields a bit-identical trace on any platform.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

import numpy as np

from .calibration import Gas, SensorChannel, ppm_to_voltage
from .errors import ReplayAbortedError, UnencodableProfileError
from .records import TelemetryRecord

#: Fraction of Vcc kept clear of each supply rail when noise is added,
#: mimicking an ADC that never reads all the way to the rails.
RAIL_GUARD = 5e-4

DEFAULT_START_EPOCH = 1_755_000_000  # 2025-08-12T11:20:00Z, arbitrary fixed origin


@dataclass(frozen=True)
class GasRamp:
    """Logistic concentration trajectory for one gas, in absolute ppm.

    ppm(t) = initial + (plateau - initial) / (1 + exp(-rate * (t - midpoint)))

    A second logistic of height surge_ppm can be stacked on top to model
    the decomposition upturn a couple of days in.
    """

    initial_ppm: float
    plateau_ppm: float
    growth_rate: float      # 1/hour
    midpoint_hours: float
    surge_ppm: float = 0.0  # 0 disables the second stage
    surge_rate: float = 0.0
    surge_midpoint_hours: float = 0.0

    def __post_init__(self):
        if self.initial_ppm < 0:
            raise ValueError(f"initial_ppm must be >= 0, got {self.initial_ppm}")
        if self.plateau_ppm < self.initial_ppm:
            raise ValueError("plateau_ppm must be >= initial_ppm")
        if not (self.growth_rate > 0):
            raise ValueError("growth_rate must be > 0")
        if self.surge_ppm < 0:
            raise ValueError("surge_ppm must be >= 0")
        if self.surge_ppm > 0 and not (self.surge_rate > 0):
            raise ValueError("surge_rate must be > 0 when surge_ppm is set")

    def ppm_at(self, hours: np.ndarray | float) -> np.ndarray | float:
        t = np.asarray(hours, dtype=np.float64)
        out = self.initial_ppm + (self.plateau_ppm - self.initial_ppm) / (
            1.0 + np.exp(-self.growth_rate * (t - self.midpoint_hours))
        )
        if self.surge_ppm > 0:
            out = out + self.surge_ppm / (
                1.0 + np.exp(-self.surge_rate * (t - self.surge_midpoint_hours))
            )
        return float(out) if np.isscalar(hours) else out


@dataclass(frozen=True)
class RipeningProfile:
    """One simulated storage scenario."""

    fruit: str
    weight_kg: float
    gases: dict[Gas, GasRamp]
    mean_temp_c: float
    mean_rh_pct: float
    duration_hours: float
    interval_seconds: float = 60.0
    voltage_noise_std: float = 0.0
    env_noise_std: float = 0.0
    seed: int = 0
    start_epoch: int = DEFAULT_START_EPOCH

    def __post_init__(self):
        if not (self.weight_kg > 0):
            raise ValueError("weight_kg must be > 0")
        if not (self.duration_hours > 0 and self.interval_seconds > 0):
            raise ValueError("duration and interval must be > 0")
        if self.voltage_noise_std < 0 or self.env_noise_std < 0:
            raise ValueError("noise stds must be >= 0")
        if set(self.gases) != set(Gas):
            raise ValueError("profile must define a ramp for every gas")

    @property
    def record_count(self) -> int:
        return int(math.floor(self.duration_hours * 3600.0 / self.interval_seconds))


def generate_trace(profile: RipeningProfile, channels: Mapping[Gas, SensorChannel],
                   batch_id: str = "sim") -> list[TelemetryRecord]:
    """Generate the full telemetry trace for a profile.

    Records cover t in [0, duration) at the profile interval. The
    noiseless voltage of every sample must fall inside (0, Vcc), else an
    UnencodableProfileError names the offending gas; noise added on top
    is clipped just inside the rails like a saturating ADC.
    """
    n = profile.record_count
    hours = (np.arange(n) * profile.interval_seconds) / 3600.0
    rng = np.random.default_rng(profile.seed)

    volt_columns: dict[str, np.ndarray] = {}
    for gas in Gas:  # fixed draw order keeps traces reproducible
        channel = channels[gas]
        ramp = profile.gases[gas]
        ppm = ramp.ppm_at(hours)
        volts = np.empty(n)
        for i in range(n):
            try:
                volts[i] = ppm_to_voltage(float(ppm[i]), channel)
            except UnencodableProfileError as e:
                raise UnencodableProfileError(
                    f"{profile.fruit} profile, {gas.value} at t={hours[i]:.2f} h: {e}"
                ) from e
        if profile.voltage_noise_std > 0:
            vcc = channel.supply_voltage
            volts = volts + rng.normal(0.0, profile.voltage_noise_std, n)
            volts = np.clip(volts, RAIL_GUARD * vcc, (1.0 - RAIL_GUARD) * vcc)
        volt_columns[channel.channel_id] = volts

    temp = np.full(n, profile.mean_temp_c)
    rh = np.full(n, profile.mean_rh_pct)
    if profile.env_noise_std > 0:
        temp = temp + rng.normal(0.0, profile.env_noise_std, n)
        rh = np.clip(rh + rng.normal(0.0, profile.env_noise_std, n), 0.0, 100.0)

    records = []
    for i in range(n):
        records.append(TelemetryRecord(
            batch_id=batch_id,
            timestamp=profile.start_epoch + int(round(i * profile.interval_seconds)),
            voltages={cid: float(col[i]) for cid, col in volt_columns.items()},
            temp_c=float(temp[i]),
            rh_pct=float(rh[i]),
        ))
    return records


def replay(trace: Sequence[TelemetryRecord], sink: Callable[[TelemetryRecord], object],
           speedup: float = math.inf) -> int:
    """Deliver records to a sink in timestamp order.

    The inter-record delay is the trace interval divided by speedup;
    speedup=inf delivers as fast as possible. A sink exception aborts the
    replay with the failing record index. Returns the number delivered.
    """
    if not (speedup > 0):
        raise ValueError(f"speedup must be > 0, got {speedup}")
    delivered = 0
    previous_ts: int | None = None
    for i, record in enumerate(trace):
        if previous_ts is not None and math.isfinite(speedup):
            time.sleep(max(0.0, (record.timestamp - previous_ts) / speedup))
        try:
            sink(record)
        except Exception as e:
            raise ReplayAbortedError(index=i, cause=e) from e
        previous_ts = record.timestamp
        delivered += 1
    return delivered


def banana_preset(voltage_noise_std: float = 0.0, env_noise_std: float = 0.0,
                  seed: int = 20250812) -> RipeningProfile:
    """3.5-day banana scenario at 1-minute cadence.

    Shape-matched to the published run: ethanol rises through ripening
    first, methane and ammonia surge as decomposition starts (midpoints
    near 36 h and 60 h), storage sits at the recorded hot-and-humid
    32 C / 97 %RH. The 4 kg batch mass keeps every trajectory inside the
    sensors' detection ranges; per kg, methane runs 80 -> 230, ethanol
    10 -> 118, ammonia 8 -> 150 ppm/kg, crossing the banana thresholds
    ripe-then-decomposed for each gas.
    """
    return RipeningProfile(
        fruit="banana",
        weight_kg=4.0,
        gases={
            Gas.ETHANOL: GasRamp(initial_ppm=40.0, plateau_ppm=472.0,
                                 growth_rate=0.22, midpoint_hours=30.0),
            Gas.METHANE: GasRamp(initial_ppm=320.0, plateau_ppm=920.0,
                                 growth_rate=0.25, midpoint_hours=36.0),
            Gas.AMMONIA: GasRamp(initial_ppm=32.0, plateau_ppm=600.0,
                                 growth_rate=0.20, midpoint_hours=60.0),
        },
        mean_temp_c=32.0,
        mean_rh_pct=97.0,
        duration_hours=84.0,
        interval_seconds=60.0,
        voltage_noise_std=voltage_noise_std,
        env_noise_std=env_noise_std,
        seed=seed,
    )
