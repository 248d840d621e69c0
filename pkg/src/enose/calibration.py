"""MQ-sensor calibration: output voltage -> gas concentration.

The sensing element sits in a voltage divider against a load resistor RL,
so the sensor resistance is recovered as Rs = RL * (Vcc - Vout) / Vout.
Concentration follows from the datasheet sensitivity curve, modelled as a
single power law in the resistance ratio r = Rs/Ro:

    ppm(r) = A * r**B          (B < 0 for MQ sensors)

A and B are fitted from anchor points read off the datasheet log-log
figures, or given directly in the calibration config.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import (
    DegenerateFitError,
    InvalidPointError,
    InvalidRatioError,
    InvalidWeightError,
    OutOfRangeVoltageError,
    UnencodableProfileError,
)


class Gas(str, Enum):
    ETHANOL = "ethanol"
    METHANE = "methane"
    AMMONIA = "ammonia"


#: Detection range (ppm) per target gas, from the sensor datasheets:
#: MQ-3 ethanol, MQ-4 methane, MQ-135 ammonia.
DETECTION_RANGE_PPM: dict[Gas, tuple[float, float]] = {
    Gas.ETHANOL: (25.0, 500.0),
    Gas.METHANE: (300.0, 10_000.0),
    Gas.AMMONIA: (10.0, 1_000.0),
}

#: Conventional channel ids used throughout configs and the wire format.
CHANNEL_FOR_GAS: dict[Gas, str] = {
    Gas.ETHANOL: "mq3",
    Gas.METHANE: "mq4",
    Gas.AMMONIA: "mq135",
}
GAS_FOR_CHANNEL: dict[str, Gas] = {v: k for k, v in CHANNEL_FOR_GAS.items()}


@dataclass(frozen=True)
class PowerLawCurve:
    """Sensitivity curve ppm = coefficient * ratio**exponent."""

    coefficient: float  # A, ppm at ratio == 1; > 0
    exponent: float     # B, nonzero; negative for MQ sensors

    def __post_init__(self):
        if not (self.coefficient > 0):
            raise ValueError(f"curve coefficient must be > 0, got {self.coefficient}")
        if self.exponent == 0:
            raise ValueError("curve exponent must be nonzero (flat curve is unusable)")

    def ppm(self, ratio: float) -> float:
        return self.coefficient * ratio ** self.exponent

    def ratio(self, ppm: float) -> float:
        """Analytic inverse: the ratio producing the given concentration."""
        return (ppm / self.coefficient) ** (1.0 / self.exponent)


@dataclass(frozen=True)
class RatioPoint:
    """One (Rs/Ro, ppm) anchor read off a datasheet sensitivity figure."""

    ratio: float
    ppm: float

    def __post_init__(self):
        if not (self.ratio > 0 and self.ppm > 0):
            raise InvalidPointError(
                f"anchor point must be strictly positive, got ({self.ratio}, {self.ppm})"
            )


@dataclass(frozen=True)
class SensorChannel:
    """Electrical and calibration parameters for one sensor channel."""

    channel_id: str
    gas: Gas
    load_resistance: float        # RL, ohms
    supply_voltage: float         # Vcc, volts
    clean_air_resistance: float   # Ro, ohms
    detection_range: tuple[float, float]  # (min_ppm, max_ppm)
    curve: PowerLawCurve

    def __post_init__(self):
        for name in ("load_resistance", "supply_voltage", "clean_air_resistance"):
            if not (getattr(self, name) > 0):
                raise ValueError(f"{name} must be > 0, got {getattr(self, name)}")
        lo, hi = self.detection_range
        if not (0 < lo < hi):
            raise ValueError(f"detection range must satisfy 0 < min < max, got {self.detection_range}")


def voltage_to_resistance(v_out: float, channel: SensorChannel) -> float:
    """Sensor resistance Rs (ohms) from the divider output voltage.

    Raises OutOfRangeVoltageError for v_out outside the open interval
    (0, Vcc): the divider formula degenerates at the rails, which in
    practice means a shorted or disconnected sensor.
    """
    vcc = channel.supply_voltage
    if not (0.0 < v_out < vcc) or math.isnan(v_out):
        raise OutOfRangeVoltageError(
            f"{channel.channel_id}: output voltage {v_out} V outside (0, {vcc}) V"
        )
    return channel.load_resistance * (vcc - v_out) / v_out


def resistance_to_voltage(rs: float, channel: SensorChannel) -> float:
    """Inverse divider: output voltage for a given sensor resistance."""
    if not (rs > 0):
        raise ValueError(f"sensor resistance must be > 0, got {rs}")
    rl = channel.load_resistance
    return channel.supply_voltage * rl / (rl + rs)


def ratio_to_ppm(ratio: float, channel: SensorChannel) -> tuple[float, bool]:
    """Concentration (ppm) for a resistance ratio, clamped to the
    detection range.

    Returns (ppm, clamped). The clamp keeps the pipeline scoring even
    when the specimen outgasses past what the sensor can resolve.
    """
    if not (ratio > 0) or math.isnan(ratio):
        raise InvalidRatioError(f"{channel.channel_id}: ratio must be > 0, got {ratio}")
    raw = channel.curve.ppm(ratio)
    lo, hi = channel.detection_range
    if raw < lo:
        return lo, True
    if raw > hi:
        return hi, True
    return raw, False


def voltage_to_ppm(v_out: float, channel: SensorChannel) -> tuple[float, bool]:
    """Full conversion chain: divider voltage -> Rs -> Rs/Ro -> ppm."""
    rs = voltage_to_resistance(v_out, channel)
    return ratio_to_ppm(rs / channel.clean_air_resistance, channel)


def ppm_to_voltage(ppm: float, channel: SensorChannel) -> float:
    """Encode a concentration as the divider voltage that would produce it.

    Used by the device simulator; raises UnencodableProfileError when no
    voltage in (0, Vcc) maps to the requested concentration.
    """
    if not (ppm > 0) or math.isinf(ppm):
        raise UnencodableProfileError(
            f"{channel.channel_id}: {ppm} ppm has no finite Rs/Ro under a power-law curve"
        )
    ratio = channel.curve.ratio(ppm)
    if not (0 < ratio < math.inf):
        raise UnencodableProfileError(
            f"{channel.channel_id}: {ppm} ppm maps to ratio {ratio}"
        )
    v = resistance_to_voltage(ratio * channel.clean_air_resistance, channel)
    if not (0.0 < v < channel.supply_voltage):
        raise UnencodableProfileError(
            f"{channel.channel_id}: {ppm} ppm maps to {v} V, outside (0, {channel.supply_voltage}) V"
        )
    return v


def fit_power_law(points: Sequence[RatioPoint]) -> PowerLawCurve:
    """Least-squares power-law fit in (log ratio, log ppm) space.

    Exact on points that already lie on a power law. At least two points
    with distinct ratios are required; a zero fitted slope is rejected by
    the curve constructor (a flat curve cannot be inverted).
    """
    if len(points) < 2:
        raise DegenerateFitError(f"need at least 2 anchor points, got {len(points)}")
    ratios = [p.ratio for p in points]
    if len(set(ratios)) < 2:
        raise DegenerateFitError("need at least 2 distinct ratios to fit a slope")
    lx = [math.log(p.ratio) for p in points]
    ly = [math.log(p.ppm) for p in points]
    n = len(points)
    mx = sum(lx) / n
    my = sum(ly) / n
    sxx = sum((x - mx) ** 2 for x in lx)
    sxy = sum((x - mx) * (y - my) for x, y in zip(lx, ly))
    slope = sxy / sxx
    intercept = my - slope * mx
    return PowerLawCurve(coefficient=math.exp(intercept), exponent=slope)


def normalize_per_kg(ppm: float, weight_kg: float) -> float:
    """Weight-normalized concentration, ppm per kg of specimen."""
    if not (weight_kg > 0):
        raise InvalidWeightError(f"weight must be > 0 kg, got {weight_kg}")
    return ppm / weight_kg


def ro_from_warmup(voltages: Iterable[float], load_resistance: float, supply_voltage: float) -> float:
    """Clean-air resistance Ro as the mean Rs over a warm-up window.

    The window is assumed to be recorded in clean air before the specimen
    is sealed in; each sample is converted through the divider formula.
    """
    rs_values = []
    for v in voltages:
        if not (0.0 < v < supply_voltage):
            raise OutOfRangeVoltageError(f"warm-up voltage {v} V outside (0, {supply_voltage}) V")
        rs_values.append(load_resistance * (supply_voltage - v) / v)
    if not rs_values:
        raise ValueError("warm-up window is empty")
    return sum(rs_values) / len(rs_values)
