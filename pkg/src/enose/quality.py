"""Fruit quality index model.

Each gas contributes a normalized index that decays from 1 toward 0 as
the weight-normalized concentration x (ppm/kg) approaches the
decomposition threshold b:

    Q_gas(x) = max(0, 1 - (x/b)**a)

The exponent a is always derived from the ripe threshold so that the
index reads exactly 0.98 when the fruit is just ripe. Storage conditions
contribute piecewise-linear indices that are 1 inside the ideal band and
fall off linearly over a tolerance width on either side. The total is a
weighted average over all five factors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping

from .calibration import Gas
from .errors import (
    InvalidConcentrationError,
    InvalidReadingError,
    InvalidScoreError,
    InvalidThresholdError,
    InvalidWeightsError,
)

#: Index value pinned at the ripe-stage threshold.
RIPE_STAGE_QUALITY = 0.98

#: Tolerance on the factor-weight sum.
WEIGHT_SUM_TOL = 1e-9


class Factor(str, Enum):
    METHANE = "methane"
    AMMONIA = "ammonia"
    ETHANOL = "ethanol"
    TEMPERATURE = "temperature"
    HUMIDITY = "humidity"


GAS_FACTOR: dict[Gas, Factor] = {
    Gas.METHANE: Factor.METHANE,
    Gas.AMMONIA: Factor.AMMONIA,
    Gas.ETHANOL: Factor.ETHANOL,
}


class Category(str, Enum):
    EXCELLENT = "Excellent"
    GOOD = "Good"
    MODERATE = "Moderate"
    BAD = "Bad"
    ROTTEN = "Rotten"


def derive_exponent(ripe_threshold: float, decomposed_threshold: float) -> float:
    """Exponent a such that Q_gas(ripe_threshold) == 0.98.

    From 1 - (ripe/b)**a = 0.98:  a = ln(0.02) / ln(ripe/b).
    """
    if not (0 < ripe_threshold < decomposed_threshold):
        raise InvalidThresholdError(
            f"thresholds must satisfy 0 < ripe < decomposed, got "
            f"({ripe_threshold}, {decomposed_threshold})"
        )
    return math.log(1.0 - RIPE_STAGE_QUALITY) / math.log(ripe_threshold / decomposed_threshold)


@dataclass(frozen=True)
class GasQualityParams:
    """Per-gas thresholds (ppm/kg) and the decay exponent."""

    gas: Gas
    ripe_threshold: float
    decomposed_threshold: float
    exponent: float

    def __post_init__(self):
        if not (0 < self.ripe_threshold < self.decomposed_threshold):
            raise InvalidThresholdError(
                f"{self.gas.value}: thresholds out of order "
                f"({self.ripe_threshold}, {self.decomposed_threshold})"
            )
        if not (self.exponent > 0):
            raise InvalidThresholdError(f"{self.gas.value}: exponent must be > 0")

    @classmethod
    def from_thresholds(cls, gas: Gas, ripe: float, decomposed: float) -> "GasQualityParams":
        return cls(gas, ripe, decomposed, derive_exponent(ripe, decomposed))


@dataclass(frozen=True)
class EnvQualityParams:
    """Ideal storage band and linear falloff tolerances.

    Subscript convention: *_below applies under the band minimum,
    *_above over the band maximum.
    """

    temp_min: float
    temp_max: float
    temp_tol_below: float
    temp_tol_above: float
    rh_min: float
    rh_max: float
    rh_tol_below: float
    rh_tol_above: float

    def __post_init__(self):
        if not (self.temp_min < self.temp_max):
            raise InvalidThresholdError("temperature band must satisfy min < max")
        if not (self.rh_min < self.rh_max <= 100.0):
            raise InvalidThresholdError("humidity band must satisfy min < max <= 100")
        for name in ("temp_tol_below", "temp_tol_above", "rh_tol_below", "rh_tol_above"):
            if not (getattr(self, name) > 0):
                raise InvalidThresholdError(f"{name} must be > 0")


#: Banana defaults: ideal 14-16 C / 90-95 %RH, tolerances 2/9 C and 10/5 %RH.
BANANA_ENV_PARAMS = EnvQualityParams(
    temp_min=14.0, temp_max=16.0, temp_tol_below=2.0, temp_tol_above=9.0,
    rh_min=90.0, rh_max=95.0, rh_tol_below=10.0, rh_tol_above=5.0,
)

#: Banana factor weights: the fast-changing decomposition gases dominate.
BANANA_WEIGHTS: dict[Factor, float] = {
    Factor.METHANE: 0.3,
    Factor.AMMONIA: 0.325,
    Factor.ETHANOL: 0.15,
    Factor.TEMPERATURE: 0.125,
    Factor.HUMIDITY: 0.1,
}


def validate_weights(weights: Mapping[Factor, float]) -> None:
    total = sum(weights.values())
    if abs(total - 1.0) > WEIGHT_SUM_TOL:
        raise InvalidWeightsError(f"factor weights sum to {total!r}, expected 1")
    for factor, w in weights.items():
        if not (0.0 <= w <= 1.0):
            raise InvalidWeightsError(f"weight for {factor} outside [0, 1]: {w}")


def gas_quality(x: float, params: GasQualityParams) -> float:
    """Quality index for a weight-normalized concentration x (ppm/kg)."""
    if x < 0 or math.isnan(x):
        raise InvalidConcentrationError(f"concentration must be >= 0, got {x}")
    ratio = x / params.decomposed_threshold
    if ratio >= 1.0:
        # Past the decomposed threshold the index is pinned at zero; the
        # early return also avoids float overflow when a narrow threshold
        # spread makes the exponent very large.
        return 0.0
    return max(0.0, 1.0 - ratio ** params.exponent)


def _band_quality(value: float, lo: float, hi: float, tol_below: float, tol_above: float) -> float:
    if value < lo:
        return max(1.0 - (lo - value) / tol_below, 0.0)
    if value > hi:
        return max(1.0 - (value - hi) / tol_above, 0.0)
    return 1.0


def temp_quality(temp_c: float, params: EnvQualityParams) -> float:
    """Piecewise-linear temperature index: 1 inside the ideal band."""
    if not math.isfinite(temp_c):
        raise InvalidReadingError(f"temperature reading not finite: {temp_c}")
    return _band_quality(temp_c, params.temp_min, params.temp_max,
                         params.temp_tol_below, params.temp_tol_above)


def humidity_quality(rh_pct: float, params: EnvQualityParams) -> float:
    """Piecewise-linear relative-humidity index, mirror of temp_quality."""
    if not (0.0 <= rh_pct <= 100.0) or math.isnan(rh_pct):
        raise InvalidReadingError(f"relative humidity outside [0, 100]: {rh_pct}")
    return _band_quality(rh_pct, params.rh_min, params.rh_max,
                         params.rh_tol_below, params.rh_tol_above)


def total_quality(q_factors: Mapping[Factor, float], weights: Mapping[Factor, float]) -> float:
    """Weighted average of the per-factor indices.

    The factor sets of both mappings must match exactly and the weights
    must sum to 1; partial factor sets come from renormalize_weights.
    """
    if set(q_factors) != set(weights):
        missing = set(weights) ^ set(q_factors)
        raise InvalidWeightsError(f"factor sets differ on {sorted(f.value for f in missing)}")
    validate_weights(weights)
    return sum(weights[f] * q_factors[f] for f in weights)


def renormalize_weights(weights: Mapping[Factor, float], drop: set[Factor]) -> dict[Factor, float]:
    """Rescale the remaining weights proportionally so they sum to 1.

    Used when a sensor channel faults mid-run and its factor must be
    excluded from the total without breaking the weight-sum invariant.
    """
    kept = {f: w for f, w in weights.items() if f not in drop}
    total = sum(kept.values())
    if total <= 0:
        raise InvalidWeightsError("cannot renormalize: no weight left after drop")
    return {f: w / total for f, w in kept.items()}


def categorize(q_total: float) -> Category:
    """Five-level label over equal 0.2-wide bands, left-closed."""
    if not (0.0 <= q_total <= 1.0) or math.isnan(q_total):
        raise InvalidScoreError(f"total quality outside [0, 1]: {q_total}")
    if q_total >= 0.8:
        return Category.EXCELLENT
    if q_total >= 0.6:
        return Category.GOOD
    if q_total >= 0.4:
        return Category.MODERATE
    if q_total >= 0.2:
        return Category.BAD
    return Category.ROTTEN


@dataclass(frozen=True)
class QualityScore:
    """Scored record: per-factor indices, weighted total, category."""

    factors: dict[Factor, float]
    total: float
    category: Category
    timestamp: int  # UTC epoch seconds

    def as_dict(self) -> dict:
        return {
            "factors": {f.value: q for f, q in self.factors.items()},
            "total": self.total,
            "category": self.category.value,
            "ts": self.timestamp,
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "QualityScore":
        return cls(
            factors={Factor(k): float(v) for k, v in obj["factors"].items()},
            total=float(obj["total"]),
            category=Category(obj["category"]),
            timestamp=int(obj["ts"]),
        )


@dataclass(frozen=True)
class QualityModelConfig:
    """Per-fruit scoring model: gas thresholds, env band, factor weights."""

    fruit: str
    gas_params: dict[Gas, GasQualityParams]
    env_params: EnvQualityParams
    weights: dict[Factor, float] = field(default_factory=lambda: dict(BANANA_WEIGHTS))

    def __post_init__(self):
        if set(self.gas_params) != set(Gas):
            raise InvalidWeightsError("quality model must cover all three gases")
        validate_weights(self.weights)

    def score(self, ppm_per_kg: Mapping[Gas, float], temp_c: float, rh_pct: float,
              timestamp: int, faulted: set[Gas] = frozenset()) -> QualityScore:
        """Score one reading; faulted gas channels are excluded and the
        remaining weights renormalized."""
        factors: dict[Factor, float] = {}
        for gas, params in self.gas_params.items():
            if gas in faulted:
                continue
            factors[GAS_FACTOR[gas]] = gas_quality(ppm_per_kg[gas], params)
        factors[Factor.TEMPERATURE] = temp_quality(temp_c, self.env_params)
        factors[Factor.HUMIDITY] = humidity_quality(rh_pct, self.env_params)
        weights = self.weights
        if faulted:
            weights = renormalize_weights(weights, {GAS_FACTOR[g] for g in faulted})
        total = total_quality(factors, weights)
        # guard against last-bit drift out of [0, 1]
        total = min(1.0, max(0.0, total))
        return QualityScore(factors=factors, total=total,
                            category=categorize(total), timestamp=timestamp)


def banana_quality_model() -> QualityModelConfig:
    """Banana model with the published thresholds and weights."""
    return QualityModelConfig(
        fruit="banana",
        gas_params={
            Gas.METHANE: GasQualityParams.from_thresholds(Gas.METHANE, 92.0, 177.0),
            Gas.ETHANOL: GasQualityParams.from_thresholds(Gas.ETHANOL, 81.0, 108.0),
            Gas.AMMONIA: GasQualityParams.from_thresholds(Gas.AMMONIA, 48.0, 111.0),
        },
        env_params=BANANA_ENV_PARAMS,
        weights=dict(BANANA_WEIGHTS),
    )
