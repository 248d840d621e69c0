"""Sensor-channel reliability metrics over a voltage time series.

A low-order polynomial fitted to the series acts as the baseline trend;
deviations from it are treated as noise. The reported figures are the
baseline-to-residual amplitude ratio (SNR, V/V), the residual noise level
(V), the mean rolling standard deviation over full 120-sample windows,
and the lag-1 autocorrelation. All standard deviations are population
(not sample) ones so that independent implementations agree on shared
fixtures.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import _kernels
from .errors import (
    ConstantSeriesError,
    NoiselessSignalError,
    SeriesTooShortError,
    UnderdeterminedFitError,
)

DEFAULT_BASELINE_DEGREE = 3
DEFAULT_ROLLING_WINDOW = 120


@dataclass(frozen=True)
class SignalSeries:
    """Ordered voltage samples for one channel."""

    channel_id: str
    timestamps: np.ndarray  # UTC epoch seconds, strictly increasing
    values: np.ndarray      # volts
    nominal_interval: float = 60.0

    def __post_init__(self):
        ts = np.asarray(self.timestamps, dtype=np.int64)
        vals = np.asarray(self.values, dtype=np.float64)
        if ts.size != vals.size:
            raise ValueError("timestamps and values differ in length")
        if ts.size < 2:
            raise ValueError(f"series needs at least 2 samples, got {ts.size}")
        if not np.all(np.diff(ts) > 0):
            raise ValueError("timestamps must be strictly increasing")
        if not np.all(np.isfinite(vals)):
            raise ValueError("sample values must be finite")
        object.__setattr__(self, "timestamps", ts)
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_samples(cls, channel_id: str, samples: Sequence[tuple[int, float]],
                     nominal_interval: float = 60.0) -> "SignalSeries":
        ts = np.array([s[0] for s in samples], dtype=np.int64)
        vals = np.array([s[1] for s in samples], dtype=np.float64)
        return cls(channel_id, ts, vals, nominal_interval)

    def __len__(self) -> int:
        return int(self.values.size)


@dataclass(frozen=True)
class SignalReport:
    """Per-channel reliability summary.

    snr and lag1_autocorr are None when not computable (noiseless or
    constant series); the reason is recorded in notes under the field
    name so consumers can render it distinctly instead of showing a
    bogus number.
    """

    channel_id: str
    snr: float | None
    residual_noise: float
    mean_rolling_std: float
    lag1_autocorr: float | None
    baseline_degree: int
    window: int
    sample_count: int
    notes: dict[str, str] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "channel": self.channel_id,
            "snr": self.snr,
            "residual_noise": self.residual_noise,
            "mean_rolling_std": self.mean_rolling_std,
            "lag1_autocorr": self.lag1_autocorr,
            "baseline_degree": self.baseline_degree,
            "window": self.window,
            "sample_count": self.sample_count,
            "notes": dict(self.notes),
        }


def fit_baseline(series: SignalSeries, degree: int = DEFAULT_BASELINE_DEGREE) -> np.ndarray:
    """Least-squares polynomial baseline evaluated at the sample times.

    Time is rescaled to [0, 1] and values are centered before fitting to
    keep the normal equations well conditioned; a constant series
    therefore yields an exactly constant baseline with zero residuals.
    """
    if degree < 1:
        raise ValueError(f"baseline degree must be >= 1, got {degree}")
    n = len(series)
    if n <= degree:
        raise UnderdeterminedFitError(
            f"{series.channel_id}: {n} samples cannot determine a degree-{degree} baseline"
        )
    ts = series.timestamps.astype(np.float64)
    t = (ts - ts[0]) / (ts[-1] - ts[0])
    mean = series.values.mean()
    coeffs = np.polynomial.polynomial.polyfit(t, series.values - mean, degree)
    return np.polynomial.polynomial.polyval(t, coeffs) + mean


def residuals(series: SignalSeries, baseline: np.ndarray) -> np.ndarray:
    return series.values - np.asarray(baseline, dtype=np.float64)


def snr(series: SignalSeries, baseline: np.ndarray) -> float:
    """Amplitude signal-to-noise ratio: std(baseline) / std(residual).

    Raises NoiselessSignalError on zero residual variance rather than
    returning infinity; a constant baseline over a noisy residual gives
    exactly 0 (no signal component).
    """
    baseline = np.asarray(baseline, dtype=np.float64)
    resid = residuals(series, baseline)
    if np.ptp(resid) == 0.0:
        raise NoiselessSignalError(f"{series.channel_id}: residual variance is zero")
    if np.ptp(baseline) == 0.0:
        return 0.0
    noise = float(resid.std())
    if noise == 0.0:
        raise NoiselessSignalError(f"{series.channel_id}: residual variance underflowed")
    return float(baseline.std()) / noise


def residual_noise(series: SignalSeries, baseline: np.ndarray) -> float:
    """Population standard deviation of the residuals, in volts."""
    return float(residuals(series, baseline).std())


def rolling_std(series: SignalSeries, window: int = DEFAULT_ROLLING_WINDOW) -> tuple[np.ndarray, float]:
    """Sliding population std over every full window.

    Returns the per-window series (length n - window + 1) and its mean.
    Partial leading windows are excluded by design.
    """
    n = len(series)
    if n < window:
        raise SeriesTooShortError(
            f"{series.channel_id}: {n} samples < rolling window {window}", required=window
        )
    per_window = _kernels.rolling_std(series.values, window)
    return per_window, float(per_window.mean())


def lag1_autocorr(series: SignalSeries) -> float:
    """Sample autocorrelation at lag 1, clamped into [-1, 1].

    r = sum((x_t - mean)(x_{t+1} - mean)) / sum((x_t - mean)^2)

    Raises ConstantSeriesError when the series has zero variance; the
    dashboard renders that as "stable" instead of a number.
    """
    n = len(series)
    if n < 3:
        raise SeriesTooShortError(
            f"{series.channel_id}: lag-1 autocorrelation needs >= 3 samples, got {n}", required=3
        )
    if np.ptp(series.values) == 0.0:
        raise ConstantSeriesError(f"{series.channel_id}: constant series")
    num, den = _kernels.lag1_terms(series.values)
    if den == 0.0:
        raise ConstantSeriesError(f"{series.channel_id}: zero variance")
    return float(min(1.0, max(-1.0, num / den)))


def signal_report(series: SignalSeries, degree: int = DEFAULT_BASELINE_DEGREE,
                  window: int = DEFAULT_ROLLING_WINDOW) -> SignalReport:
    """Bundle the four metrics for one channel.

    Precondition failures (too short for the window or the baseline)
    propagate; value-level conditions (noiseless, constant) surface as
    None fields with a reason note.
    """
    baseline = fit_baseline(series, degree)
    _, mean_rstd = rolling_std(series, window)
    notes: dict[str, str] = {}
    try:
        snr_value: float | None = snr(series, baseline)
    except NoiselessSignalError:
        snr_value = None
        notes["snr"] = "noiseless"
    try:
        lag1: float | None = lag1_autocorr(series)
    except ConstantSeriesError:
        lag1 = None
        notes["lag1_autocorr"] = "constant"
    return SignalReport(
        channel_id=series.channel_id,
        snr=snr_value,
        residual_noise=residual_noise(series, baseline),
        mean_rolling_std=mean_rstd,
        lag1_autocorr=lag1,
        baseline_degree=degree,
        window=window,
        sample_count=len(series),
        notes=notes,
    )


def render_report_table(reports: Sequence[SignalReport]) -> str:
    """Plain-text table of per-channel metrics."""
    header = f"{'Channel':<10} {'SNR (V/V)':>10} {'Resid (V)':>11} {'Roll std (V)':>13} {'Lag-1 AC':>9}"
    lines = [header, "-" * len(header)]
    for r in reports:
        snr_txt = f"{r.snr:.2f}" if r.snr is not None else "n/a"
        ac_txt = f"{r.lag1_autocorr:.4f}" if r.lag1_autocorr is not None else "stable"
        lines.append(
            f"{r.channel_id:<10} {snr_txt:>10} {r.residual_noise:>11.5f} "
            f"{r.mean_rolling_std:>13.5f} {ac_txt:>9}"
        )
    return "\n".join(lines)
