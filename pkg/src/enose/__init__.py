"""E-nose telemetry ingestion and fruit-quality scoring.

Converts MQ-series sensor voltages into gas concentrations, scores
fruit freshness with a weighted threshold model, tracks per-channel
signal reliability, and persists everything in append-only logs behind
an HTTP API. A deterministic simulator stands in for the hardware.
"""

from .calibration import (
    DETECTION_RANGE_PPM,
    Gas,
    PowerLawCurve,
    RatioPoint,
    SensorChannel,
    fit_power_law,
    normalize_per_kg,
    ppm_to_voltage,
    ratio_to_ppm,
    resistance_to_voltage,
    ro_from_warmup,
    voltage_to_ppm,
    voltage_to_resistance,
)
from .config import (
    ChannelConfig,
    ServiceConfig,
    default_config,
    load_config,
    load_profile,
)
from .quality import (
    Category,
    Factor,
    GasQualityParams,
    QualityModelConfig,
    QualityScore,
    banana_quality_model,
    categorize,
    derive_exponent,
    gas_quality,
    humidity_quality,
    temp_quality,
    total_quality,
)
from .records import DerivedReading, TelemetryRecord
from .signal_metrics import (
    SignalReport,
    SignalSeries,
    fit_baseline,
    lag1_autocorr,
    rolling_std,
    signal_report,
    snr,
)
from .simulator import GasRamp, RipeningProfile, banana_preset, generate_trace, replay
from .store import Batch, IngestionStore

__version__ = "0.1.0"

__all__ = [
    "Batch",
    "Category",
    "ChannelConfig",
    "DETECTION_RANGE_PPM",
    "DerivedReading",
    "Factor",
    "Gas",
    "GasQualityParams",
    "GasRamp",
    "IngestionStore",
    "PowerLawCurve",
    "QualityModelConfig",
    "QualityScore",
    "RatioPoint",
    "RipeningProfile",
    "SensorChannel",
    "ServiceConfig",
    "SignalReport",
    "SignalSeries",
    "TelemetryRecord",
    "banana_preset",
    "banana_quality_model",
    "categorize",
    "default_config",
    "derive_exponent",
    "fit_baseline",
    "fit_power_law",
    "gas_quality",
    "generate_trace",
    "humidity_quality",
    "lag1_autocorr",
    "load_config",
    "load_profile",
    "normalize_per_kg",
    "ppm_to_voltage",
    "ratio_to_ppm",
    "replay",
    "resistance_to_voltage",
    "ro_from_warmup",
    "rolling_std",
    "signal_report",
    "snr",
    "temp_quality",
    "total_quality",
    "voltage_to_ppm",
    "voltage_to_resistance",
    "__version__",
]
