"""Service and profile configuration.

Config files are YAML; every key name used here is documented in the
README. Built-in defaults reproduce the banana setup: Vcc 5 V, RL 10 k,
datasheet anchor points for the three MQ curves, published thresholds,
tolerances and factor weights.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

import yaml

from .calibration import (
    CHANNEL_FOR_GAS,
    DETECTION_RANGE_PPM,
    Gas,
    PowerLawCurve,
    RatioPoint,
    SensorChannel,
    fit_power_law,
)
from .errors import ConfigError
from .quality import (
    EnvQualityParams,
    Factor,
    GasQualityParams,
    QualityModelConfig,
)
from .simulator import DEFAULT_START_EPOCH, GasRamp, RipeningProfile

#: Anchor points (Rs/Ro, ppm) read off the datasheet sensitivity figures.
DATASHEET_ANCHORS: dict[Gas, list[tuple[float, float]]] = {
    Gas.ETHANOL: [(4.0, 25.0), (2.2, 60.0), (1.2, 150.0), (0.8, 300.0), (0.6, 500.0)],
    Gas.METHANE: [(4.5, 300.0), (2.6, 1000.0), (1.5, 3000.0), (0.8, 10000.0)],
    Gas.AMMONIA: [(2.6, 10.0), (1.6, 40.0), (1.0, 120.0), (0.7, 300.0), (0.42, 1000.0)],
}

#: Default clean-air resistances; board-specific, set per deployment.
DEFAULT_RO_OHMS: dict[Gas, float] = {
    Gas.ETHANOL: 20_000.0,
    Gas.METHANE: 8_000.0,
    Gas.AMMONIA: 15_000.0,
}

DEFAULT_RL_OHMS = 10_000.0  # typical module load resistor
DEFAULT_VCC = 5.0


@dataclass(frozen=True)
class ChannelConfig:
    """Calibration block for one sensor channel.

    Exactly one of ro_ohms / ro_warmup_samples must be given; the latter
    defers Ro to the mean Rs over the first N samples of a batch,
    assumed to be recorded in clean air.
    """

    channel_id: str
    gas: Gas
    load_resistance_ohms: float
    supply_voltage_v: float
    detection_range_ppm: tuple[float, float]
    ro_ohms: float | None = None
    ro_warmup_samples: int | None = None
    anchor_points: tuple[tuple[float, float], ...] = ()
    curve: PowerLawCurve | None = None

    def __post_init__(self):
        if (self.ro_ohms is None) == (self.ro_warmup_samples is None):
            raise ConfigError(
                f"{self.channel_id}: exactly one of ro_ohms / ro_warmup_samples required"
            )
        if self.ro_warmup_samples is not None and self.ro_warmup_samples < 1:
            raise ConfigError(f"{self.channel_id}: ro_warmup_samples must be >= 1")
        if self.curve is None and len(self.anchor_points) < 2:
            raise ConfigError(
                f"{self.channel_id}: give either curve constants or >= 2 anchor points"
            )

    def fitted_curve(self) -> PowerLawCurve:
        if self.curve is not None:
            return self.curve
        points = [RatioPoint(r, p) for r, p in self.anchor_points]
        return fit_power_law(points)

    def resolve(self, ro_ohms: float | None = None) -> SensorChannel:
        """Materialize the channel; ro_ohms overrides for warm-up mode."""
        ro = self.ro_ohms if ro_ohms is None else ro_ohms
        if ro is None:
            raise ConfigError(f"{self.channel_id}: Ro not yet calibrated (warm-up pending)")
        return SensorChannel(
            channel_id=self.channel_id,
            gas=self.gas,
            load_resistance=self.load_resistance_ohms,
            supply_voltage=self.supply_voltage_v,
            clean_air_resistance=ro,
            detection_range=self.detection_range_ppm,
            curve=self.fitted_curve(),
        )

    def as_dict(self) -> dict:
        out: dict = {
            "gas": self.gas.value,
            "load_resistance_ohms": self.load_resistance_ohms,
            "supply_voltage_v": self.supply_voltage_v,
            "detection_range_ppm": list(self.detection_range_ppm),
        }
        if self.ro_ohms is not None:
            out["ro_ohms"] = self.ro_ohms
        if self.ro_warmup_samples is not None:
            out["ro_warmup_samples"] = self.ro_warmup_samples
        if self.curve is not None:
            out["curve"] = {"coefficient_a": self.curve.coefficient,
                            "exponent_b": self.curve.exponent}
        if self.anchor_points:
            out["anchor_points"] = [list(p) for p in self.anchor_points]
        return out


@dataclass(frozen=True)
class ServiceConfig:
    listen_host: str = "127.0.0.1"
    listen_port: int = 8000
    data_dir: Path = Path("data")
    default_locale: str = "en"
    baseline_degree: int = 3
    rolling_window: int = 120
    channels: dict[str, ChannelConfig] = field(default_factory=dict)
    quality_models: dict[str, QualityModelConfig] = field(default_factory=dict)

    def __post_init__(self):
        if self.baseline_degree < 1:
            raise ConfigError("signal.baseline_degree must be >= 1")
        if self.rolling_window < 2:
            raise ConfigError("signal.rolling_window must be >= 2")
        if self.default_locale not in ("en", "bn"):
            raise ConfigError(f"unknown default_locale {self.default_locale!r}")
        gases = [c.gas for c in self.channels.values()]
        if sorted(g.value for g in gases) != sorted(g.value for g in Gas):
            raise ConfigError("calibration must define exactly one channel per gas")
        # surface bad anchor sets at startup, not first use
        for c in self.channels.values():
            c.fitted_curve()

    def channel_for_gas(self, gas: Gas) -> ChannelConfig:
        for c in self.channels.values():
            if c.gas == gas:
                return c
        raise ConfigError(f"no channel for {gas.value}")

    def as_dict(self) -> dict:
        return {
            "listen": f"{self.listen_host}:{self.listen_port}",
            "data_dir": str(self.data_dir),
            "default_locale": self.default_locale,
            "signal": {"baseline_degree": self.baseline_degree,
                       "rolling_window": self.rolling_window},
            "calibration": {cid: c.as_dict() for cid, c in sorted(self.channels.items())},
            "quality": {name: _quality_model_dict(m)
                        for name, m in sorted(self.quality_models.items())},
        }

    def checksum(self) -> str:
        canon = json.dumps(self.as_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canon.encode()).hexdigest()


def _quality_model_dict(model: QualityModelConfig) -> dict:
    env = model.env_params
    return {
        "gas_thresholds_ppm_per_kg": {
            gas.value: {"ripe": p.ripe_threshold, "decomposed": p.decomposed_threshold}
            for gas, p in sorted(model.gas_params.items(), key=lambda kv: kv[0].value)
        },
        "environment": {
            "temp_ideal_c": [env.temp_min, env.temp_max],
            "temp_tolerance_c": {"below": env.temp_tol_below, "above": env.temp_tol_above},
            "rh_ideal_pct": [env.rh_min, env.rh_max],
            "rh_tolerance_pct": {"below": env.rh_tol_below, "above": env.rh_tol_above},
        },
        "weights": {f.value: w for f, w in sorted(model.weights.items(),
                                                  key=lambda kv: kv[0].value)},
    }


def default_channels() -> dict[str, ChannelConfig]:
    out = {}
    for gas in Gas:
        cid = CHANNEL_FOR_GAS[gas]
        out[cid] = ChannelConfig(
            channel_id=cid,
            gas=gas,
            load_resistance_ohms=DEFAULT_RL_OHMS,
            supply_voltage_v=DEFAULT_VCC,
            detection_range_ppm=DETECTION_RANGE_PPM[gas],
            ro_ohms=DEFAULT_RO_OHMS[gas],
            anchor_points=tuple(DATASHEET_ANCHORS[gas]),
        )
    return out


def default_config(data_dir: Path | str = "data") -> ServiceConfig:
    from .quality import banana_quality_model

    return ServiceConfig(
        data_dir=Path(data_dir),
        channels=default_channels(),
        quality_models={"banana": banana_quality_model()},
    )


# --- YAML loading ----------------------------------------------------------

def _require(obj: Mapping, key: str, context: str):
    if key not in obj:
        raise ConfigError(f"{context}: missing key {key!r}")
    return obj[key]


def _parse_channel(cid: str, block: Mapping) -> ChannelConfig:
    try:
        gas = Gas(_require(block, "gas", f"calibration.{cid}"))
    except ValueError as e:
        raise ConfigError(f"calibration.{cid}: {e}") from e
    rng = _require(block, "detection_range_ppm", f"calibration.{cid}")
    curve = None
    if "curve" in block:
        c = block["curve"]
        try:
            curve = PowerLawCurve(float(c["coefficient_a"]), float(c["exponent_b"]))
        except (KeyError, ValueError) as e:
            raise ConfigError(f"calibration.{cid}.curve: {e}") from e
    anchors = tuple((float(r), float(p)) for r, p in block.get("anchor_points", ()))
    return ChannelConfig(
        channel_id=cid,
        gas=gas,
        load_resistance_ohms=float(block.get("load_resistance_ohms", DEFAULT_RL_OHMS)),
        supply_voltage_v=float(block.get("supply_voltage_v", DEFAULT_VCC)),
        detection_range_ppm=(float(rng[0]), float(rng[1])),
        ro_ohms=float(block["ro_ohms"]) if "ro_ohms" in block else None,
        ro_warmup_samples=int(block["ro_warmup_samples"]) if "ro_warmup_samples" in block else None,
        anchor_points=anchors,
        curve=curve,
    )


def _parse_quality_model(name: str, block: Mapping) -> QualityModelConfig:
    ctx = f"quality.{name}"
    thresholds = _require(block, "gas_thresholds_ppm_per_kg", ctx)
    gas_params: dict[Gas, GasQualityParams] = {}
    for gas_name, pair in thresholds.items():
        gas = Gas(gas_name)
        gas_params[gas] = GasQualityParams.from_thresholds(
            gas, float(pair["ripe"]), float(pair["decomposed"])
        )
    env = _require(block, "environment", ctx)
    env_params = EnvQualityParams(
        temp_min=float(env["temp_ideal_c"][0]),
        temp_max=float(env["temp_ideal_c"][1]),
        temp_tol_below=float(env["temp_tolerance_c"]["below"]),
        temp_tol_above=float(env["temp_tolerance_c"]["above"]),
        rh_min=float(env["rh_ideal_pct"][0]),
        rh_max=float(env["rh_ideal_pct"][1]),
        rh_tol_below=float(env["rh_tolerance_pct"]["below"]),
        rh_tol_above=float(env["rh_tolerance_pct"]["above"]),
    )
    weights = {Factor(k): float(v) for k, v in _require(block, "weights", ctx).items()}
    return QualityModelConfig(fruit=name, gas_params=gas_params,
                              env_params=env_params, weights=weights)


def load_config(path: Path | str | None = None) -> ServiceConfig:
    """Load a service config; None gives the built-in banana defaults."""
    if path is None:
        return default_config()
    try:
        raw = yaml.safe_load(Path(path).read_text())
    except FileNotFoundError as e:
        raise ConfigError(f"config file not found: {path}") from e
    except yaml.YAMLError as e:
        raise ConfigError(f"config file is not valid YAML: {e}") from e
    if not isinstance(raw, dict):
        raise ConfigError("config root must be a mapping")

    listen = str(raw.get("listen", "127.0.0.1:8000"))
    host, _, port = listen.rpartition(":")
    if not host or not port.isdigit():
        raise ConfigError(f"listen must look like host:port, got {listen!r}")
    signal = raw.get("signal", {})

    channels = {str(cid): _parse_channel(str(cid), block)
                for cid, block in raw.get("calibration", {}).items()}
    if not channels:
        channels = default_channels()
    from .quality import banana_quality_model
    models = {str(name): _parse_quality_model(str(name), block)
              for name, block in raw.get("quality", {}).items()}
    if not models:
        models = {"banana": banana_quality_model()}

    try:
        return ServiceConfig(
            listen_host=host,
            listen_port=int(port),
            data_dir=Path(str(raw.get("data_dir", "data"))),
            default_locale=str(raw.get("default_locale", "en")),
            baseline_degree=int(signal.get("baseline_degree", 3)),
            rolling_window=int(signal.get("rolling_window", 120)),
            channels=channels,
            quality_models=models,
        )
    except (TypeError, ValueError) as e:
        raise ConfigError(str(e)) from e


def dump_config_yaml(config: ServiceConfig) -> str:
    """Render a config as YAML; round-trips through load_config."""
    return yaml.safe_dump(config.as_dict(), sort_keys=False)


# --- simulator profiles ----------------------------------------------------

def _parse_ramp(gas: Gas, block: Mapping) -> GasRamp:
    ctx = f"gases.{gas.value}"
    try:
        return GasRamp(
            initial_ppm=float(_require(block, "initial_ppm", ctx)),
            plateau_ppm=float(_require(block, "plateau_ppm", ctx)),
            growth_rate=float(_require(block, "growth_rate_per_hour", ctx)),
            midpoint_hours=float(_require(block, "midpoint_hours", ctx)),
            surge_ppm=float(block.get("surge_ppm", 0.0)),
            surge_rate=float(block.get("surge_rate_per_hour", 0.0)),
            surge_midpoint_hours=float(block.get("surge_midpoint_hours", 0.0)),
        )
    except ValueError as e:
        raise ConfigError(f"{ctx}: {e}") from e


def load_profile(path: Path | str) -> RipeningProfile:
    """Load a simulator profile from YAML."""
    try:
        raw = yaml.safe_load(Path(path).read_text())
    except FileNotFoundError as e:
        raise ConfigError(f"profile file not found: {path}") from e
    except yaml.YAMLError as e:
        raise ConfigError(f"profile file is not valid YAML: {e}") from e
    if not isinstance(raw, dict):
        raise ConfigError("profile root must be a mapping")
    env = raw.get("environment", {})
    noise = raw.get("noise", {})
    gases = _require(raw, "gases", "profile")
    try:
        return RipeningProfile(
            fruit=str(raw.get("fruit", "banana")),
            weight_kg=float(_require(raw, "weight_kg", "profile")),
            gases={gas: _parse_ramp(gas, _require(gases, gas.value, "gases")) for gas in Gas},
            mean_temp_c=float(env.get("mean_temp_c", 25.0)),
            mean_rh_pct=float(env.get("mean_rh_pct", 80.0)),
            duration_hours=float(_require(raw, "duration_hours", "profile")),
            interval_seconds=float(raw.get("interval_seconds", 60.0)),
            voltage_noise_std=float(noise.get("voltage_std_v", 0.0)),
            env_noise_std=float(noise.get("env_std", 0.0)),
            seed=int(raw.get("seed", 0)),
            start_epoch=int(raw.get("start_epoch", DEFAULT_START_EPOCH)),
        )
    except ValueError as e:
        raise ConfigError(str(e)) from e


def dump_profile_yaml(profile: RipeningProfile) -> str:
    gases = {}
    for gas, ramp in sorted(profile.gases.items(), key=lambda kv: kv[0].value):
        block = {
            "initial_ppm": ramp.initial_ppm,
            "plateau_ppm": ramp.plateau_ppm,
            "growth_rate_per_hour": ramp.growth_rate,
            "midpoint_hours": ramp.midpoint_hours,
        }
        if ramp.surge_ppm > 0:
            block.update({
                "surge_ppm": ramp.surge_ppm,
                "surge_rate_per_hour": ramp.surge_rate,
                "surge_midpoint_hours": ramp.surge_midpoint_hours,
            })
        gases[gas.value] = block
    return yaml.safe_dump({
        "fruit": profile.fruit,
        "weight_kg": profile.weight_kg,
        "duration_hours": profile.duration_hours,
        "interval_seconds": profile.interval_seconds,
        "seed": profile.seed,
        "start_epoch": profile.start_epoch,
        "environment": {"mean_temp_c": profile.mean_temp_c,
                        "mean_rh_pct": profile.mean_rh_pct},
        "noise": {"voltage_std_v": profile.voltage_noise_std,
                  "env_std": profile.env_noise_std},
        "gases": gases,
    }, sort_keys=False)


_CONFIGS_DIR = Path(__file__).with_name("configs")


def banana_yaml_path() -> Path:
    """Path to the shipped service config sample (mirrors the defaults)."""
    return _CONFIGS_DIR / "banana.yaml"


def banana_profile_path() -> Path:
    """Path to the shipped banana ripening profile sample."""
    return _CONFIGS_DIR / "banana_profile.yaml"
