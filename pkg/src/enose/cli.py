"""Command-line entry points.

Subcommands:
    serve      run the HTTP service
    simulate   generate a synthetic trace to a file or a running service
    analyze    summarize an exported CSV, optionally with a signal report
    export     dump a stored batch as CSV

Config resolution order: --config flag, then the ENOSE_CONFIG env var,
then built-in defaults. Exit codes: 0 ok, 1 invalid config or input,
2 data directory unavailable.
"""

from __future__ import annotations

import argparse
import dataclasses
import os
import sys
from pathlib import Path

import numpy as np

from .calibration import Gas, SensorChannel
from .config import ServiceConfig, default_config, load_config, load_profile
from .errors import ConfigError, EnoseError, ReplayAbortedError
from .signal_metrics import (
    DEFAULT_BASELINE_DEGREE,
    DEFAULT_ROLLING_WINDOW,
    SignalSeries,
    render_report_table,
    signal_report,
)
from .simulator import RipeningProfile, banana_preset, generate_trace, replay
from .store import IngestionStore, parse_csv_export

CONFIG_ENV_VAR = "ENOSE_CONFIG"

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_DATA_DIR = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="enose",
                                     description="e-nose telemetry and fruit quality service")
    parser.add_argument("--config", type=Path, default=None,
                        help=f"service config file (default: ${CONFIG_ENV_VAR} or built-ins)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default=None, help="bind address (overrides config)")
    p.add_argument("--port", type=int, default=None, help="bind port (overrides config)")
    p.add_argument("--static-dir", type=Path, default=None,
                   help="serve a built dashboard from this directory")

    p = sub.add_parser("simulate", help="generate synthetic telemetry")
    p.add_argument("--profile", type=Path, default=None, help="ripening profile file")
    p.add_argument("--preset", choices=["banana"], default=None,
                   help="built-in profile (default when --profile absent)")
    p.add_argument("--out", default="-",
                   help="output: '-' for stdout, a file path, or a service base URL")
    p.add_argument("--speedup", default="inf",
                   help="replay speed multiplier; 'inf' streams without pacing")
    p.add_argument("--seed", type=int, default=None, help="override the profile RNG seed")
    p.add_argument("--batch", default=None, help="batch id stamped on the records")
    p.add_argument("--no-register", action="store_true",
                   help="when posting to a URL, skip batch registration")

    p = sub.add_parser("analyze", help="summarize an exported CSV")
    p.add_argument("csv", type=Path)
    p.add_argument("--report", action="store_true", help="include per-channel signal report")
    p.add_argument("--degree", type=int, default=DEFAULT_BASELINE_DEGREE)
    p.add_argument("--window", type=int, default=DEFAULT_ROLLING_WINDOW)

    p = sub.add_parser("export", help="dump a batch as CSV")
    p.add_argument("batch_id")
    p.add_argument("--out", "-o", default="-", help="output file ('-' for stdout)")

    return parser


def _load_config(path: Path | None) -> ServiceConfig:
    if path is None:
        env = os.environ.get(CONFIG_ENV_VAR)
        path = Path(env) if env else None
    return load_config(path) if path is not None else default_config()


def _open_store(config: ServiceConfig) -> IngestionStore:
    try:
        store = IngestionStore(config)
    except OSError as e:
        raise _DataDirError(f"data directory unavailable: {e}") from e
    probe = Path(config.data_dir) / ".probe"
    try:
        probe.write_bytes(b"")
        probe.unlink()
    except OSError as e:
        raise _DataDirError(f"data directory not writable: {e}") from e
    return store


class _DataDirError(EnoseError):
    pass


def _cmd_serve(args, config: ServiceConfig) -> int:
    import uvicorn

    from .api import create_app

    store = _open_store(config)
    app = create_app(config, store, static_dir=args.static_dir)
    host = args.host if args.host is not None else config.listen_host
    port = args.port if args.port is not None else config.listen_port
    uvicorn.run(app, host=host, port=port, log_level="info")
    return EXIT_OK


def _resolve_profile(args) -> RipeningProfile:
    if args.profile is not None and args.preset is not None:
        raise ConfigError("give either --profile or --preset, not both")
    if args.profile is not None:
        profile = load_profile(args.profile)
    else:
        profile = banana_preset()
    if args.seed is not None:
        profile = dataclasses.replace(profile, seed=args.seed)
    return profile


def _sim_channels(config: ServiceConfig) -> dict[Gas, SensorChannel]:
    channels: dict[Gas, SensorChannel] = {}
    for cc in config.channels.values():
        if cc.ro_ohms is None:
            raise ConfigError(
                f"{cc.channel_id}: simulation needs an explicit ro_ohms "
                "(warm-up calibration has no Ro to encode against)"
            )
        channels[cc.gas] = cc.resolve()
    return channels


def _cmd_simulate(args, config: ServiceConfig) -> int:
    profile = _resolve_profile(args)
    channels = _sim_channels(config)
    batch_id = args.batch or f"{profile.fruit}-{profile.seed}"
    trace = generate_trace(profile, channels, batch_id=batch_id)
    speedup = float(args.speedup)
    if not (speedup > 0):
        raise ConfigError(f"--speedup must be > 0, got {args.speedup}")

    if args.out.startswith(("http://", "https://")):
        return _simulate_to_url(args, profile, trace, batch_id, speedup)

    if args.out == "-":
        for record in trace:
            sys.stdout.write(record.to_json_line() + "\n")
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            for record in trace:
                fh.write(record.to_json_line() + "\n")
        print(f"wrote {len(trace)} records to {args.out}", file=sys.stderr)
    return EXIT_OK


def _simulate_to_url(args, profile: RipeningProfile, trace, batch_id: str,
                     speedup: float) -> int:
    import httpx

    base = args.out.rstrip("/")
    with httpx.Client(base_url=base, timeout=30.0) as client:
        if not args.no_register:
            resp = client.post("/batches", json={
                "batch_id": batch_id,
                "fruit": profile.fruit,
                "weight_kg": profile.weight_kg,
                "started_at": trace[0].timestamp,
                "quality_config_id": profile.fruit,
            })
            if resp.status_code not in (201, 409):  # 409: already registered
                print(f"batch registration failed: {resp.status_code} {resp.text}",
                      file=sys.stderr)
                return EXIT_CONFIG

        def post(record):
            r = client.post("/telemetry", json=record.to_wire())
            if r.status_code != 200:
                raise EnoseError(f"ingest failed: {r.status_code} {r.text}")

        try:
            delivered = replay(trace, post, speedup=speedup)
        except ReplayAbortedError as e:
            print(f"replay aborted at record {e.index}: {e.cause}", file=sys.stderr)
            return EXIT_CONFIG
    print(f"delivered {delivered} records to {base}", file=sys.stderr)
    return EXIT_OK


def _cmd_analyze(args, config: ServiceConfig) -> int:
    try:
        text = args.csv.read_text(encoding="utf-8")
    except OSError as e:
        print(f"cannot read {args.csv}: {e}", file=sys.stderr)
        return EXIT_CONFIG
    rows = parse_csv_export(text)
    if not rows:
        print("empty export: no data rows")
        return EXIT_OK

    first, last = rows[0], rows[-1]
    span_h = (last["ts"] - first["ts"]) / 3600.0
    print(f"records:   {len(rows)}")
    print(f"span:      {span_h:.2f} h ({first['ts']} .. {last['ts']})")
    if last.get("q_total") is not None:
        print(f"q_total:   {last['q_total']:.4f} ({last.get('category', '')})")

    if args.report:
        channel_ids = sorted(k[2:] for k in rows[0] if k.startswith("v_"))
        reports = []
        for cid in channel_ids:
            series = SignalSeries(
                channel_id=cid,
                timestamps=np.array([r["ts"] for r in rows], dtype=np.int64),
                values=np.array([r[f"v_{cid}"] for r in rows], dtype=np.float64),
            )
            reports.append(signal_report(series, args.degree, args.window))
        print()
        print(render_report_table(reports))
    return EXIT_OK


def _cmd_export(args, config: ServiceConfig) -> int:
    store = _open_store(config)
    document = store.export_csv(args.batch_id)
    if args.out == "-":
        sys.stdout.write(document)
    else:
        Path(args.out).write_text(document, encoding="utf-8")
        print(f"wrote {args.out}", file=sys.stderr)
    return EXIT_OK


_COMMANDS = {
    "serve": _cmd_serve,
    "simulate": _cmd_simulate,
    "analyze": _cmd_analyze,
    "export": _cmd_export,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = _load_config(args.config)
    except ConfigError as e:
        print(f"config error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        return _COMMANDS[args.command](args, config)
    except _DataDirError as e:
        print(str(e), file=sys.stderr)
        return EXIT_DATA_DIR
    except (ConfigError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except EnoseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
