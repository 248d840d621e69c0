"""HTTP service over the ingestion store.

All endpoints exchange JSON. Telemetry bodies use the same line format
the simulator emits, so a trace file can be replayed against POST
/telemetry without translation. Read endpoints never mutate state and
POST /telemetry is idempotent for byte-identical payloads.
"""

from __future__ import annotations

import os
import uuid
from pathlib import Path

from fastapi import Body, FastAPI, Query, Response
from fastapi.responses import JSONResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles

from . import i18n
from .config import ServiceConfig
from .errors import (
    BatchConflictError,
    InvalidReferenceError,
    InvalidWeightError,
    StaleRecordError,
    UnknownBatchError,
)
from .records import TelemetryRecord
from .signal_metrics import signal_report
from .store import Batch, IngestionStore

#: Upper bound on history points per response, regardless of max_points.
HISTORY_POINT_CAP = 5000


def _error(status: int, message: str, **extra) -> JSONResponse:
    return JSONResponse(status_code=status, content={"detail": message, **extra})


def _active_sensors(reading) -> int:
    # 3 gas channels plus the combined temperature/humidity sensor
    return (3 - len(reading.faulted)) + 1


def create_app(config: ServiceConfig, store: IngestionStore | None = None,
               static_dir: str | os.PathLike | None = None) -> FastAPI:
    store = store if store is not None else IngestionStore(config)
    app = FastAPI(title="enose", docs_url=None, redoc_url=None)
    app.state.store = store
    app.state.config = config

    @app.post("/batches", status_code=201)
    def register_batch(body: dict = Body(...)):
        try:
            batch = Batch(
                batch_id=str(body["batch_id"]),
                fruit=str(body["fruit"]),
                weight_kg=float(body["weight_kg"]),
                started_at=int(body["started_at"]),
                quality_config_id=str(body["quality_config_id"]),
                calibration_id=str(body.get("calibration_id", "default")),
            )
        except (KeyError, TypeError, ValueError) as e:
            return _error(422, f"malformed batch: {e}")
        try:
            batch_id = store.register_batch(batch)
        except BatchConflictError as e:
            return _error(409, str(e))
        except (InvalidWeightError, InvalidReferenceError, ValueError) as e:
            return _error(422, str(e))
        return {"batch_id": batch_id}

    @app.post("/telemetry")
    def ingest_telemetry(body: dict = Body(...)):
        try:
            record = TelemetryRecord.from_wire(body)
        except ValueError as e:
            return _error(422, str(e))
        try:
            reading = store.ingest(record)
        except UnknownBatchError as e:
            return _error(404, str(e))
        except StaleRecordError as e:
            return _error(409, str(e))
        return reading.as_dict()

    @app.get("/batches")
    def list_batches():
        return {"batches": [b.as_dict() for b in store.list_batches()]}

    @app.get("/batches/{batch_id}/latest")
    def latest(batch_id: str):
        try:
            reading = store.latest(batch_id)
        except UnknownBatchError as e:
            return _error(404, str(e))
        if reading is None:
            return Response(status_code=204)
        batch = store.get_batch(batch_id)
        return {
            "reading": reading.as_dict(),
            "active_sensors": _active_sensors(reading),
            "weight_kg": batch.weight_kg,
            "fruit": batch.fruit,
        }

    @app.get("/batches/{batch_id}/history")
    def history(batch_id: str,
                ts_from: int | None = Query(None, alias="from"),
                ts_to: int | None = Query(None, alias="to"),
                max_points: int | None = Query(None, ge=1)):
        capped = HISTORY_POINT_CAP if max_points is None else min(max_points, HISTORY_POINT_CAP)
        try:
            readings = store.query_history(batch_id, ts_from, ts_to, capped)
        except UnknownBatchError as e:
            return _error(404, str(e))
        return {
            "batch_id": batch_id,
            "count": len(readings),
            "points": [r.as_dict() for r in readings],
        }

    @app.get("/batches/{batch_id}/signal-report")
    def batch_signal_report(batch_id: str):
        try:
            raw_count = len(store.raw_records(batch_id))
        except UnknownBatchError as e:
            return _error(404, str(e))
        required = max(config.rolling_window, config.baseline_degree + 1, 3)
        if raw_count < required:
            return _error(409, f"need {required} samples per channel, have {raw_count}",
                          required=required, got=raw_count)
        reports = [
            signal_report(series, config.baseline_degree, config.rolling_window).as_dict()
            for _, series in sorted(store.signal_series(batch_id).items())
        ]
        return {"batch_id": batch_id, "reports": reports}

    @app.get("/batches/{batch_id}/export.csv")
    def export_csv(batch_id: str):
        try:
            document = store.export_csv(batch_id)
        except UnknownBatchError as e:
            return _error(404, str(e))
        return PlainTextResponse(document, media_type="text/csv")

    @app.get("/i18n/{locale}")
    def locale_bundle(locale: str):
        if locale not in i18n.SUPPORTED_LOCALES:
            return _error(404, f"unsupported locale {locale!r}")
        return {"locale": locale, "strings": i18n.bundle(locale)}

    @app.get("/health")
    def health():
        writable = _probe_writable(Path(config.data_dir))
        payload = {
            "status": "ok" if writable else "degraded",
            "data_dir_writable": writable,
            "config_checksum": config.checksum(),
            "batches": len(store.list_batches()),
        }
        if not writable:
            return JSONResponse(status_code=503, content=payload)
        return payload

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="dashboard")

    return app


def _probe_writable(data_dir: Path) -> bool:
    probe = data_dir / f".probe-{uuid.uuid4().hex}"
    try:
        probe.write_bytes(b"")
        probe.unlink()
        return True
    except OSError:
        return False
