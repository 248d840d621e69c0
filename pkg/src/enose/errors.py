"""Exception types shared across the package.

Every failure mode that callers are expected to branch on gets its own
class so the HTTP layer and the CLI can map them to status codes without
string matching.
"""


class EnoseError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(EnoseError):
    """Service or profile configuration is invalid."""


# --- calibration ---------------------------------------------------------

class OutOfRangeVoltageError(EnoseError):
    """Sensor output voltage at or beyond the supply rails (shorted or
    disconnected sensor)."""


class InvalidRatioError(EnoseError):
    """Rs/Ro ratio must be strictly positive."""


class DegenerateFitError(EnoseError):
    """Not enough distinct ratio points to fit a sensitivity curve."""


class InvalidPointError(EnoseError):
    """Calibration anchor point with a non-positive coordinate."""


class InvalidWeightError(EnoseError):
    """Specimen weight must be strictly positive."""


# --- quality engine ------------------------------------------------------

class InvalidThresholdError(EnoseError):
    """Ripe/decomposed thresholds out of order or non-positive."""


class InvalidConcentrationError(EnoseError):
    """Negative gas concentration."""


class InvalidReadingError(EnoseError):
    """Environmental reading outside its physical domain."""


class InvalidWeightsError(EnoseError):
    """Factor weights that do not sum to 1, or factor set mismatch."""


class InvalidScoreError(EnoseError):
    """Quality score outside [0, 1]."""


# --- signal metrics ------------------------------------------------------

class UnderdeterminedFitError(EnoseError):
    """Series too short for the requested polynomial degree."""


class NoiselessSignalError(EnoseError):
    """Residual has zero variance; SNR is not computable."""


class SeriesTooShortError(EnoseError):
    """Series shorter than required by the operation."""

    def __init__(self, message: str, required: int = 0):
        super().__init__(message)
        self.required = required


class ConstantSeriesError(EnoseError):
    """Series has zero variance; autocorrelation is not computable."""


# --- simulator -----------------------------------------------------------

class UnencodableProfileError(EnoseError):
    """Profile concentration cannot be represented by any voltage in
    (0, Vcc) through the configured sensitivity curve."""


class ReplayAbortedError(EnoseError):
    """Sink rejected a record during replay."""

    def __init__(self, index: int, cause: Exception | None = None):
        super().__init__(f"replay aborted at record {index}: {cause}")
        self.index = index
        self.cause = cause


# --- ingestion store -----------------------------------------------------

class BatchConflictError(EnoseError):
    """Batch id already registered."""


class UnknownBatchError(EnoseError):
    """Batch id not registered."""


class InvalidReferenceError(EnoseError):
    """Batch references a quality or calibration config that does not exist."""


class StaleRecordError(EnoseError):
    """Telemetry timestamp older than the newest stored record."""
