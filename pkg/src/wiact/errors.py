"""Exception hierarchy shared across the package.

Plain argument mistakes (bad index, bad length, empty input where a value is
required) raise the builtin ``ValueError``/``IndexError``; the classes here
cover failures that callers may want to handle distinctly: file parsing,
missing data, and training breakdowns.
"""


class WiactError(Exception):
    """Base class for all package-specific errors."""


class ParseError(WiactError):
    """A file could not be decoded.

    Carries the offending location: ``offset`` (byte position, binary logs)
    or ``line`` (JSONL), plus the ``field`` that failed validation when known.
    """

    def __init__(self, message, *, path=None, offset=None, line=None, field=None):
        loc = []
        if path is not None:
            loc.append(str(path))
        if offset is not None:
            loc.append(f"byte {offset}")
        if line is not None:
            loc.append(f"line {line}")
        if field is not None:
            loc.append(f"field '{field}'")
        if loc:
            message = f"{message} ({', '.join(loc)})"
        super().__init__(message)
        self.path = path
        self.offset = offset
        self.line = line
        self.field = field


class CorruptRecordError(ParseError):
    """A record's declared sizes are internally inconsistent."""


class EmptyTraceError(ParseError):
    """A file yielded no usable frames."""


class InsufficientDataError(WiactError):
    """An operation needs more frames/samples than the input provides."""


class ConfigurationError(WiactError):
    """The input cannot support the requested configuration (e.g. one-antenna
    trace fed to the two-antenna phase-difference pipeline)."""


class TrainingError(WiactError):
    """Model fitting failed for a data-related reason (missing class, single
    class, too few samples)."""


class ConvergenceError(TrainingError):
    """The SVM solver hit its iteration cap before satisfying the KKT
    tolerance; ``residual`` is the final maximum KKT violation."""

    def __init__(self, message, residual):
        super().__init__(f"{message} (KKT residual {residual:.3e})")
        self.residual = residual


class CalibrationError(TrainingError):
    """Sigmoid probability fitting failed to converge; ``gradient_norm`` is
    the final infinity norm of the objective gradient."""

    def __init__(self, message, gradient_norm):
        super().__init__(f"{message} (gradient norm {gradient_norm:.3e})")
        self.gradient_norm = gradient_norm


class ModelFormatError(WiactError):
    """A serialized model bundle is unreadable, truncated, or has an
    unsupported format version."""
