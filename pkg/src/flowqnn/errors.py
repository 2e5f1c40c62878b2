"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: ConfigError -> 2, DataError (and
subclasses) -> 3, AllRunsUnsuccessful -> 4. Everything else is a bug.
"""


class FlowQnnError(Exception):
    """Base class for all package-specific errors."""


class CapacityError(FlowQnnError):
    """Register size outside the dense-simulation guard rails."""


class QubitIndexError(FlowQnnError, IndexError):
    """Qubit index outside the register."""


class ArgumentError(FlowQnnError, ValueError):
    """Invalid argument to an otherwise well-formed call."""


class WidthError(ArgumentError):
    """Feature vector does not fit the register / layer width."""


class NormalizationError(ArgumentError):
    """Vector cannot be normalized (zero norm)."""


class ShapeError(ArgumentError):
    """Array shape incompatible with the operation."""


class UsageError(FlowQnnError):
    """Operation called on an object whose contract forbids it."""


class TrainingError(FlowQnnError):
    """Non-finite loss or gradient encountered during optimization."""


class DataError(FlowQnnError):
    """Problem with input data (files, schema, splits)."""


class SchemaError(DataError):
    """CSV is missing a required column or has an unusable header."""


class ConfigError(FlowQnnError):
    """Invalid experiment configuration."""


class AllRunsUnsuccessful(FlowQnnError):
    """Every run of an experiment was unsuccessful (restarts exhausted)."""
