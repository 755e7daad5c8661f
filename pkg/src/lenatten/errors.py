"""Exception taxonomy shared across the package.

The CLI maps these onto process exit codes: config/usage problems exit 1,
data problems exit 2, numeric failures exit 3.
"""


class ShapeError(ValueError):
    """Operand shapes are incompatible for the requested operation."""


class ConfigError(ValueError):
    """A configuration value or combination is invalid."""


class DataError(ValueError):
    """Input data is malformed, missing, or inconsistent."""


class CheckpointError(DataError):
    """A checkpoint file is corrupt, truncated, or incompatible."""


class NumericError(RuntimeError):
    """A non-finite value appeared where the computation requires finiteness."""
