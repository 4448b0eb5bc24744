"""Exception hierarchy shared across the package."""


class FaceliftError(Exception):
    """Base class for all errors raised by this package."""


class ConfigurationError(FaceliftError):
    """Invalid configuration value or mode for the requested operation."""


class InputError(FaceliftError):
    """Operand violates an input contract (shape, resolution, range)."""


class DegenerateInputError(InputError):
    """Input is structurally unusable (e.g. downsampling factor exceeds size)."""


class ScheduleError(FaceliftError):
    """Timestep outside the schedule or an invalid timestep pair."""


class OrderingError(ScheduleError):
    """Solver step requested with a non-decreasing timestep pair."""


class SingularityError(ScheduleError):
    """Inversion requested at a point where the schedule is singular."""


class StatisticalError(FaceliftError):
    """Not enough samples for the requested statistical procedure."""


class CheckpointError(FaceliftError):
    """Base class for checkpoint load/save failures."""


class CheckpointCorruptionError(CheckpointError):
    """Checkpoint bytes are truncated or fail the content checksum."""


class CheckpointVersionError(CheckpointError):
    """Checkpoint was written by an incompatible format version."""
