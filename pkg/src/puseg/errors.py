"""Exception types shared across the toolkit."""


class PusegError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(PusegError):
    """Invalid configuration value or combination."""


class MissingAnnotation(PusegError):
    """A sample that requires ground truth does not have it."""


class SplitError(PusegError):
    """Dataset split parameters are inconsistent with the data."""


class PriorError(PusegError):
    """Class-prior counts are degenerate (some count is zero)."""


class DivergenceError(PusegError):
    """Training produced a non-finite loss value."""

    def __init__(self, message: str, epoch: int | None = None):
        super().__init__(message)
        self.epoch = epoch


class ShapeError(PusegError):
    """Array shapes do not match the operation's contract."""


class ComparisonError(PusegError):
    """Method-comparison inputs are empty or inconsistent."""


class StageError(PusegError):
    """A pipeline stage failed; carries the stage name."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"stage '{stage}' failed: {message}")
        self.stage = stage
