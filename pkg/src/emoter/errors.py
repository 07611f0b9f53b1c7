"""Exception types shared across the package.

Each class corresponds to one failure contract: callers can catch the
specific class, and the CLI maps them onto its exit codes.
"""

from __future__ import annotations


class EmoterError(Exception):
    """Base class for all package-specific errors."""


class ShapeError(EmoterError, ValueError):
    """Tensor or array dimensions violate an operation's contract."""


class ParameterError(EmoterError, ValueError):
    """A scalar argument (temperature, epsilon, bound, ...) is out of range."""


class NormalizationError(EmoterError, ValueError):
    """A vector expected to be (normalizable to) unit length is not."""


class InputError(EmoterError, ValueError):
    """Structured input (labels, candidate lists, batches) violates a precondition."""


class EvaluationError(EmoterError, RuntimeError):
    """A checked function produced a non-finite value."""


class GenerationError(EmoterError, ValueError):
    """Requested synthetic dataset cannot realize the class profile."""


class FormatError(EmoterError, ValueError):
    """A serialized container is malformed; carries the offending byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class TrainingError(EmoterError, RuntimeError):
    """Optimization diverged or received non-finite values; carries the step index."""

    def __init__(self, message: str, step: int | None = None):
        if step is not None:
            message = f"{message} (step {step})"
        super().__init__(message)
        self.step = step


class ConfigError(EmoterError, ValueError):
    """Run configuration is invalid or stage dependencies are unsatisfied."""
