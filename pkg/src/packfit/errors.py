"""Exception types shared across the package."""


class PackfitError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(PackfitError):
    """Input data violates a documented contract.

    ``violations`` holds structured records ({code, path, message}) when the
    error aggregates several findings, e.g. from project validation.
    """

    def __init__(self, message, violations=None):
        super().__init__(message)
        self.violations = list(violations or [])


class NotFoundError(PackfitError):
    """A referenced entity (requirement, candidate, matrix, ...) does not exist."""


class DegenerateWeightsError(PackfitError):
    """An edit or derivation produced weights that cannot be normalized."""


class ConsistencyError(PackfitError):
    """A judgment matrix admits no numerical scale.

    Carries the :class:`~packfit.macbeth.ConsistencyReport` that explains
    which judgments conflict.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class StateError(PackfitError):
    """An operation was invoked in a state it does not support."""


class SizeLimitError(PackfitError):
    """An instance exceeds the size limit of an exhaustive algorithm."""


class SchemaVersionError(PackfitError):
    """A stored project declares a schema version this build cannot read."""


class VersionConflictError(PackfitError):
    """An optimistic-concurrency update carried a stale version counter."""


class PreconditionError(PackfitError):
    """A derived result was requested before its inputs exist."""
