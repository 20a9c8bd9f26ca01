from __future__ import annotations


class PhenyleneError(ValueError):
    """Base class for input and range errors raised by this package."""


class GraphInputError(PhenyleneError):
    pass


class InvalidTreeError(PhenyleneError):
    def __init__(self, violations: list[str]):
        self.violations = violations
        super().__init__("; ".join(violations))


class SlotError(PhenyleneError):
    pass


class NotAChainError(PhenyleneError):
    pass


class RangeError(PhenyleneError):
    pass


class ResourceBoundError(PhenyleneError):
    pass
