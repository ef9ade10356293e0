"""Shared exception types."""

from __future__ import annotations


class DimensionMismatch(ValueError):
    """Operands have different coordinate dimensions."""


class UnknownScenario(LookupError):
    """A scenario label is not part of the model."""


class MissingFamily(LookupError):
    """A scenario pair has no declared splitting family."""


class ScenariosNotEnumerable(TypeError):
    """The scenario set is a generator, not a finite list.

    Raised by operations that need to materialize scenario sets; callers
    should use representative event classes or the binary-row closed forms.
    """


class GridBudgetExceeded(ValueError):
    """A grid enumeration would exceed the hard point budget."""


class WitnessNotFound(RuntimeError):
    """A search that promises a witness on valid inputs found none."""


class ModelFormatError(ValueError):
    """A model file failed schema validation.

    `location` is a dotted path into the document, e.g. "families[2].kind".
    """

    def __init__(self, message: str, location: str = "$"):
        super().__init__(f"{location}: {message}")
        self.location = location
        self.reason = message
