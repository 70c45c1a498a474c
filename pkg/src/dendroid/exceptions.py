"""Shared exception types."""


class DomainError(ValueError):
    """A letter or state does not belong to the structure it was used with."""


class RadiusError(ValueError):
    """A window radius is too small for the requested computation.

    Carries the minimal radius that would make the computation sound.
    """

    def __init__(self, required: int, message: str | None = None):
        self.required = required
        super().__init__(message or f"window radius too small; need at least {required}")


class FormatError(ValueError):
    """A serialized automaton violates the file schema.

    ``where`` is a JSON-path-like locator of the offending field.
    """

    def __init__(self, where: str, message: str):
        self.where = where
        super().__init__(f"{where}: {message}")
