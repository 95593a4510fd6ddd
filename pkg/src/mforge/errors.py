"""Exception types shared across the package."""


class MforgeError(Exception):
    """Base class for errors raised by this package."""


class NotPrimePowerError(MforgeError, ValueError):
    """The requested field order is not a power of a single prime."""


class SizeCapError(MforgeError):
    """An enumerative operation was asked to exceed its size cap."""


class SchemaError(MforgeError, ValueError):
    """A JSON document does not describe a valid matroid or field.

    `reason` is a stable machine-readable tag ("unknown-field",
    "not-prime-power", "exchange-axiom", ...); the message carries the
    human-readable diagnostic.
    """

    def __init__(self, reason: str, message: str):
        super().__init__(f"{reason}: {message}")
        self.reason = reason


class NotAnExtensionError(MforgeError, ValueError):
    """The input is not a one-element extension of the expected geometry."""


class RepresentableInputError(MforgeError, ValueError):
    """The added element is parallel to an existing point or a loop, so the
    extension stays representable and carries no new structure to extract."""


class LemmaViolationError(MforgeError):
    """A verified structural guarantee failed to hold.

    This is never a legitimate outcome on valid inputs; it indicates a bug
    in the library (or a corrupted input object) and is raised so that the
    verification suites fail loudly instead of reporting a false pass.
    """
