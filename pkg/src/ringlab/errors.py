"""Exception types shared across the package."""


class RinglabError(Exception):
    """Base class for all package errors."""


class SpecError(RinglabError):
    """Malformed ring specification or parameters."""


class AxiomViolation(RinglabError):
    """A ring law failed; carries the law name and a witness tuple."""

    def __init__(self, law, witness=None):
        self.law = law
        self.witness = witness
        msg = law if witness is None else f"{law}: witness {witness}"
        super().__init__(msg)


class ParseError(RinglabError):
    """Ring-spec text could not be parsed; position is a char offset or field path."""

    def __init__(self, position, message):
        self.position = position
        self.message = message
        super().__init__(f"{position}: {message}")


class CapacityExceeded(RinglabError):
    """An enumeration exceeded its configured bound."""


class PreconditionViolated(RinglabError):
    """A documented operation precondition does not hold."""


class BudgetExceeded(RinglabError):
    """A guarded computation was refused because it exceeds the time budget."""


class UnknownName(RinglabError):
    """Catalog name not recognized."""


class NonPrime(RinglabError):
    """A parameter that must be prime is not."""


class WrongRing(RinglabError):
    """The ring handed in is not the one this operation is defined for."""


class ZeroPair(RinglabError):
    """The integer pair (0, 0) has no gcd decomposition."""
