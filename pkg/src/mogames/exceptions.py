class MOGError(ValueError):
    """Base class for errors raised by mogames."""


class InvalidArgumentError(MOGError):
    pass


class PositiveDomainError(MOGError):
    """A vector that must be strictly positive (a denominator, a grid input) is not."""


class MalformedGameError(MOGError):
    pass


class PotentialInvalidError(MOGError):
    pass


class SizeGuardError(MOGError):
    pass
