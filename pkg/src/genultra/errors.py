"""Exception types raised by genultra."""


class GenUltraError(ValueError):
    """Base class for all parameter and structure errors."""


class PoleParameter(GenUltraError):
    """A parameter value makes a denominator vanish."""


class OddTermPresent(GenUltraError):
    """An even polynomial was expected but an odd coefficient is nonzero."""


class InvalidAlpha(GenUltraError):
    pass


class InvalidBeta(GenUltraError):
    pass


class NegativeMass(GenUltraError):
    pass
