"""Exception types shared across the package."""


class Z2Z2uError(Exception):
    """Base class for analysis errors."""


class CodeTooLarge(Z2Z2uError):
    """Enumeration would exceed the configured size cap."""


class CapExceeded(Z2Z2uError):
    """A search or divisor-enumeration cap was hit."""


class ZeroCode(Z2Z2uError):
    """Operation needs a code with a nonzero codeword."""


class NonIntegerResult(Z2Z2uError):
    """MacWilliams transform produced a non-integral coefficient."""


class ZeroColumn(Z2Z2uError):
    """The code has an identically zero coordinate."""


class NotOneWeight(Z2Z2uError):
    """The code has more than one nonzero weight."""


class ValidationFailed(Z2Z2uError):
    """Cyclic generator polynomials violate a structural condition."""


class NotShiftClosed(Z2Z2uError):
    """A constructed cyclic code is not closed under the cyclic shift."""
