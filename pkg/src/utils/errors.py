class ZarankError(Exception):
    """Base class for every error raised by the zarank package"""


class InvalidInputError(ZarankError, ValueError):
    """An input was rejected (bad parameters, illegal object pair, invalid representation)"""

    def __init__(self, message, violations=None):
        super().__init__(message)
        self.violations = list(violations or [])


class TieError(InvalidInputError):
    """Two horizontal segments share a y-coordinate and their x-intervals are not nested"""


class OracleLimitError(ZarankError):
    """An exhaustive search would exceed its configured cap"""

    def __init__(self, message, size=None, cap=None):
        super().__init__(message)
        self.size = size
        self.cap = cap


class OrderingNotFoundError(ZarankError):
    """No gamma-free ordering was found; this is not a proof that none exists"""


class InternalCertificationError(ZarankError):
    """A certifier's self-check failed"""
