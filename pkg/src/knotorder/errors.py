"""Exception hierarchy for knotorder."""


class KnotOrderError(Exception):
    """Base class for all errors raised by this package."""


class MalformedSeifertMatrix(KnotOrderError, ValueError):
    pass


class InvalidTwistParameter(KnotOrderError, ValueError):
    pass


class NoPrimaryPart(KnotOrderError, ValueError):
    pass


class NonCyclicPrimaryPart(KnotOrderError, ValueError):
    pass


class PrimeMismatch(KnotOrderError, ValueError):
    pass


class NotPrime(KnotOrderError, ValueError):
    pass


class MismatchedOrder(KnotOrderError, ValueError):
    pass


class ZeroScalar(KnotOrderError, ValueError):
    pass


class NotCoprimeToCyclotomic(KnotOrderError, ValueError):
    pass


class BudgetExceeded(KnotOrderError, RuntimeError):
    pass


class DependentBasis(KnotOrderError, ValueError):
    pass


class NotNormalized(KnotOrderError, ValueError):
    pass


class PrimeNotThreeMod4(KnotOrderError, ValueError):
    pass


class EvenDeterminant(KnotOrderError, ValueError):
    pass


class NotInfiniteOrderVerdict(KnotOrderError, ValueError):
    pass


class MalformedFamily(KnotOrderError, ValueError):
    pass


class ParseError(KnotOrderError, ValueError):
    """Raised by the file parsers; ``line`` is 1-based (a row number for CSV)."""

    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


class InconsistentRecord(KnotOrderError, ValueError):
    def __init__(self, row, message):
        self.row = row
        super().__init__(f"row {row}: {message}")


class InvalidCertificate(KnotOrderError, ValueError):
    pass
