"""Exception types.

Every error carries a short ``code`` string so that command-line reports and
property-test failures can name the violated condition.
"""


class IntervalPosetError(ValueError):
    code = "Error"

    def __init__(self, message=None):
        super().__init__(message or self.code)


class MalformedInput(IntervalPosetError):
    code = "MalformedInput"


class NotAPermutation(IntervalPosetError):
    code = "NotAPermutation"


class ArityMismatch(IntervalPosetError):
    code = "ArityMismatch"


class NoSimpleOfThatSize(IntervalPosetError):
    code = "NoSimpleOfThatSize"


class IndexOutOfRange(IntervalPosetError):
    code = "IndexOutOfRange"


class InvalidPoset(IntervalPosetError):
    code = "InvalidPoset"


class NotBinary(IntervalPosetError):
    code = "NotBinary"


class DegenerateSize(IntervalPosetError):
    code = "DegenerateSize"


class InvalidDissection(IntervalPosetError):
    code = "InvalidDissection"


class NotFramed(IntervalPosetError):
    code = "NotFramed"


class HasQuadrilateral(IntervalPosetError):
    code = "HasQuadrilateral"


class HasCrossings(IntervalPosetError):
    code = "HasCrossings"


class CutsNotComplete(IntervalPosetError):
    code = "CutsNotComplete"


class QuadrilateralFace(IntervalPosetError):
    code = "QuadrilateralFace"


class TooLarge(IntervalPosetError):
    code = "TooLarge"


class OutOfDomain(IntervalPosetError):
    code = "OutOfDomain"
