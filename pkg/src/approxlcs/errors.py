"""Exception hierarchy shared by every module."""


class ALCSError(Exception):
    """Base class for all errors raised by approxlcs."""


class EmptyString(ALCSError, ValueError):
    pass


class TooFewStrings(ALCSError, ValueError):
    pass


class LetterOutOfAlphabet(ALCSError, ValueError):
    pass


class LengthMismatch(ALCSError, ValueError):
    pass


class EmptyLetterSet(ALCSError, ValueError):
    pass


class NegativeBudget(ALCSError, ValueError):
    pass


class IndexOutOfRange(ALCSError, IndexError):
    pass


class WrongMetric(ALCSError, ValueError):
    pass


class UnsupportedMetric(ALCSError, ValueError):
    pass


class ThresholdOutOfRange(ALCSError, ValueError):
    pass


class SubsetExplosion(ALCSError, RuntimeError):
    pass


class BudgetExceeded(ALCSError, RuntimeError):
    """An oracle refused an input whose enumeration would exceed its budget."""


class DimensionMismatch(ALCSError, ValueError):
    pass


class ParseError(ALCSError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class EmptySequence(ParseError):
    pass


class UnknownIUPACCode(ParseError):
    pass
