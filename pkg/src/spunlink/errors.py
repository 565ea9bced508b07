"""Exception hierarchy shared by the whole package."""


class SpunLinkError(Exception):
    """Base class for every error raised by spunlink."""


class DiagramError(SpunLinkError):
    """A Morse event word does not describe a valid diagram.

    ``index`` is the offending event index; final-state errors use
    ``len(events)``.
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class PositionOutOfRange(DiagramError):
    pass


class NonEmptyFinalState(DiagramError):
    pass


class SeamWidthMismatch(DiagramError):
    pass


class AxisEventNotAtBottom(DiagramError):
    pass


class OddCrossingParity(SpunLinkError):
    pass


class NotAnnular(SpunLinkError):
    pass


class MoveNotApplicable(SpunLinkError):
    pass


class EmptyResult(SpunLinkError):
    pass


class NotASubset(SpunLinkError):
    pass


class NonPositiveDegree(SpunLinkError):
    pass


class IndexOutOfRange(SpunLinkError):
    pass


class NegativeIndex(SpunLinkError):
    pass


class ParseError(SpunLinkError):
    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line
