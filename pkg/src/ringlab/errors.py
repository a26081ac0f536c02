"""Exception hierarchy shared by every ringlab module."""


class RingLabError(Exception):
    """Base class for all library errors."""


class InvalidOrder(RingLabError):
    pass


class InvalidArity(RingLabError):
    pass


class InvalidModulus(RingLabError):
    pass


class NotPrime(RingLabError):
    pass


class NotProper(RingLabError):
    pass


class NotAnIdeal(RingLabError):
    pass


class ZeroModule(RingLabError):
    pass


class NotAHom(RingLabError):
    pass


class NotSurjective(RingLabError):
    pass


class CollapsesToZero(RingLabError):
    pass


class RingMismatch(RingLabError):
    pass


class TooLarge(RingLabError):
    pass


class UnknownClaim(RingLabError):
    pass


class SourceError(RingLabError):
    """An error tied to a span of DSL source text."""

    def __init__(self, message, start=0, end=None, source=None, expected=()):
        self.message = message
        self.start = start
        self.end = start if end is None else end
        self.source = source
        self.expected = tuple(expected)
        super().__init__(self._format())

    @property
    def line(self):
        if self.source is None:
            return 1
        return self.source.count("\n", 0, self.start) + 1

    @property
    def column(self):
        if self.source is None:
            return self.start + 1
        return self.start - (self.source.rfind("\n", 0, self.start) + 1) + 1

    def with_source(self, source):
        return type(self)(self.message, self.start, self.end, source, self.expected)

    def _format(self):
        text = f"{self.line}:{self.column}: {self.message}"
        if self.expected:
            text += " (expected " + ", ".join(self.expected) + ")"
        return text


class ParseError(SourceError):
    pass


class ElaborationError(SourceError):
    pass
