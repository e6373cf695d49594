"""Exception hierarchy. Every error raised by the package derives from AMBCError."""


class AMBCError(ValueError):
    pass


class ParseError(AMBCError):
    pass


class NotInjective(AMBCError):
    pass


class PartialNotInvertible(AMBCError):
    pass


class InvalidKnuthMove(AMBCError):
    pass


class Incompatible(AMBCError):
    """A stream (or row pair) cannot drive a backward step for this permutation."""


class EmptyPoset(AMBCError):
    pass


class NotEnoughChannels(AMBCError):
    pass


class NotAStream(AMBCError):
    pass


class NoValidAltitude(AMBCError):
    pass


class ShapeMismatch(AMBCError):
    pass


class InvalidTriple(AMBCError):
    pass


class NotEmptyForward(AMBCError):
    pass


class NoStabilization(AMBCError):
    pass
