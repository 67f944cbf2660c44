"""Exception hierarchy shared by every module of the package."""


class SemUnifyError(Exception):
    """Base class for all errors raised by semunify."""


class IllFormed(SemUnifyError, ValueError):
    """A literal, context, morphism or cover violates its structural rules."""


class Inconsistent(SemUnifyError):
    """A literal set contains a complementary pair.

    ``pair`` holds the clashing literals, positive one first.
    """

    def __init__(self, pair, message=None):
        self.pair = tuple(pair)
        if message is None:
            message = "inconsistent literals: %s and %s" % tuple(map(str, self.pair))
        super().__init__(message)


class ContextMismatch(SemUnifyError):
    pass


class TypeMismatch(SemUnifyError):
    """Two morphisms do not chain (``f.target != g.source``)."""


class LengthMismatch(SemUnifyError):
    pass


class NotSurjective(SemUnifyError):
    def __init__(self, missing):
        self.missing = frozenset(missing)
        super().__init__("cover misses variables: %s" % ", ".join(sorted(self.missing)))


class VocabNotCovered(SemUnifyError):
    def __init__(self, missing):
        self.missing = frozenset(missing)
        names = sorted(str(r) for r in self.missing)
        super().__init__("cover misses relations: %s" % ", ".join(names))


class TooLarge(SemUnifyError):
    pass


class UnknownVariable(SemUnifyError):
    pass


class DisjointnessViolated(SemUnifyError):
    pass


class AllZero(SemUnifyError):
    pass


class PartialMap(SemUnifyError):
    pass


class WrongSemiring(SemUnifyError):
    pass


class EmptySupport(SemUnifyError):
    pass


class MissingPattern(SemUnifyError):
    pass


class InconsistentCover(SemUnifyError):
    """A candidate cover has no gluing, so it cannot be weighted."""

    def __init__(self, index, result):
        self.index = index
        self.result = result
        super().__init__("cover %d has no gluing: %s" % (index, result))


class DSLError(SemUnifyError):
    """Problem-file error carrying a source position (1-based)."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        self.bare_message = message
        if line is not None:
            message = "line %d, column %d: %s" % (line, column, message)
        super().__init__(message)


class DSLSyntaxError(DSLError):
    def __init__(self, message, line=None, column=None, expected=()):
        self.expected = tuple(expected)
        super().__init__(message, line, column)


class DSLNameError(DSLError):
    pass
