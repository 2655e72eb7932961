"""Exception types shared across the package."""


class BSymbolsError(Exception):
    """Base class for every error raised by this package."""


class NotAPartition(BSymbolsError):
    """A sequence is not weakly decreasing or has a negative entry."""


class SizeMismatch(BSymbolsError):
    """Two partitions that should have equal totals do not."""


class NotAdmissible(BSymbolsError):
    """The symbol size N is smaller than the minimal admissible one."""


class NotSympartition(BSymbolsError):
    """A partition fails the kappa-image conditions for the given (b, N, n)."""


class NotStrictlyDominated(BSymbolsError):
    """An adjacency frame was requested for a non-strict dominance pair."""


class NotComparable(BSymbolsError):
    """Two kappa vectors are equal or incomparable under dominance."""


class NotAdjacent(BSymbolsError):
    """A strict dominance pair has a third kappa value strictly between."""


class NoSingleMove(BSymbolsError):
    """Tripwire: an adjacent pair does not differ by a single box move."""


class WitnessInvalid(BSymbolsError):
    """Tripwire: a constructed induction witness violates its invariants."""


class RankMismatch(BSymbolsError):
    """Two bipartitions that should have the same rank do not."""


class PreconditionViolated(BSymbolsError):
    """An oracle was called outside its stated hypothesis."""
