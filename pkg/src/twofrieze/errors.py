"""Error classes shared by all modules.

Every domain error carries a distinct process exit code so the CLI can
signal the failure class to shell pipelines (usage errors use the
conventional code 2, and `verify` reports rule violations with code 3).
"""


class FriezeError(Exception):
    """Base class for all domain errors."""

    exit_code = 3


class DivisionByZero(FriezeError):
    """An intermediate entry hit zero during propagation."""

    exit_code = 4


class NonPositive(FriezeError):
    """An entry that must be strictly positive is not."""

    exit_code = 5


class NonIntegral(FriezeError):
    """Propagation produced a non-integer entry."""

    exit_code = 6


class NotClosed(FriezeError):
    """Propagated columns fail to reproduce the seed columns after one period."""

    exit_code = 7


class NotDivisible(FriezeError):
    """Exact Laurent-polynomial division left a remainder."""

    exit_code = 8


class IndexOutOfStripe(FriezeError):
    """A grid index lies outside the band where entries are defined."""

    exit_code = 9


class NotBipartite(FriezeError):
    """The composite mutations require a bipartite arrow graph."""

    exit_code = 10


class CapExceeded(FriezeError):
    """A bounded enumeration produced more results than the caller allowed."""

    exit_code = 11


class ConditionViolated(FriezeError):
    """A congruence precondition of a cut/glue operation fails.

    Attributes ``which`` and ``residue`` identify the failing congruence.
    """

    exit_code = 12

    def __init__(self, which, residue):
        self.which = which
        self.residue = residue
        super().__init__(f"{which} leaves residue {residue}, expected 1")


class PairMismatch(FriezeError):
    """The two operands of a seam gluing do not share the required pair."""

    exit_code = 13


class NotUnimodular(FriezeError):
    """A polygon violates the unit-determinant normalization."""

    exit_code = 14


class MonodromyNotIdentity(FriezeError):
    """A lifted vertex sequence fails to close up after one full period."""

    exit_code = 15


class InternalContradiction(FriezeError):
    """An operation that is guaranteed to succeed failed; includes repro data."""

    exit_code = 16
