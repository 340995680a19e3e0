"""Exception hierarchy.

Every rejection of caller input derives from :class:`TorelliScreenError`
(itself a ``ValueError``), so the CLI can map bad input to exit code 2.
:class:`InternalInvariantError` signals corruption of a value that was
already validated — a bug, never a user mistake — and maps to exit code 1.
"""


class TorelliScreenError(ValueError):
    """Base class for all input-validation failures."""


class DegreeTooSmall(TorelliScreenError):
    """Cover degree n < 2."""


class NegativeGenus(TorelliScreenError):
    """Base genus s < 0."""


class MultiplicityOutOfRange(TorelliScreenError):
    """Some branch multiplicity lies outside [1, n-1]."""


class SumNotDivisible(TorelliScreenError):
    """The multiplicities do not sum to 0 mod n."""


class DisconnectedCover(TorelliScreenError):
    """s = 0 and gcd(n, u_1..u_r) > 1: the covering curve is disconnected.

    Over a genus-0 base the branch multiplicities alone determine the
    monodromy image, and a proper image splits the cover into components;
    genus and eigenspace dimensions of "the" covering curve are undefined.
    """


class IndexOutOfRange(TorelliScreenError):
    """Branch-point index k outside 1..r."""


class NotADivisor(TorelliScreenError):
    """Quotient degree m does not divide n."""


class CharacterOutOfRange(TorelliScreenError):
    """Character index i outside the allowed range."""


class NotUnitBranch(TorelliScreenError):
    """Operation requires every multiplicity to equal 1."""


class DegreeNotPositive(TorelliScreenError):
    """Riemann-Roch oracle called on a character of fiber degree 0."""


class NotPrime(TorelliScreenError):
    """Operation requires a prime cover degree."""


class PrimeTooSmall(TorelliScreenError):
    """Operation requires a prime degree >= 5."""


class WrongShape(TorelliScreenError):
    """Datum shape (base genus / primality) does not match the screener."""


class DatumParseError(TorelliScreenError):
    """A JSON-lines datum file could not be parsed; message names the line."""


class InternalInvariantError(RuntimeError):
    """A value that passed validation violated an internal identity."""
