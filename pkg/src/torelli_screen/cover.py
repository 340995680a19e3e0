"""Branch data of cyclic covers: validation, ramification combinatorics,
genus, canonical forms, quotients.

A family of Z_n-covers of a genus-s curve is described up to numerical
equivalence by a :class:`CoverDatum` (n, s, u_1..u_r): local monodromy
multiplicities u_k in [1, n-1] at r branch points, with n dividing their
sum.  Everything downstream (eigenspace dimensions, rank bounds, screening
verdicts) is a function of this datum alone.
"""

from dataclasses import dataclass, field
from math import gcd

from torelli_screen import backend
from torelli_screen.errors import (
    DegreeTooSmall,
    DisconnectedCover,
    IndexOutOfRange,
    InternalInvariantError,
    MultiplicityOutOfRange,
    NegativeGenus,
    NotADivisor,
    SumNotDivisible,
)


@dataclass(frozen=True)
class CoverDatum:
    """A family of Z_n-covers up to numerical equivalence.

    Immutable; build through :func:`validate`.  Branch points carry no
    labels: ``u`` is stored sorted ascending and two data with equal
    sorted multiplicities are the same datum.
    """

    n: int
    s: int
    u: tuple[int, ...]

    @property
    def r(self):
        """Number of branch points."""
        return len(self.u)

    def to_json_dict(self):
        return {"n": self.n, "s": self.s, "u": list(self.u)}


@dataclass(frozen=True)
class QuotientResult:
    """Outcome of passing to a degree-m quotient cover.

    ``dropped`` holds the (1-based, sorted-order) branch indices whose
    image point is unramified in the quotient; ``retained_multiplicities``
    maps every other index k to u_k mod m.
    """

    datum: CoverDatum
    dropped: frozenset[int]
    retained_multiplicities: dict[int, int] = field(compare=False)


def validate(n, s, u):
    """Check a raw (n, s, u) triple and return the sorted CoverDatum.

    Raises DegreeTooSmall, NegativeGenus, MultiplicityOutOfRange,
    SumNotDivisible, or DisconnectedCover (s = 0 with monodromy image a
    proper subgroup, i.e. gcd(n, u_1..u_r) > 1).
    """
    if n < 2:
        raise DegreeTooSmall(f"cover degree must be >= 2, got {n}")
    if s < 0:
        raise NegativeGenus(f"base genus must be >= 0, got {s}")
    u = tuple(sorted(u))
    for v in u:
        if not 1 <= v <= n - 1:
            raise MultiplicityOutOfRange(
                f"multiplicity {v} outside [1, {n - 1}] for degree {n}"
            )
    total = sum(u)
    if total % n != 0:
        raise SumNotDivisible(
            f"multiplicities sum to {total}, not divisible by n={n}"
        )
    if s == 0 and gcd(n, *u) != 1:
        raise DisconnectedCover(
            f"genus-0 base with gcd(n, u_1..u_r) = {gcd(n, *u)} > 1: "
            "the cover is disconnected"
        )
    return CoverDatum(n=n, s=s, u=u)


def fiber_genus(d):
    """Genus of the covering curve, by Riemann-Hurwitz.

    g = n(s-1) + 1 + (1/2) sum_k (n - gcd(n, u_k)), each branch point
    contributing gcd(n, u_k) preimages of ramification index n/gcd.
    """
    excess = sum(d.n - gcd(d.n, v) for v in d.u)
    if excess % 2 != 0:
        raise InternalInvariantError(
            f"odd ramification excess {excess} for {d}: datum corrupt"
        )
    g = d.n * (d.s - 1) + 1 + excess // 2
    if g < 0:
        raise InternalInvariantError(f"negative genus {g} for {d}")
    return g


def points_over_branch(d, k):
    """Number of points of the cover above the k-th branch point (1-based):
    gcd(n, u_k)."""
    if not 1 <= k <= d.r:
        raise IndexOutOfRange(f"branch index {k} outside 1..{d.r}")
    return gcd(d.n, d.u[k - 1])


def monodromy_orbit_count(n, u):
    """Independent oracle for :func:`points_over_branch`.

    Counts orbits of translation by u on {0..n-1} by explicit traversal;
    equals gcd(n, u) but never computes a gcd.
    """
    if not 1 <= u <= n - 1:
        raise MultiplicityOutOfRange(f"multiplicity {u} outside [1, {n - 1}]")
    seen = [False] * n
    orbits = 0
    for start in range(n):
        if seen[start]:
            continue
        orbits += 1
        x = start
        while not seen[x]:
            seen[x] = True
            x = (x + u) % n
    return orbits


def is_totally_ramified(d):
    """True iff a single point lies over every branch point
    (gcd(n, u_k) = 1 for all k)."""
    return all(gcd(d.n, v) == 1 for v in d.u)


def is_unit_branch(d):
    """True iff every multiplicity equals 1 (forces n | r)."""
    return all(v == 1 for v in d.u)


def canonicalize(d):
    """Representative of d's class under permutation and the unit action.

    Simultaneously rescaling all multiplicities by a unit m of Z_n yields a
    numerically equivalent family (the characters are permuted along with
    the eigenspaces), so the class representative is the lexicographically
    least sorted tuple over all units.
    """
    return CoverDatum(n=d.n, s=d.s, u=backend.canonical_u(d.n, d.u))


def quotient_datum(d, m):
    """Reduce to the degree-m quotient cover, m | n.

    Quotienting by the order-n/m subgroup of the deck group leaves a
    cyclic cover of degree m over the same base whose multiplicities are
    u_k mod m; branch points with u_k = 0 mod m become unramified and are
    dropped.  The branch locus of the quotient is contained in that of d.
    """
    if m < 2:
        raise DegreeTooSmall(f"quotient degree must be >= 2, got {m}")
    if d.n % m != 0:
        raise NotADivisor(f"{m} does not divide cover degree {d.n}")
    dropped = set()
    retained = {}
    for k, v in enumerate(d.u, start=1):
        red = v % m
        if red == 0:
            dropped.add(k)
        else:
            retained[k] = red
    if sum(retained.values()) % m != 0:
        raise InternalInvariantError(
            f"retained multiplicities of {d} mod {m} do not sum to 0 mod {m}"
        )
    datum = validate(m, d.s, sorted(retained.values()))
    return QuotientResult(
        datum=datum,
        dropped=frozenset(dropped),
        retained_multiplicities=retained,
    )
