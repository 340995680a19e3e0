"""Eigenspace dimensions of holomorphic 1-forms on a cyclic cover.

The deck group Z_n acts on the 1-forms of the covering curve; the i-th
eigenspace has dimension

    h_0 = s,    h_i = s - 1 + sum_k frac(-i * u_k / n)   (1 <= i <= n-1),

the Chevalley-Weil formula.  All sums of fractional parts are integers
over the common denominator n and are handled as exact integer numerators;
any non-integral sum means a corrupted datum and fails loudly.

The module also exposes the fiberwise degrees of the eigen line bundles,
a Riemann-Roch oracle cross-checking the sign convention, and the
partition of characters into Galois orbits under the units mod n.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from torelli_screen import backend
from torelli_screen.cover import CoverDatum, fiber_genus, is_unit_branch
from torelli_screen.errors import (
    CharacterOutOfRange,
    DegreeNotPositive,
    DegreeTooSmall,
    InternalInvariantError,
    NotUnitBranch,
)


@dataclass(frozen=True)
class HodgeTable:
    """The n eigenspace dimensions h_0..h_{n-1} of a cover datum."""

    datum: CoverDatum
    h: tuple[int, ...]

    def to_json_dict(self):
        return {"h": list(self.h)}


@dataclass(frozen=True)
class OrbitPartition:
    """Partition of the characters {1..n-1} into unit-group orbits.

    Orbits are sorted by least element, members ascending; for prime n
    there is a single orbit.
    """

    n: int
    orbits: tuple[tuple[int, ...], ...]

    def to_json_list(self):
        return [list(o) for o in self.orbits]


def _check_character(d, i, lowest):
    if not lowest <= i <= d.n - 1:
        raise CharacterOutOfRange(
            f"character {i} outside [{lowest}, {d.n - 1}] for degree {d.n}"
        )


def cw_dimension(d, i):
    """Dimension of the i-th eigenspace of 1-forms (Chevalley-Weil).

    Exact: the fractional-part sum is accumulated as an integer numerator
    over denominator n, whose divisibility by n is asserted.
    """
    _check_character(d, i, 0)
    if i == 0:
        return d.s
    num = sum((-i * v) % d.n for v in d.u)
    if num % d.n != 0:
        raise InternalInvariantError(
            f"non-integral eigenspace dimension for {d}, character {i}"
        )
    h = d.s - 1 + num // d.n
    if h < 0:
        raise InternalInvariantError(
            f"negative eigenspace dimension {h} for {d}, character {i}"
        )
    return h


def hodge_table(d):
    """All n eigenspace dimensions at once, invariants asserted.

    Checked before returning: h_0 = s, every h_i >= 0, sum h_i equals the
    Riemann-Hurwitz genus, and each conjugate pair satisfies
    h_i + h_{n-i} = 2s - 2 + #{k : i*u_k != 0 mod n}.
    """
    n, s = d.n, d.s
    degree_num, nonzero = backend.character_sums(n, d.u)
    h = [s] * n
    for i in range(1, n):
        if degree_num[i] % n != 0:
            raise InternalInvariantError(
                f"non-integral eigenspace dimension for {d}, character {i}"
            )
        h[i] = s - 1 + nonzero[i] - degree_num[i] // n
        if h[i] < 0:
            raise InternalInvariantError(
                f"negative eigenspace dimension h_{i} = {h[i]} for {d}"
            )
    if sum(h) != fiber_genus(d):
        raise InternalInvariantError(
            f"eigenspace dimensions of {d} sum to {sum(h)}, genus is "
            f"{fiber_genus(d)}"
        )
    for i in range(1, n):
        if h[i] + h[n - i] != 2 * s - 2 + nonzero[i]:
            raise InternalInvariantError(
                f"conjugate pairing violated at character {i} of {d}"
            )
    return HodgeTable(datum=d, h=tuple(h))


def cw_unit_branch_closed_form(d, i):
    """Closed form s - 1 + r(1 - i/n), valid only when every u_k = 1."""
    if not is_unit_branch(d):
        raise NotUnitBranch(f"{d} has a multiplicity != 1")
    _check_character(d, i, 1)
    value = d.s - 1 + Fraction(d.r * (d.n - i), d.n)
    if value.denominator != 1:
        raise InternalInvariantError(
            f"unit-branch closed form non-integral for {d}, character {i}"
        )
    return int(value)


def eigen_fiber_degree(d, i):
    """Fiberwise degree of the i-th eigen line bundle of the cover.

    Equals sum_k frac(i * u_k / n) as an exact rational; 0 for i = 0.
    """
    _check_character(d, i, 0)
    return Fraction(sum((i * v) % d.n for v in d.u), d.n)


def rr_oracle_dimension(d, i):
    """Riemann-Roch oracle: s - 1 + deg of the i-th eigen bundle.

    Applicable only when that degree is positive (otherwise the h^1 term
    need not vanish and the oracle refuses).  Where applicable it must
    equal cw_dimension(d, n - i); the pairing of eigenspace i with bundle
    n - i is the library's fixed sign convention, and tests enforce the
    equality without this function ever computing a Chevalley-Weil sum.
    """
    _check_character(d, i, 1)
    degree = eigen_fiber_degree(d, i)
    if degree <= 0:
        raise DegreeNotPositive(
            f"eigen bundle {i} of {d} has fiber degree {degree}; "
            "Riemann-Roch oracle needs a positive degree"
        )
    value = d.s - 1 + degree
    if value.denominator != 1:
        raise InternalInvariantError(
            f"Riemann-Roch dimension non-integral for {d}, character {i}"
        )
    return int(value)


def galois_orbits(n):
    """Characters {1..n-1} partitioned into orbits under the units mod n.

    The orbit of i is exactly {j : gcd(j, n) = gcd(i, n)}: unit
    multiplication preserves the gcd, and conversely any two characters
    sharing it are related by a unit lifted through n/gcd.  Tests verify
    against brute-force closure.
    """
    if n < 2:
        raise DegreeTooSmall(f"degree must be >= 2, got {n}")
    classes = {}
    for i in range(1, n):
        classes.setdefault(gcd(i, n), []).append(i)
    # the least member of each class is its gcd, so sorting keys sorts orbits
    orbits = tuple(tuple(classes[key]) for key in sorted(classes))
    return OrbitPartition(n=n, orbits=orbits)


def rank_local_system(d, i):
    """Rank h_i + h_{n-i} of the i-th summand of the weight-1 local system.

    Constant on Galois orbits of characters; equals
    2s - 2 + #{k : i*u_k != 0 mod n}.
    """
    _check_character(d, i, 1)
    return cw_dimension(d, i) + cw_dimension(d, d.n - i)
