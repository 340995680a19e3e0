"""Numerical consequences of the Higgs-bundle splitting over a Shimura curve.

If a family with datum d were to trace a Shimura curve, its weight-1 Higgs
bundle would split into an ample part (Higgs field an isomorphism, so each
character's ample ranks match those of the conjugate character) and a flat
part.  That match turns eigenspace-dimension asymmetries h_i - h_{n-i}
into lower bounds on flat ranks — bounds only, since the exact flat ranks
depend on the family, not just on d.  This module computes these bounds,
the fiberwise intersection-negativity criterion that forces all eigenforms
through a second fibration, and the witness search combining the two.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from torelli_screen.arith import is_prime
from torelli_screen.cover import CoverDatum
from torelli_screen.errors import CharacterOutOfRange, NotPrime, PrimeTooSmall
from torelli_screen.hodge import cw_dimension, eigen_fiber_degree, hodge_table


@dataclass(frozen=True)
class FlatRankBounds:
    """Guaranteed lower bounds on flat summand ranks, per character and total.

    ``per_char[i - 1]`` is the bound for character i (1 <= i <= n-1); use
    :meth:`bound_for` to avoid the off-by-one.  ``total`` bounds the rank
    of the whole flat part.
    """

    datum: CoverDatum
    per_char: tuple[int, ...]
    total: int
    prime_refinement_applied: bool

    def bound_for(self, i):
        """Lower bound for character i, 1-based."""
        if not 1 <= i <= self.datum.n - 1:
            raise CharacterOutOfRange(
                f"character {i} outside [1, {self.datum.n - 1}]"
            )
        return self.per_char[i - 1]

    def to_json_dict(self):
        return {
            "per_char": list(self.per_char),
            "total": self.total,
            "prime_refinement": self.prime_refinement_applied,
        }


class FibrationNegativity(NamedTuple):
    value: Fraction
    negative: bool


def eigen_rank_difference(d, i):
    """h_{n-i} - h_i: the flat-rank gap between conjugate characters.

    For unit-branch data and i >= n/2 this equals r(2i - n)/n exactly.
    """
    if not 1 <= i <= d.n - 1:
        raise CharacterOutOfRange(f"character {i} outside [1, {d.n - 1}]")
    return cw_dimension(d, d.n - i) - cw_dimension(d, i)


def flat_rank_lower_bounds(d):
    """Per-character and total lower bounds on the flat summand's rank.

    Per character: rank F_i - rank F_{n-i} = h_i - h_{n-i} and ranks are
    non-negative, so per_char[i] = max(0, h_i - h_{n-i}).  For prime n the
    ample rank is the same at every character (the local-system rank is
    orbit-constant and the unitary part trivializes after base change), so
    the bound sharpens to h_i - min_j h_j.  Total: each conjugate pair
    {i, n-i} contributes at least |h_i - h_{n-i}|.
    """
    table = hodge_table(d).h
    n = d.n
    per = [max(0, table[i] - table[n - i]) for i in range(1, n)]
    refined = is_prime(n)
    if refined:
        least = min(table[1:])
        per = [max(per[i - 1], table[i] - least) for i in range(1, n)]
    total = sum(abs(table[i] - table[n - i]) for i in range(1, (n + 1) // 2))
    return FlatRankBounds(
        datum=d,
        per_char=tuple(per),
        total=total,
        prime_refinement_applied=refined,
    )


def rank_positive_characters(d):
    """Characters with a guaranteed non-trivial flat summand (prime degree).

    For unit-branch data this set contains every i with
    (p+1)/2 <= i < p-1, where the bound is r(p-(i+1))/p.
    """
    _require_prime_at_least_5(d.n)
    bounds = flat_rank_lower_bounds(d)
    return {i for i in range(1, d.n) if bounds.bound_for(i) > 0}


def fibration_negativity(d, i1, i2):
    """Intersection number of the twisted log-canonical bundle on a fiber.

    value = (2s - 2 + r) - deg_i1 - deg_i2, where deg_i is the fiberwise
    eigen bundle degree; a negative value forces both characters'
    eigenforms to pull back from a single second fibration.  Symmetric
    in (i1, i2).
    """
    for i in (i1, i2):
        if not 1 <= i <= d.n - 1:
            raise CharacterOutOfRange(f"character {i} outside [1, {d.n - 1}]")
    value = (
        2 * d.s
        - 2
        + d.r
        - eigen_fiber_degree(d, i1)
        - eigen_fiber_degree(d, i2)
    )
    return FibrationNegativity(value=value, negative=value < 0)


def second_fibration_witness(d) -> Optional[tuple[int, int]]:
    """Least pair (i0, i) certifying a second fibration, or None.

    Requirements: per-character flat bounds positive at i0 and i, and
    intersection negativity for both (i, i0) and (n-i, i0).  The i index
    ranges over 2i > n only: there rank F_{n-i} >= rank F_i holds
    unconditionally, so positivity of the conjugate's flat rank comes for
    free and the four checks above suffice.  i0 is scanned over all of
    1..n-1, ascending, then i ascending, so the witness is deterministic.
    """
    _require_prime_at_least_5(d.n)
    bounds = flat_rank_lower_bounds(d)
    n = d.n
    for i0 in range(1, n):
        if bounds.bound_for(i0) == 0:
            continue
        for i in range(n // 2 + 1, i0):
            if bounds.bound_for(i) == 0:
                continue
            if (
                fibration_negativity(d, i, i0).negative
                and fibration_negativity(d, n - i, i0).negative
            ):
                return (i0, i)
    return None


def _require_prime_at_least_5(n):
    if not is_prime(n):
        raise NotPrime(f"degree {n} is not prime")
    if n < 5:
        raise PrimeTooSmall(f"prime degree {n} < 5")
