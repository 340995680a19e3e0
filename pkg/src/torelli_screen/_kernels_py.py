"""Pure-Python integer kernels.

These are the hot inner loops of the library: the per-character modular
sums behind the eigenspace dimension table, and the search for the
lexicographically least unit-multiple of a multiplicity tuple.  A compiled
twin (``_kernels``, built from ``_kernels.pyx``) implements the same two
functions; :mod:`torelli_screen.backend` picks one at import time.  Both
implementations must agree bit-for-bit on every input.

Everything here is exact integer arithmetic.  Fractional parts never
appear: ``frac(i*u/n) == ((i*u) % n) / n``, so sums of fractional parts
are carried around as integer numerators over the common denominator n.
"""

from collections import Counter
from math import gcd


def character_sums(n, u):
    """Per-character modular sums of the multiplicity tuple.

    Returns ``(d, c)`` where, for each character i in 0..n-1,

    * ``d[i] = sum_k ((i * u_k) mod n)`` — n times the fiber degree of the
      i-th eigen line bundle,
    * ``c[i] = #{k : (i * u_k) mod n != 0}`` — the number of branch points
      the i-th character "sees".
    """
    d = [0] * n
    c = [0] * n
    for v, mult in sorted(Counter(u).items()):
        for i in range(1, n):
            t = (i * v) % n
            if t:
                d[i] += mult * t
                c[i] += mult
    return d, c


def canonical_u(n, u):
    """Least sorted representative of u under the unit action mod n.

    Scans every unit m of Z_n, maps each multiplicity to ``(m * u_k) % n``,
    sorts, and keeps the lexicographically least tuple.  Units never map a
    value in [1, n-1] to 0, so the result is again a valid multiplicity
    tuple.
    """
    if not u:
        return ()
    best = None
    for m in range(1, n):
        if gcd(m, n) != 1:
            continue
        cand = sorted((m * v) % n for v in u)
        if best is None or cand < best:
            best = cand
    return tuple(best)
