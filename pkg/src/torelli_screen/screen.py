"""Screening: apply the non-existence theorems to branch data.

Each screener checks one theorem's full hypothesis list against a datum
and returns a :class:`Verdict` carrying the status, a theorem citation
tag, a trace with every hypothesis checked (pass or fail — no
short-circuiting), and the named parameter values used.  ``screen``
dispatches on datum shape; ``enumerate_data`` / ``batch_screen`` drive
whole search ranges deterministically.

A Verdict of ExcludedNonCompact asserts: no family with this datum traces
a non-compact Shimura curve generically inside the Torelli locus.
NotCovered asserts nothing — see NOT_COVERED_DISCLAIMER.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import gcd

from torelli_screen import backend
from torelli_screen.arith import is_prime, prime_factors
from torelli_screen.cover import (
    CoverDatum,
    fiber_genus,
    is_totally_ramified,
    quotient_datum,
    validate,
)
from torelli_screen.errors import (
    InternalInvariantError,
    TorelliScreenError,
    WrongShape,
)
from torelli_screen.higgs import flat_rank_lower_bounds
from torelli_screen.hodge import hodge_table

EXCLUDED_NON_COMPACT = "ExcludedNonCompact"
NOT_COVERED = "NotCovered"
CONDITIONALLY_EXCLUDED = "ConditionallyExcluded"

NOT_COVERED_DISCLAIMER = (
    "NotCovered is not a claim that a Shimura curve exists; it records only "
    "that no implemented exclusion theorem applies to this datum."
)


@dataclass(frozen=True)
class TraceEntry:
    """One checked hypothesis: what was required, what was found, verdict."""

    hypothesis: str
    value: str
    passed: bool

    def to_json_dict(self):
        return {
            "hypothesis": self.hypothesis,
            "value": self.value,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class Verdict:
    """Screening outcome with its complete hypothesis trace."""

    status: str
    theorem: str
    trace: tuple[TraceEntry, ...]
    parameters: dict[str, str] = field(compare=False)

    def to_json_dict(self):
        return {
            "status": self.status,
            "theorem": self.theorem,
            "trace": [t.to_json_dict() for t in self.trace],
            "parameters": dict(self.parameters),
        }


@dataclass(frozen=True)
class ScreenConfig:
    """Screening knobs.

    ``genus_threshold`` replaces the default fiber-genus requirement of 8.
    ``general_base_bound`` maps a base genus s >= 2 to the prime bound the
    user asserts dominates the theorem's (unspecified) b(s)/c(s); without
    an entry, screening an s >= 2 datum can at best be conditional.
    """

    genus_threshold: int = 8
    general_base_bound: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.genus_threshold < 1:
            raise TorelliScreenError(
                f"genus threshold must be >= 1, got {self.genus_threshold}"
            )
        for s, bound in self.general_base_bound.items():
            if s < 2:
                raise TorelliScreenError(
                    f"general-base bounds apply to base genus >= 2, got s={s}"
                )
            if bound < 2:
                raise TorelliScreenError(
                    f"bound for base genus {s} must be >= 2, got {bound}"
                )


def _verdict(status, theorem, trace, parameters):
    """Build a Verdict, replaying the trace to enforce soundness."""
    trace = tuple(trace)
    if not trace:
        raise InternalInvariantError("verdict with empty trace")
    if status == EXCLUDED_NON_COMPACT and not all(t.passed for t in trace):
        raise InternalInvariantError(
            f"exclusion emitted with a failing hypothesis: {trace}"
        )
    if status == NOT_COVERED and all(t.passed for t in trace):
        raise InternalInvariantError(
            f"NotCovered emitted with an all-pass trace: {trace}"
        )
    return Verdict(status=status, theorem=theorem, trace=trace, parameters=parameters)


def screen_prime_elliptic(d, cfg):
    """Exclusion over an elliptic base with prime degree.

    Hypotheses: p >= 7, fiber genus >= threshold, at least one branch
    point (the branch divisor must contain a section).
    """
    if d.s != 1 or not is_prime(d.n):
        raise WrongShape(
            f"prime-elliptic screen needs s=1 and prime n, got s={d.s}, n={d.n}"
        )
    p, r = d.n, d.r
    g = fiber_genus(d)
    th = cfg.genus_threshold
    trace = [
        TraceEntry("prime degree p >= 7", f"p={p}", p >= 7),
        TraceEntry(f"fiber genus g >= {th}", f"g={g}", g >= th),
        TraceEntry("branch divisor non-empty (r >= 1)", f"r={r}", r >= 1),
    ]
    status = EXCLUDED_NON_COMPACT if all(t.passed for t in trace) else NOT_COVERED
    return _verdict(
        status,
        "Thm:non-comp",
        trace,
        {"p": str(p), "g": str(g), "r": str(r), "genus_threshold": str(th)},
    )


def screen_composite_elliptic(d, cfg):
    """Exclusion over an elliptic base with composite degree.

    Reduces to the degree-p quotient for the largest prime factor p >= 7;
    needs total ramification so that all r >= 3 branch points survive the
    quotient, whose genus must also clear the threshold.
    """
    if d.s != 1 or is_prime(d.n):
        raise WrongShape(
            f"composite-elliptic screen needs s=1 and composite n, "
            f"got s={d.s}, n={d.n}"
        )
    factors = prime_factors(d.n)
    p = max(factors)
    g = fiber_genus(d)
    r = d.r
    th = cfg.genus_threshold
    totally = is_totally_ramified(d)
    quotient = quotient_datum(d, p)
    gq = fiber_genus(quotient.datum)
    trace = [
        TraceEntry(
            "n has a prime factor p >= 7", f"largest prime factor {p}", p >= 7
        ),
        TraceEntry(
            "totally ramified (gcd(n, u_k) = 1 for all k)",
            "yes" if totally else "no",
            totally,
        ),
        TraceEntry("at least 3 branch points (r >= 3)", f"r={r}", r >= 3),
        TraceEntry(f"fiber genus g >= {th}", f"g={g}", g >= th),
        TraceEntry(
            f"degree-{p} quotient genus g' >= {th}", f"g'={gq}", gq >= th
        ),
    ]
    status = EXCLUDED_NON_COMPACT if all(t.passed for t in trace) else NOT_COVERED
    return _verdict(
        status,
        "Thm:composite-n",
        trace,
        {
            "p": str(p),
            "n_cofactor": str(d.n // p),
            "g": str(g),
            "r": str(r),
            "quotient_genus": str(gq),
            "genus_threshold": str(th),
        },
    )


def screen_general_base(d, cfg):
    """Conditional exclusion over a base of genus s >= 2.

    The theorems only prove that some prime bound b(s) (prime degree) or
    c(s) (prime factor of composite degree) exists; no value is known.  A
    user-configured bound stands in for it, so the strongest status here
    is ConditionallyExcluded — contingent on the user's assertion that the
    configured value dominates the true bound.  Without a configured
    bound, the bound check is recorded as unverifiable and the verdict is
    conditional whenever every checkable hypothesis passes.
    """
    if d.s < 2:
        raise WrongShape(f"general-base screen needs s >= 2, got s={d.s}")
    s = d.s
    prime = is_prime(d.n)
    theorem = "Thm:non-comp-p-gen" if prime else "Thm:non-comp-n-gen"
    bound_name = f"b({s})" if prime else f"c({s})"
    bound = cfg.general_base_bound.get(s)
    g = fiber_genus(d)
    r = d.r
    th = cfg.genus_threshold
    p = d.n if prime else max(prime_factors(d.n))

    trace = []
    if bound is None:
        trace.append(
            TraceEntry(
                f"prime bound {bound_name} configured",
                "unspecified",
                False,
            )
        )
    elif prime:
        trace.append(
            TraceEntry(
                f"prime degree p >= {bound} (user asserts {bound} >= {bound_name})",
                f"p={p}",
                p >= bound,
            )
        )
    else:
        trace.append(
            TraceEntry(
                f"prime factor p >= {bound} (user asserts {bound} >= {bound_name})",
                f"largest prime factor {p}",
                p >= bound,
            )
        )

    genus_hypothesis = (
        f"fiber genus g >= {th} (threshold assumed independent of base genus)"
    )
    if prime:
        trace.append(TraceEntry(genus_hypothesis, f"g={g}", g >= th))
        trace.append(
            TraceEntry("branch divisor non-empty (r >= 1)", f"r={r}", r >= 1)
        )
        parameters = {
            "s": str(s),
            "p": str(p),
            "g": str(g),
            "r": str(r),
            "bound": "unset" if bound is None else str(bound),
            "genus_threshold": str(th),
        }
    else:
        totally = is_totally_ramified(d)
        quotient = quotient_datum(d, p)
        gq = fiber_genus(quotient.datum)
        trace.append(
            TraceEntry(
                "totally ramified (gcd(n, u_k) = 1 for all k)",
                "yes" if totally else "no",
                totally,
            )
        )
        trace.append(
            TraceEntry("at least 3 branch points (r >= 3)", f"r={r}", r >= 3)
        )
        trace.append(TraceEntry(genus_hypothesis, f"g={g}", g >= th))
        trace.append(
            TraceEntry(
                f"degree-{p} quotient genus g' >= {th}", f"g'={gq}", gq >= th
            )
        )
        parameters = {
            "s": str(s),
            "p": str(p),
            "g": str(g),
            "r": str(r),
            "quotient_genus": str(gq),
            "bound": "unset" if bound is None else str(bound),
            "genus_threshold": str(th),
        }

    checkable = trace[1:] if bound is None else trace
    if all(t.passed for t in checkable):
        status = CONDITIONALLY_EXCLUDED
    else:
        status = NOT_COVERED
    return _verdict(status, theorem, trace, parameters)


def screen(d, cfg=None):
    """Dispatch a datum to the applicable screener.

    Data no theorem can touch (empty branch divisor, genus-0 base, degree
    2 or 3) come back NotCovered with a one-line explanatory trace.
    """
    cfg = cfg if cfg is not None else ScreenConfig()
    if d.r == 0:
        return _verdict(
            NOT_COVERED,
            "none",
            [
                TraceEntry(
                    "branch divisor contains a section (r >= 1)",
                    "r=0",
                    False,
                )
            ],
            {"r": "0"},
        )
    if d.s == 0:
        return _verdict(
            NOT_COVERED,
            "none",
            [
                TraceEntry(
                    "base genus covered by an exclusion theorem (s >= 1)",
                    "s=0",
                    False,
                )
            ],
            {"s": "0"},
        )
    if d.n <= 3:
        return _verdict(
            NOT_COVERED,
            "none",
            [
                TraceEntry(
                    "degree large enough for any exclusion theorem (n >= 4)",
                    f"n={d.n}",
                    False,
                )
            ],
            {"n": str(d.n)},
        )
    if d.s == 1:
        if is_prime(d.n):
            return screen_prime_elliptic(d, cfg)
        return screen_composite_elliptic(d, cfg)
    return screen_general_base(d, cfg)


def _as_sorted_values(spec_range):
    if isinstance(spec_range, int):
        return [spec_range]
    values = sorted(set(spec_range))
    return values


def enumerate_data(n_range, s, r_range, g_max):
    """Yield one canonical representative per class of valid data.

    Classes are taken under branch-point permutation and the unit action;
    representatives are emitted in lexicographic order by (n, r, u).
    Data with fiber genus above g_max are skipped.
    """
    for n in _as_sorted_values(n_range):
        for r in _as_sorted_values(r_range):
            yield from _enumerate_fixed(n, s, r, g_max)


def _enumerate_fixed(n, s, r, g_max):
    if n < 2 or s < 0 or r < 0:
        return
    base = n * (s - 1) + 1
    max_excess = 2 * (g_max - base)
    if r == 0:
        if s >= 1 and base <= g_max:
            yield validate(n, s, ())
        return
    if max_excess < 0:
        return

    u = [0] * r

    def ascending(pos, low, total, excess):
        if pos == r - 1:
            first = max(low, 1)
            v0 = (-total) % n
            v = v0 + ((first - v0 + n - 1) // n) * n
            while v <= n - 1:
                step = n - gcd(n, v)
                if excess + step <= max_excess:
                    u[pos] = v
                    yield tuple(u)
                v += n
            return
        for v in range(max(low, 1), n):
            step = n - gcd(n, v)
            if excess + step > max_excess:
                continue
            u[pos] = v
            yield from ascending(pos + 1, v, total + v, excess + step)

    for cand in ascending(0, 1, 0, 0):
        if s == 0 and gcd(n, *cand) != 1:
            continue
        if backend.canonical_u(n, cand) != cand:
            continue
        yield validate(n, s, cand)


@dataclass(frozen=True)
class ReportRow:
    """One batch-screen result: datum plus every computed invariant."""

    datum: CoverDatum
    genus: int
    hodge: tuple[int, ...]
    flat_bounds: "FlatRankBounds"
    verdict: Verdict

    def to_json_dict(self):
        return {
            "datum": self.datum.to_json_dict(),
            "genus": self.genus,
            "hodge": list(self.hodge),
            "flat_bounds": self.flat_bounds.to_json_dict(),
            "verdict": self.verdict.to_json_dict(),
        }


def _resolve_threads(threads):
    if threads is None:
        env = os.environ.get("TORELLI_SCREEN_THREADS", "").strip()
        if env:
            try:
                threads = int(env)
            except ValueError:
                raise TorelliScreenError(
                    f"TORELLI_SCREEN_THREADS must be an integer, got {env!r}"
                ) from None
        else:
            threads = os.cpu_count() or 1
    if threads < 1:
        raise TorelliScreenError(f"thread count must be >= 1, got {threads}")
    return threads


def _report_row(d, cfg):
    return ReportRow(
        datum=d,
        genus=fiber_genus(d),
        hodge=hodge_table(d).h,
        flat_bounds=flat_rank_lower_bounds(d),
        verdict=screen(d, cfg),
    )


def batch_screen(n_range, s, r_range, g_max, cfg=None, threads=None):
    """Screen every canonical datum in the ranges; yields ReportRows.

    Rows may be computed concurrently (thread count from the ``threads``
    argument, else TORELLI_SCREEN_THREADS, else processor count) but are
    always yielded in enumeration order, so output is deterministic.
    """
    cfg = cfg if cfg is not None else ScreenConfig()
    workers = _resolve_threads(threads)
    data = enumerate_data(n_range, s, r_range, g_max)
    if workers == 1:
        for d in data:
            yield _report_row(d, cfg)
        return
    with ThreadPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(lambda d: _report_row(d, cfg), data)
