"""Exact invariants of families of cyclic covers of curves, and mechanical
screening of branch data against non-existence theorems for non-compact
Shimura curves in the Torelli locus.

All arithmetic is exact (integers and rationals); all values are immutable
and safe to share across threads.
"""

from torelli_screen.backend import backend_name
from torelli_screen.cover import (
    CoverDatum,
    QuotientResult,
    canonicalize,
    fiber_genus,
    is_totally_ramified,
    is_unit_branch,
    monodromy_orbit_count,
    points_over_branch,
    quotient_datum,
    validate,
)
from torelli_screen.higgs import (
    FlatRankBounds,
    eigen_rank_difference,
    fibration_negativity,
    flat_rank_lower_bounds,
    rank_positive_characters,
    second_fibration_witness,
)
from torelli_screen.hodge import (
    HodgeTable,
    OrbitPartition,
    cw_dimension,
    cw_unit_branch_closed_form,
    eigen_fiber_degree,
    galois_orbits,
    hodge_table,
    rank_local_system,
    rr_oracle_dimension,
)
from torelli_screen.screen import (
    CONDITIONALLY_EXCLUDED,
    EXCLUDED_NON_COMPACT,
    NOT_COVERED,
    NOT_COVERED_DISCLAIMER,
    ReportRow,
    ScreenConfig,
    TraceEntry,
    Verdict,
    batch_screen,
    enumerate_data,
    screen,
    screen_composite_elliptic,
    screen_general_base,
    screen_prime_elliptic,
)

__version__ = "0.1.0"

__all__ = [
    "CONDITIONALLY_EXCLUDED",
    "CoverDatum",
    "EXCLUDED_NON_COMPACT",
    "FlatRankBounds",
    "HodgeTable",
    "NOT_COVERED",
    "NOT_COVERED_DISCLAIMER",
    "OrbitPartition",
    "QuotientResult",
    "ReportRow",
    "ScreenConfig",
    "TraceEntry",
    "Verdict",
    "backend_name",
    "batch_screen",
    "canonicalize",
    "cw_dimension",
    "cw_unit_branch_closed_form",
    "eigen_fiber_degree",
    "eigen_rank_difference",
    "enumerate_data",
    "fiber_genus",
    "fibration_negativity",
    "flat_rank_lower_bounds",
    "galois_orbits",
    "hodge_table",
    "is_totally_ramified",
    "is_unit_branch",
    "monodromy_orbit_count",
    "points_over_branch",
    "quotient_datum",
    "rank_local_system",
    "rank_positive_characters",
    "rr_oracle_dimension",
    "screen",
    "screen_composite_elliptic",
    "screen_general_base",
    "screen_prime_elliptic",
    "second_fibration_witness",
    "validate",
]
