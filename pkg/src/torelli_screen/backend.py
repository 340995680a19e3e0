"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; the
pure-Python module is the fallback and the reference.  Selection happens
once, at import.  ``TORELLI_SCREEN_BACKEND=python`` forces the fallback,
``TORELLI_SCREEN_BACKEND=c`` makes a missing extension a hard error.

The compiled kernels use int64 arithmetic and are only routed to inside
the documented exactness bounds (degree <= 10^6, at most 10^6 branch
points); anything larger silently takes the pure path, whose Python ints
cannot overflow.
"""

import os

from torelli_screen import _kernels_py

# int64-overflow-free by construction: i*u_k < MAX_DEGREE^2 = 10^12 and
# accumulators stay below MAX_BRANCH * MAX_DEGREE = 10^13.
MAX_DEGREE = 1_000_000
MAX_BRANCH = 1_000_000

_requested = os.environ.get("TORELLI_SCREEN_BACKEND", "").strip().lower()
if _requested not in ("", "c", "python"):
    raise ImportError(
        f"TORELLI_SCREEN_BACKEND must be 'c' or 'python', not {_requested!r}"
    )

_c = None
if _requested != "python":
    try:
        from torelli_screen import _kernels as _c
    except ImportError:
        if _requested == "c":
            raise ImportError(
                "TORELLI_SCREEN_BACKEND=c but the compiled kernels are not "
                "built; reinstall with a C compiler and Cython available"
            )


def backend_name():
    """Name of the active kernel backend: 'c' or 'python'."""
    return "python" if _c is None else "c"


def _compiled_ok(n, r):
    return _c is not None and n <= MAX_DEGREE and r <= MAX_BRANCH


def character_sums(n, u):
    """Dispatching wrapper; see ``_kernels_py.character_sums``."""
    if _compiled_ok(n, len(u)):
        return _c.character_sums(n, u)
    return _kernels_py.character_sums(n, u)


def canonical_u(n, u):
    """Dispatching wrapper; see ``_kernels_py.canonical_u``."""
    if _compiled_ok(n, len(u)):
        return _c.canonical_u(n, u)
    return _kernels_py.canonical_u(n, u)
