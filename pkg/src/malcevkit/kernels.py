"""Backend dispatch for the exhaustive 4-linear residual sweep.

The sweep is the hot path of the whole package (38 416 tuples for a
14-dimensional double).  Two interchangeable backends implement it:

* ``malcevkit._sweep_cy`` — compiled (Cython) int64 kernel, built at install
  time when Cython is available;
* ``malcevkit._sweep_py`` — pure-Python big-integer kernel, always present.

Rational tables are converted to integer tables by clearing denominators
with one global factor.  The residual is homogeneous of degree 3 in the
structure constants, so scaling the whole table rescales every residual by
the cube of the factor and preserves both the zero-set and the first
witness; reported residuals are divided back to the original scale.

Selection: the compiled kernel is used when it imported successfully, the
``MALCEVKIT_FORCE_PURE`` environment variable is unset, and a conservative
worst-case bound on intermediates fits in int64.  Otherwise the pure kernel
runs (arbitrary precision, no overflow).
"""

from __future__ import annotations

import math
import os
from array import array
from fractions import Fraction
from typing import Optional

from . import _sweep_py

try:  # pragma: no cover - exercised only in builds with the extension
    from . import _sweep_cy
except ImportError:  # pragma: no cover
    _sweep_cy = None

__all__ = [
    "available_backends",
    "active_backend",
    "integer_table",
    "mal_exhaustive_witness",
]

_FORCE_PURE_ENV = "MALCEVKIT_FORCE_PURE"

# Residual components are sums of at most 5*n^2 products of three table
# entries; require headroom below 2^62 to rule out int64 overflow.
_INT64_SAFE = 1 << 62


def available_backends() -> tuple[str, ...]:
    return ("compiled", "pure") if _sweep_cy is not None else ("pure",)


def active_backend() -> str:
    """Backend the dispatcher would pick for a small well-bounded table."""
    if _sweep_cy is None or os.environ.get(_FORCE_PURE_ENV):
        return "pure"
    return "compiled"


def integer_table(gamma) -> tuple[list, int]:
    """Clear denominators of a nested Fraction table by one global factor.

    Returns ``(int_table, factor)`` with ``int_table[i][j][k] ==
    gamma[i][j][k] * factor`` exactly.
    """
    n = len(gamma)
    factor = 1
    for i in range(n):
        for j in range(n):
            for value in gamma[i][j]:
                factor = factor * value.denominator // math.gcd(
                    factor, value.denominator
                )
    table = [
        [[int(value * factor) for value in gamma[i][j]] for j in range(n)]
        for i in range(n)
    ]
    return table, factor


def _within_int64(table, n: int) -> bool:
    g = max((abs(v) for row in table for vec in row for v in vec), default=0)
    return 5 * n * n * g**3 < _INT64_SAFE


def mal_exhaustive_witness(gamma) -> Optional[tuple]:
    """Exhaustive 4-linear identity sweep over a Fraction table.

    Returns None when the identity holds on all basis 4-tuples, else the
    lexicographically first ``(a, b, c, d, residual)`` with ``residual`` a
    tuple of Fractions in the scale of the input table.
    """
    n = len(gamma)
    if n == 0:
        return None
    table, factor = integer_table(gamma)
    use_compiled = (
        _sweep_cy is not None
        and not os.environ.get(_FORCE_PURE_ENV)
        and _within_int64(table, n)
    )
    if use_compiled:
        flat = array("q", [table[i][j][k] for i in range(n) for j in range(n) for k in range(n)])
        hit = _sweep_cy.mal_witness(flat, n)
    else:
        hit = _sweep_py.mal_witness(table, n)
    if hit is None:
        return None
    a, b, c, d, residual = hit
    scale = Fraction(factor) ** 3
    return (a, b, c, d, tuple(Fraction(v) / scale for v in residual))
