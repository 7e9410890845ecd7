"""Exact counting of binary patterns under maximum zero-run constraints.

All counts are Python ints, so nothing overflows regardless of length.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb


class InvalidParameter(ValueError):
    """Raised when an argument falls outside a function's domain."""


def binomial(n: int, k: int) -> int:
    """C(n, k), with C(n, k) = 0 for k > n."""
    if n < 0 or k < 0:
        raise InvalidParameter(f"binomial needs n, k >= 0, got ({n}, {k})")
    return comb(n, k)


@lru_cache(maxsize=None)
def _run_at_most(c: int, d: int, e: int) -> int:
    # inclusion-exclusion over the d+1 zero runs separated by the d ones
    step = e + 1
    if step == 0:
        # every term is C(c, d) times an alternating binomial row, which sums to 0
        return 0
    total = 0
    for j in range(d + 2):
        rest = c - j * step
        if rest < d:
            # C(rest, d) vanishes from here on
            break
        term = comb(d + 1, j) * comb(rest, d)
        total += -term if j & 1 else term
    return total


def count_run_at_most(c: int, d: int, e: int) -> int:
    """Number of length-``c`` binary vectors with ``d`` ones and no zero run longer than ``e``.

    ``e = -1`` is accepted and gives 0 whenever at least one zero run slot
    exists (every case with ``d + 1 >= 1``).
    """
    if c < 0 or d < 0:
        raise InvalidParameter(f"lengths must be nonnegative, got c={c}, d={d}")
    if d > c:
        raise InvalidParameter(f"ones count d={d} exceeds length c={c}")
    if e < -1:
        raise InvalidParameter(f"max run e={e} must be >= -1")
    return _run_at_most(c, d, e)


def _run_exact(x: int, y: int, z: int) -> int:
    return _run_at_most(x, y, z) - _run_at_most(x, y, z - 1)


def count_run_exact(x: int, y: int, z: int) -> int:
    """Number of length-``x`` vectors with ``y`` ones whose longest zero run is exactly ``z``.

    Only defined for ``x - (y + z) >= 0``; anything else raises
    :class:`InvalidParameter`.
    """
    if x < 0 or y < 0 or z < 0:
        raise InvalidParameter(f"arguments must be nonnegative, got ({x}, {y}, {z})")
    if y > x:
        raise InvalidParameter(f"ones count y={y} exceeds length x={x}")
    if x - (y + z) < 0:
        raise InvalidParameter(f"need x - (y + z) >= 0, got x={x}, y={y}, z={z}")
    return _run_exact(x, y, z)


def cbc_weight2_threshold(v: int) -> int:
    """floor(v/2 - 2): interior lengths strictly below this take the all-zero branch."""
    return (v - 4) // 2


def _interior(x: int, y: int, z: int, v: int) -> int:
    # summation form: cells outside x - (y + z) >= 0 are empty
    if y == 0 and x == z and x < cbc_weight2_threshold(v):
        return 1
    if z < 0 or y > x or x - (y + z) < 0:
        return 0
    return _run_exact(x, y, z)


def interior_count(x: int, y: int, z: int, v: int) -> int:
    """Interior patterns of a burst of length ``x + 2`` with ``y + 2`` ones and longest zero run ``z``.

    The all-zero interior is counted as 1 when ``x = z`` and ``x`` is below
    ``floor(v/2 - 2)``; otherwise this is :func:`count_run_exact`, taken as
    0 where ``x - (y + z) < 0``.
    """
    if min(x, y, z) < 0:
        raise InvalidParameter(f"arguments must be nonnegative, got ({x}, {y}, {z}, {v})")
    if y > x or z > x:
        raise InvalidParameter(f"need y <= x and z <= x, got x={x}, y={y}, z={z}")
    if v < x + 3:
        raise InvalidParameter(f"subblock length v={v} must be at least x + 3 = {x + 3}")
    return _interior(x, y, z, v)


def min_burst_weight(u: int, g: int) -> int:
    """Lower bound ceil((u - 1) / g) + 1 on the weight of a burst of length ``u`` with gap ``g``."""
    if u < 1:
        raise InvalidParameter(f"burst length u={u} must be >= 1")
    if g < 1:
        raise InvalidParameter(f"gap g={g} must be >= 1")
    return -(-(u - 1) // g) + 1
