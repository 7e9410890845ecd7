"""Right-hand sides of the coset-leader inequalities and their rate forms.

Every ``*_rhs`` function returns the exact integer lower bound on
``2**(n - k)``. :func:`to_bound_result` turns one into the smallest
admissible redundancy and an upper bound on the code rate ``k / n``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .combinatorics import InvalidParameter, _interior, _run_at_most, cbc_weight2_threshold


@dataclass(frozen=True)
class CodeGeometry:
    """A block of ``n = t * v`` symbols split into ``t`` subblocks of length ``v``."""

    t: int
    v: int

    def __post_init__(self):
        if self.t < 1 or self.v < 1:
            raise InvalidParameter(f"need t >= 1 and v >= 1, got t={self.t}, v={self.v}")

    @property
    def n(self) -> int:
        return self.t * self.v


@dataclass(frozen=True)
class GapLimited:
    u: int


@dataclass(frozen=True)
class SymbolLimited:
    E: int


@dataclass(frozen=True)
class FullSubblock:
    pass


Capability = Union[GapLimited, SymbolLimited, FullSubblock]


@dataclass(frozen=True)
class BoundQuery:
    geometry: CodeGeometry
    M: int
    capability: Capability

    def __post_init__(self):
        _check_m(self.geometry.t, self.M)
        cap = self.capability
        if isinstance(cap, GapLimited):
            _check_u(self.geometry.v, cap.u)
        elif isinstance(cap, SymbolLimited):
            _check_e(self.geometry.v, cap.E)
        elif not isinstance(cap, FullSubblock):
            raise InvalidParameter(f"unknown capability {cap!r}")


@dataclass(frozen=True)
class BoundResult:
    rhs: int
    min_redundancy: int
    rate_upper: float
    query: object = None


def _check_m(t: int, M: int) -> None:
    if t < 1:
        raise InvalidParameter(f"subblock count t={t} must be >= 1")
    if not 1 <= M <= t:
        raise InvalidParameter(f"need 1 <= M <= t, got M={M}, t={t}")


def _check_u(v: int, u: int) -> None:
    if not 2 <= u <= v - 1:
        raise InvalidParameter(f"gap-limited burst length needs 2 <= u <= v-1, got u={u}, v={v}")


def _check_e(v: int, E: int) -> None:
    if not 1 <= E <= v:
        raise InvalidParameter(f"symbol limit needs 1 <= E <= v, got E={E}, v={v}")


def cbc_limit(n: int) -> int:
    """Longest burst length, floor((n+1)/2), that is unambiguous on a cycle of length ``n``."""
    if n < 1:
        raise InvalidParameter(f"length n={n} must be >= 1")
    return (n + 1) // 2


def is_cbc_conforming(n: int, burst_len: int) -> bool:
    return burst_len <= cbc_limit(n)


@lru_cache(maxsize=None)
def _layer(x: int, v: int) -> int:
    """Sum over y and z <= v-x-3 of the interior counts for bursts of length x+2."""
    zmax = v - x - 3
    total = 0
    for y in range(x + 1):
        # telescoped z-sum of exact-run counts, clipped to the valid cells z <= x - y
        top = min(zmax, x - y)
        if top >= 0:
            total += _run_at_most(x, y, top) - _run_at_most(x, y, -1)
    # all-zero interior override; no-op whenever it agrees with the exact-run count
    if x <= zmax and x < cbc_weight2_threshold(v):
        total += _interior(x, 0, x, v) - (_run_at_most(x, 0, x) - _run_at_most(x, 0, x - 1))
    return total


def subblock_burst_count(v: int, u: int) -> int:
    """Correctable end-around bursts of weight >= 2 and length <= ``u`` in one subblock.

    This is ``v`` gap placements times the summed interior counts over burst
    lengths 2..u.
    """
    _check_u(v, u)
    return v * sum(_layer(x, v) for x in range(u - 1))


def _power_sum(t: int, M: int, base: int) -> int:
    return sum(math.comb(t, j) * base**j for j in range(1, M + 1))


def mpbc_gap_rhs(t: int, v: int, M: int, u: int) -> int:
    """Coset-leader count for ``M``-of-``t`` subblock correction with cyclic bursts up to ``u``."""
    _check_m(t, M)
    _check_u(v, u)
    return _power_sum(t, M, subblock_burst_count(v, u)) + t * v + 1


@lru_cache(maxsize=None)
def _ball(v: int, E: int) -> int:
    return sum(math.comb(v, l) for l in range(1, E + 1))


def mpbc_nogap_rhs(t: int, v: int, M: int, E: int) -> int:
    """Coset-leader count for ``M``-of-``t`` subblock correction of up to ``E`` symbols each."""
    _check_m(t, M)
    _check_e(v, E)
    return _power_sum(t, M, _ball(v, E)) + 1


def full_subblock_rhs(t: int, v: int, M: int) -> int:
    """Coset-leader count when whole subblocks are correctable (``E = v``)."""
    _check_m(t, M)
    if v < 1:
        raise InvalidParameter(f"subblock length v={v} must be >= 1")
    return _power_sum(t, M, 2**v - 1) + 1


def sbc_rhs(n: int, u: int) -> int:
    """Single-burst bound: the one-subblock case of :func:`mpbc_gap_rhs`."""
    if not 2 <= u <= n - 1:
        raise InvalidParameter(f"single-burst bound needs 2 <= u <= n-1, got u={u}, n={n}")
    return subblock_burst_count(n, u) + n + 1


def abramson_rhs(n: int, u: int) -> int:
    """Classical burst Hamming bound ``n * 2**(u-1) + 1``."""
    if u < 1 or n < 1:
        raise InvalidParameter(f"need n >= 1 and u >= 1, got n={n}, u={u}")
    return n * 2 ** (u - 1) + 1


def log2_big(x: int) -> float:
    """log2 of a positive int using its leading 64 bits; relative error well under 2**-50."""
    if x < 1:
        raise InvalidParameter(f"log2 needs a positive integer, got {x}")
    shift = x.bit_length() - 64
    if shift <= 0:
        return math.log2(x)
    return shift + math.log2(x >> shift)


def min_redundancy(rhs: int) -> int:
    """Smallest ``r`` with ``2**r >= rhs``."""
    if rhs < 1:
        raise InvalidParameter(f"rhs must be >= 1, got {rhs}")
    return (rhs - 1).bit_length()


def to_bound_result(rhs: int, n: int, query=None) -> BoundResult:
    if rhs < 1:
        raise InvalidParameter(f"rhs must be >= 1, got {rhs}")
    if n < 1:
        raise InvalidParameter(f"block length n={n} must be >= 1")
    return BoundResult(rhs, min_redundancy(rhs), 1.0 - log2_big(rhs) / n, query)


def evaluate(query: BoundQuery) -> BoundResult:
    """Compute the bound selected by ``query.capability``."""
    g, cap = query.geometry, query.capability
    if isinstance(cap, GapLimited):
        rhs = mpbc_gap_rhs(g.t, g.v, query.M, cap.u)
    elif isinstance(cap, SymbolLimited):
        rhs = mpbc_nogap_rhs(g.t, g.v, query.M, cap.E)
    else:
        rhs = full_subblock_rhs(g.t, g.v, query.M)
    return to_bound_result(rhs, g.n, query)
