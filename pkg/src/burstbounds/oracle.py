"""Brute-force ground truth by exhaustive enumeration of bit vectors.

Bit vectors are tuples of 0/1 indexed left to right from position 0. When
vectors are enumerated from integers, bit ``i`` of the integer is position
``i``, and reports order patterns by that integer value.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

from . import bounds
from .combinatorics import (
    InvalidParameter,
    _interior,
    cbc_weight2_threshold,
    count_run_exact,
    min_burst_weight,
)

DEFAULT_LIMIT = 20

ALL_ZERO = "AllZero"
SINGLE_SYMBOL = "SingleSymbol"
QUALIFYING_BURST = "QualifyingBurst"
MULTIPLE_MAXIMAL_GAPS = "MultipleMaximalGaps"
BURST_TOO_LONG = "BurstTooLong"
INTERNAL_RUN_TOO_LONG = "InternalRunTooLong"


class EnumerationLimitExceeded(InvalidParameter):
    pass


class NoQualifyingBurst(LookupError):
    """No pattern in the enumeration has a qualifying burst of the requested length."""


@dataclass(frozen=True)
class SubblockPattern:
    bits: tuple
    weight: int
    cyclic_zero_runs: tuple
    kind: str
    burst_start: Optional[int] = None
    burst_len: Optional[int] = None
    gap_len: Optional[int] = None

    @property
    def value(self) -> int:
        return bits_to_int(self.bits)

    def __str__(self):
        return "".join(map(str, self.bits))


@dataclass
class Mismatch:
    pattern: SubblockPattern
    formula_multiplicity: int
    oracle_multiplicity: int
    reason: str


@dataclass
class DiscrepancyReport:
    v: int
    u: int
    formula_count: int
    oracle_count: int
    mismatches: list = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "v": self.v,
            "u": self.u,
            "formula_count": self.formula_count,
            "oracle_count": self.oracle_count,
            "mismatches": [
                {
                    "bits": str(m.pattern),
                    "weight": m.pattern.weight,
                    "kind": m.pattern.kind,
                    "formula_multiplicity": m.formula_multiplicity,
                    "oracle_multiplicity": m.oracle_multiplicity,
                    "reason": m.reason,
                }
                for m in self.mismatches
            ],
        }


def bits_from_int(value: int, length: int) -> tuple:
    return tuple((value >> i) & 1 for i in range(length))


def bits_to_int(bits: Sequence[int]) -> int:
    return sum(1 << i for i, b in enumerate(bits) if b)


def parse_bits(text: str) -> tuple:
    if not text or set(text) - {"0", "1"}:
        raise InvalidParameter(f"not a bit string: {text!r}")
    return tuple(int(c) for c in text)


def cyclic_zero_runs(bits: Sequence[int]) -> list:
    """Maximal zero runs on the cycle as ``(start, length)`` pairs, sorted by start.

    A run may wrap past the last position. The all-zero vector yields the
    single run ``(0, len(bits))``.
    """
    v = len(bits)
    ones = [i for i, b in enumerate(bits) if b]
    if not ones:
        return [(0, v)] if v else []
    runs = []
    for k, i in enumerate(ones):
        nxt = ones[(k + 1) % len(ones)]
        length = (nxt - i - 1) % v
        if length:
            runs.append(((i + 1) % v, length))
    return sorted(runs)


def longest_linear_zero_run(bits: Sequence[int]) -> int:
    best = cur = 0
    for b in bits:
        cur = 0 if b else cur + 1
        best = max(best, cur)
    return best


def classify(bits: Sequence[int], u: int, gap: Optional[int] = None) -> SubblockPattern:
    """Classify a subblock pattern as an end-around burst of length at most ``u``.

    ``gap`` optionally imposes an external error-free gap ``g``; a burst
    holding a zero run of length ``>= g`` is then InternalRunTooLong.
    """
    bits = tuple(int(b) for b in bits)
    v = len(bits)
    if v < 3:
        raise InvalidParameter(f"subblock length must be >= 3, got {v}")
    weight = sum(bits)
    runs = tuple(cyclic_zero_runs(bits))
    base = dict(bits=bits, weight=weight, cyclic_zero_runs=runs)
    if weight == 0:
        return SubblockPattern(kind=ALL_ZERO, **base)
    if weight == 1:
        return SubblockPattern(kind=SINGLE_SYMBOL, **base)
    if not runs:
        return SubblockPattern(kind=BURST_TOO_LONG, **base, burst_len=v, gap_len=0)
    gmax = max(length for _, length in runs)
    longest = [r for r in runs if r[1] == gmax]
    if len(longest) > 1:
        return SubblockPattern(kind=MULTIPLE_MAXIMAL_GAPS, **base)
    gap_start = longest[0][0]
    burst = dict(burst_start=(gap_start + gmax) % v, burst_len=v - gmax, gap_len=gmax)
    if gap is not None and gmax < gap:
        return SubblockPattern(kind=INTERNAL_RUN_TOO_LONG, **base, **burst)
    if v - gmax > u:
        return SubblockPattern(kind=BURST_TOO_LONG, **base, **burst)
    return SubblockPattern(kind=QUALIFYING_BURST, **base, **burst)


def _check_limit(length: int, limit: int) -> None:
    if length > limit:
        raise EnumerationLimitExceeded(f"length {length} exceeds enumeration limit {limit}")


@lru_cache(maxsize=32)
def _classified(v: int) -> tuple:
    # u = v accepts every unique-gap burst; callers filter on burst_len
    return tuple(classify(bits_from_int(i, v), v) for i in range(1 << v))


def oracle_subblock_burst_count(v: int, u: int, limit: int = DEFAULT_LIMIT) -> int:
    """Exhaustive count of weight >= 2 vectors holding a qualifying burst of length <= ``u``."""
    _check_limit(v, limit)
    if v < 3 or not 2 <= u <= v - 1:
        raise InvalidParameter(f"need v >= 3 and 2 <= u <= v-1, got v={v}, u={u}")
    return sum(
        1 for p in _classified(v) if p.kind == QUALIFYING_BURST and p.burst_len <= u
    )


@lru_cache(maxsize=64)
def _run_histogram(x: int) -> Counter:
    hist = Counter()
    for i in range(1 << x):
        bits = bits_from_int(i, x)
        hist[sum(bits), longest_linear_zero_run(bits)] += 1
    return hist


def oracle_run_exact_count(x: int, y: int, z: int, limit: int = DEFAULT_LIMIT) -> int:
    """Exhaustive count of length-``x`` vectors with ``y`` ones and longest linear zero run ``z``."""
    _check_limit(x, limit)
    if min(x, y, z) < 0:
        raise InvalidParameter(f"arguments must be nonnegative, got ({x}, {y}, {z})")
    return _run_histogram(x)[y, z]


def corollary2_sum(x: int, n: int) -> int:
    return sum(_interior(x, y, z, n) for y in range(x + 1) for z in range(x + 1))


def verify_corollary2(x: int, n: int) -> bool:
    """Whether the interior counts of a length-``x+2`` burst sum to ``2**x`` over all y, z."""
    return corollary2_sum(x, n) == 2**x


@dataclass(frozen=True)
class Theorem1Check:
    bound: int
    achieved_min: int
    holds: bool


def verify_theorem1(v: int, u: int, limit: int = DEFAULT_LIMIT) -> Theorem1Check:
    """Compare the weight bound to the lightest qualifying burst of length exactly ``u``."""
    _check_limit(v, limit)
    if v < 3 or not 2 <= u <= v - 1:
        raise InvalidParameter(f"need v >= 3 and 2 <= u <= v-1, got v={v}, u={u}")
    weights = [
        p.weight for p in _classified(v) if p.kind == QUALIFYING_BURST and p.burst_len == u
    ]
    if not weights:
        raise NoQualifyingBurst(f"no qualifying burst of length {u} for v={v}")
    bound = min_burst_weight(u, v - u)
    achieved = min(weights)
    return Theorem1Check(bound, achieved, achieved >= bound)


def _formula_patterns(v: int, u: int) -> tuple:
    """Multiset of patterns implied by the summation, with the branch that admitted each."""
    counts = Counter()
    branch = {}
    threshold = cbc_weight2_threshold(v)
    for x in range(u - 1):
        zmax = v - x - 3
        for inner in range(1 << x):
            ibits = bits_from_int(inner, x)
            y = sum(ibits)
            z = longest_linear_zero_run(ibits)
            if z > zmax:
                continue
            cbc_branch = y == 0 and x == z and x < threshold
            if not cbc_branch and count_run_exact(x, y, z) == 0:
                continue
            for start in range(v):
                pat = [0] * v
                pat[start] = 1
                for k, b in enumerate(ibits):
                    pat[(start + 1 + k) % v] = b
                pat[(start + x + 1) % v] = 1
                key = bits_to_int(pat)
                counts[key] += 1
                branch[key] = "all-zero interior branch" if cbc_branch else "exact-run branch"
    return counts, branch


def compare_subblock_counts(v: int, u: int, limit: int = DEFAULT_LIMIT) -> DiscrepancyReport:
    """Reconcile the closed-form subblock count with the exhaustive classifier, pattern by pattern."""
    oracle_count = oracle_subblock_burst_count(v, u, limit)
    formula_count = bounds.subblock_burst_count(v, u)
    counts, branch = _formula_patterns(v, u)
    if sum(counts.values()) != formula_count:
        raise RuntimeError(f"exact-run counts disagree with enumerated interiors at v={v}, u={u}")
    classified = _classified(v)
    mismatches = []
    keys = set(counts) | {
        i for i, p in enumerate(classified) if p.kind == QUALIFYING_BURST and p.burst_len <= u
    }
    for key in sorted(keys):
        pat = classify(classified[key].bits, u)
        in_oracle = int(pat.kind == QUALIFYING_BURST)
        mult = counts.get(key, 0)
        if mult == in_oracle:
            continue
        if mult == 0:
            reason = f"admitted by the classifier ({pat.kind}) but not by the summation"
        elif in_oracle == 0:
            reason = f"counted by the {branch[key]} but classified {pat.kind}"
        else:
            reason = f"counted {mult} times by the {branch[key]}"
        mismatches.append(Mismatch(pat, mult, in_oracle, reason))
    return DiscrepancyReport(v, u, formula_count, oracle_count, mismatches)
