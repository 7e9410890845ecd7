"""Grid sweeps comparing the gap-constrained and unconstrained rate bounds."""
from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional

from .bounds import mpbc_gap_rhs, mpbc_nogap_rhs, to_bound_result
from .combinatorics import InvalidParameter

THREADS_ENV = "MPBC_BOUNDS_THREADS"
CSV_FIELDS = ("M", "symbols", "rate_gap", "rate_nogap", "diff", "redundancy_gap", "redundancy_nogap")


@dataclass(frozen=True)
class SweepSpec:
    t: int
    v: int
    m_range: tuple
    sym_range: tuple
    workers: int = 1

    def __post_init__(self):
        (m_lo, m_hi), (s_lo, s_hi) = self.m_range, self.sym_range
        if m_lo > m_hi or s_lo > s_hi:
            raise InvalidParameter("ranges must be nonempty")
        if self.t < 1 or self.v < 1:
            raise InvalidParameter(f"need t >= 1 and v >= 1, got t={self.t}, v={self.v}")
        if m_lo < 1 or m_hi > self.t:
            raise InvalidParameter(f"M range {m_lo}:{m_hi} not within 1:{self.t}")
        if s_lo < 1 or s_hi > self.v:
            raise InvalidParameter(f"symbol range {s_lo}:{s_hi} not within 1:{self.v}")

    def cells(self):
        return [
            (M, s)
            for M in range(self.m_range[0], self.m_range[1] + 1)
            for s in range(self.sym_range[0], self.sym_range[1] + 1)
        ]

    def gap_defined(self, symbols: int) -> bool:
        return 2 <= symbols <= self.v - 1

    def skipped_gap_symbols(self) -> list:
        return [
            s for s in range(self.sym_range[0], self.sym_range[1] + 1) if not self.gap_defined(s)
        ]


@dataclass
class SurfaceRow:
    M: int
    symbols: int
    rate_gap: Optional[float]
    rate_nogap: float
    diff: Optional[float]
    redundancy_gap: Optional[int]
    redundancy_nogap: int


@dataclass
class Surface:
    spec: SweepSpec
    rows: list = field(default_factory=list)

    def argmax_diff(self) -> Optional[SurfaceRow]:
        """Row with the largest diff; ties go to the smallest M, then smallest symbols."""
        best = None
        for row in sorted(self.rows, key=lambda r: (r.M, r.symbols)):
            if row.diff is not None and (best is None or row.diff > best.diff):
                best = row
        return best

    def row(self, M: int, symbols: int) -> SurfaceRow:
        for r in self.rows:
            if r.M == M and r.symbols == symbols:
                return r
        raise KeyError((M, symbols))


def evaluate_cell(t: int, v: int, M: int, symbols: int) -> SurfaceRow:
    n = t * v
    nogap = to_bound_result(mpbc_nogap_rhs(t, v, M, symbols), n)
    if 2 <= symbols <= v - 1:
        gap = to_bound_result(mpbc_gap_rhs(t, v, M, symbols), n)
        return SurfaceRow(
            M, symbols, gap.rate_upper, nogap.rate_upper,
            gap.rate_upper - nogap.rate_upper, gap.min_redundancy, nogap.min_redundancy,
        )
    return SurfaceRow(M, symbols, None, nogap.rate_upper, None, None, nogap.min_redundancy)


def _evaluate_packed(args):
    return evaluate_cell(*args)


def resolve_workers(requested: Optional[int] = None) -> int:
    """Explicit request first, then $MPBC_BOUNDS_THREADS, then 1."""
    if requested is None:
        env = os.environ.get(THREADS_ENV)
        requested = int(env) if env else 1
    if requested < 1:
        raise InvalidParameter(f"worker count must be >= 1, got {requested}")
    return requested


def sweep(spec: SweepSpec) -> Surface:
    jobs = [(spec.t, spec.v, M, s) for M, s in spec.cells()]
    if spec.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=spec.workers) as pool:
            rows = list(pool.map(_evaluate_packed, jobs, chunksize=max(1, len(jobs) // (4 * spec.workers))))
    else:
        rows = [evaluate_cell(*job) for job in jobs]
    rows.sort(key=lambda r: (r.M, r.symbols))
    return Surface(spec, rows)


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _rounded(value):
    return float(f"{value:.12g}") if isinstance(value, float) else value


def to_csv(surface: Surface) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for row in surface.rows:
        writer.writerow(_fmt(getattr(row, name)) for name in CSV_FIELDS)
    return buf.getvalue()


def to_json(surface: Surface) -> str:
    spec = surface.spec
    params = {
        "t": spec.t,
        "v": spec.v,
        "n": spec.t * spec.v,
        "m_range": list(spec.m_range),
        "sym_range": list(spec.sym_range),
        "skipped_gap_symbols": spec.skipped_gap_symbols(),
    }
    rows = [{k: _rounded(val) for k, val in asdict(r).items()} for r in surface.rows]
    return json.dumps({"params": params, "rows": rows}, indent=2) + "\n"


def summary_line(surface: Surface) -> str:
    best = surface.argmax_diff()
    if best is None:
        return "max diff: n/a (gap bound undefined on every grid point)"
    return f"max diff {best.diff:.12g} at M={best.M}, symbols={best.symbols}"
