import pytest
from hypothesis import given, strategies as st

from burstbounds import oracle
from burstbounds.bounds import cbc_limit, subblock_burst_count
from burstbounds.combinatorics import InvalidParameter, count_run_exact
from burstbounds.oracle import (
    classify,
    compare_subblock_counts,
    corollary2_sum,
    cyclic_zero_runs,
    oracle_run_exact_count,
    oracle_subblock_burst_count,
    parse_bits,
    verify_corollary2,
    verify_theorem1,
)

EXAMPLE = "01010000010001010001"


def test_classify_worked_example():
    pat = classify(parse_bits(EXAMPLE), 15)
    assert pat.kind == oracle.QUALIFYING_BURST
    assert (pat.burst_start, pat.burst_len, pat.gap_len) == (9, 15, 5)
    assert pat.weight == 6
    assert pat.cyclic_zero_runs == ((0, 1), (2, 1), (4, 5), (10, 3), (14, 1), (16, 3))


def test_classify_worked_example_too_long_for_short_bursts():
    assert classify(parse_bits(EXAMPLE), 14).kind == oracle.BURST_TOO_LONG


def test_classify_external_gap():
    assert classify(parse_bits(EXAMPLE), 15, gap=6).kind == oracle.INTERNAL_RUN_TOO_LONG
    assert classify(parse_bits(EXAMPLE), 15, gap=5).kind == oracle.QUALIFYING_BURST


@pytest.mark.parametrize("u", [2, 5, 19])
def test_classify_all_zero(u):
    assert classify((0,) * 20, u).kind == oracle.ALL_ZERO


def test_classify_single_symbol():
    assert classify(parse_bits("000100"), 3).kind == oracle.SINGLE_SYMBOL


def test_classify_multiple_maximal_gaps():
    pat = classify(parse_bits("101010"), 5)
    assert pat.kind == oracle.MULTIPLE_MAXIMAL_GAPS
    assert pat.cyclic_zero_runs == ((1, 1), (3, 1), (5, 1))


def test_classify_all_ones_has_no_gap():
    assert classify((1,) * 6, 5).kind == oracle.BURST_TOO_LONG


def test_classify_wrapping_run():
    pat = classify(parse_bits("0110000"), 3)
    assert pat.cyclic_zero_runs == ((3, 5),)
    assert (pat.burst_start, pat.burst_len, pat.gap_len) == (1, 2, 5)


def test_classify_rejects_short_vectors():
    with pytest.raises(InvalidParameter):
        classify((1, 1), 1)


@given(st.lists(st.integers(0, 1), min_size=3, max_size=24), st.data())
def test_classify_rotation_covariant(bits, data):
    v = len(bits)
    u = data.draw(st.integers(2, v - 1))
    r = data.draw(st.integers(0, v - 1))
    rotated = bits[-r:] + bits[:-r] if r else bits
    a, b = classify(bits, u), classify(rotated, u)
    assert a.kind == b.kind
    assert a.weight == b.weight
    if a.burst_start is not None:
        assert b.burst_start == (a.burst_start + r) % v
        assert (a.burst_len, a.gap_len) == (b.burst_len, b.gap_len)


@given(st.lists(st.integers(0, 1), min_size=3, max_size=24))
def test_runs_partition_cycle(bits):
    runs = cyclic_zero_runs(bits)
    assert sum(length for _, length in runs) + sum(bits) == len(bits)
    for start, length in runs:
        assert all(bits[(start + k) % len(bits)] == 0 for k in range(length))


@given(st.lists(st.integers(0, 1), min_size=3, max_size=24))
def test_qualifying_burst_invariants(bits):
    v = len(bits)
    pat = classify(bits, v - 1)
    if pat.kind != oracle.QUALIFYING_BURST:
        return
    assert pat.gap_len == v - pat.burst_len
    inner = [l for s, l in pat.cyclic_zero_runs if (s, l) != ((pat.burst_start - pat.gap_len) % v, pat.gap_len)]
    assert all(l < pat.gap_len for l in inner)
    assert bits[pat.burst_start] == 1
    assert bits[(pat.burst_start + pat.burst_len - 1) % v] == 1


@pytest.mark.parametrize("v,u,want", [(6, 2, 6), (8, 2, 8), (5, 4, 20)])
def test_oracle_subblock_examples(v, u, want):
    assert oracle_subblock_burst_count(v, u) == want


def test_oracle_subblock_limit():
    with pytest.raises(oracle.EnumerationLimitExceeded):
        oracle_subblock_burst_count(21, 5)
    with pytest.raises(oracle.EnumerationLimitExceeded):
        oracle_subblock_burst_count(10, 5, limit=8)


@pytest.mark.parametrize("x,y,z,want", [(4, 2, 1, 3), (5, 5, 0, 1), (3, 1, 2, 2), (0, 0, 0, 1)])
def test_oracle_run_exact_examples(x, y, z, want):
    assert oracle_run_exact_count(x, y, z) == want


def test_oracle_run_exact_limit():
    with pytest.raises(oracle.EnumerationLimitExceeded):
        oracle_run_exact_count(21, 0, 0)


def test_oracle_agrees_with_formula_x_le_12():
    for x in range(13):
        for y in range(x + 1):
            for z in range(x - y + 1):
                assert oracle_run_exact_count(x, y, z) == count_run_exact(x, y, z)


@pytest.mark.parametrize("x,n,total", [(0, 10, 1), (3, 20, 8), (10, 40, 1024)])
def test_corollary2_examples(x, n, total):
    assert corollary2_sum(x, n) == total
    assert verify_corollary2(x, n)


def test_corollary2_holds_past_all_zero_branch():
    # x = 4 with n = 10: floor(n/2 - 2) = 3 and the x = z cell still counts via the exact-run branch
    assert corollary2_sum(4, 10) == 16


@pytest.mark.parametrize(
    "v,u,bound,achieved",
    [(12, 9, 4, 4), (8, 3, 2, 2), (6, 5, 5, 5)],
)
def test_theorem1_examples(v, u, bound, achieved):
    chk = verify_theorem1(v, u)
    assert (chk.bound, chk.achieved_min, chk.holds) == (bound, achieved, True)


def test_theorem1_rejects_bad_params():
    with pytest.raises(InvalidParameter):
        verify_theorem1(6, 6)


@pytest.mark.parametrize("v,u", [(7, 3), (6, 2), (8, 4), (10, 8), (11, 10)])
def test_compare_examples(v, u):
    rep = compare_subblock_counts(v, u)
    assert rep.formula_count == subblock_burst_count(v, u)
    assert rep.oracle_count == oracle_subblock_burst_count(v, u)
    assert rep.consistent == (rep.formula_count == rep.oracle_count)


def test_compare_v8_u4_weight2_boundary():
    # interior run 2, gap 4 for v = 8: both sides count the 8 rotations of 10010000
    rep = compare_subblock_counts(8, 4)
    assert rep.mismatches == []
    assert rep.formula_count == rep.oracle_count == 8 * (1 + 2 + 4)


def test_compare_cbc_regime_clean():
    for v in range(3, 13):
        for u in range(2, cbc_limit(v) + 1):
            if u <= v - 1:
                assert compare_subblock_counts(v, u).consistent, (v, u)


def test_report_dict_roundtrip():
    d = compare_subblock_counts(6, 2).to_dict()
    assert d == {"v": 6, "u": 2, "formula_count": 6, "oracle_count": 6, "mismatches": []}
