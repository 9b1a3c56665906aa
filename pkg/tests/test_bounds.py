"""Exact big-integer bound formulas and certified logarithm intervals."""

from __future__ import annotations

import math
import random
from fractions import Fraction
from functools import lru_cache

import pytest

from poset_ramsey.bounds import (
    MultipartiteBoundReport,
    SpindleBoundParams,
    antichain_alpha,
    certified_le,
    chain_bound,
    claim_holds,
    claim_sides,
    compose_bound,
    format_sci,
    log2_interval,
    multipartite_bound_report,
    multipartite_upper_bound,
    spindle_bound_report,
    spindle_upper_bound,
)


# -------------------------------------------------------------- logarithms


def test_log2_interval_exact_on_powers_of_two():
    for e in range(0, 12):
        lo, hi = log2_interval(1 << e)
        assert lo == hi == e
    lo, hi = log2_interval(Fraction(1, 8))
    assert lo == hi == -3


def test_log2_interval_brackets_true_value():
    for x in (3, 5, 7, 100, 12345, Fraction(3, 7), Fraction(1, 1000)):
        lo, hi = log2_interval(x, 20)
        true = math.log2(x if isinstance(x, int) else x.numerator / x.denominator)
        assert float(lo) <= true <= float(hi)
        assert hi - lo <= Fraction(2, 1 << 20)


def test_log2_interval_narrows_with_precision():
    w8 = log2_interval(3, 8)
    w16 = log2_interval(3, 16)
    assert w16[1] - w16[0] < w8[1] - w8[0]
    assert w8[0] <= w16[0] and w16[1] <= w8[1]


def test_log2_interval_rejects_nonpositive():
    with pytest.raises(ValueError):
        log2_interval(0)
    with pytest.raises(ValueError):
        log2_interval(Fraction(-3, 2))
    with pytest.raises(ValueError):
        log2_interval(5, 0)


def test_certified_le():
    one = (Fraction(1), Fraction(1))
    two = (Fraction(2), Fraction(2))
    wide = (Fraction(1, 2), Fraction(3, 2))
    assert certified_le(one, two) is True
    assert certified_le(two, one) is False
    assert certified_le(one, wide) is None


def test_format_sci():
    assert format_sci(0) == "0"
    assert format_sci(12345) == "1.234E+4" or format_sci(12345) == "1.235E+4"
    big = format_sci(math.factorial(300))
    assert "E+" in big and len(big) < 12


# ------------------------------------------------------------------- claim


def test_claim_sides_by_hand():
    assert claim_sides(4, 2, 1, 1, 2) == (2, 4096)
    assert claim_sides(1, 3, 0, 0, 3) == (6, 16)
    assert claim_sides(1, 1, 1, 0, 1) == (1, 0)


def test_claim_holds_examples():
    assert claim_holds(4, 2, 1, 1, 2) is False
    assert claim_holds(1, 3, 0, 0, 3) is False  # 6 vs 2^4
    assert claim_holds(1, 4, 0, 0, 3) is False  # 24 vs 2^5
    assert claim_holds(1, 5, 0, 0, 3) is True   # 120 vs 2^6


def test_claim_validation():
    for bad in [(0, 1, 1, 1, 2), (1, -1, 1, 1, 2), (1, 1, -1, 1, 2),
                (1, 1, 1, -1, 2), (1, 1, 1, 1, 0)]:
        with pytest.raises(ValueError):
            claim_holds(*bad)


def test_claim_s1_convention():
    # right side vanishes; by convention the claim needs k >= 1
    assert claim_holds(10, 0, 1, 1, 1) is False
    assert claim_holds(10, 1, 1, 1, 1) is True
    assert claim_holds(10, 7, 0, 0, 1) is True


@lru_cache(maxsize=None)
def _log2_int(m: int) -> tuple[Fraction, Fraction]:
    # independent certified bracket: m**16384 has floor(16384*log2 m)+1 bits
    power = m ** 16384
    bits = power.bit_length()
    return Fraction(bits - 1, 16384), Fraction(bits, 16384)


def _oracle_claim(n: int, k: int, r: int, t: int, s: int) -> bool:
    """Interval-arithmetic comparison of the two sides' logarithms, with an
    exact integer fallback when the intervals touch."""
    lhs_lo = lhs_hi = Fraction(0)
    for i in range(2, k + 1):
        lo, hi = _log2_int(i)
        lhs_lo += lo
        lhs_hi += hi
    rhs_lo = rhs_hi = Fraction((r + t) * (n + k))
    if s > 2:
        lo, hi = _log2_int(s - 1)
        rhs_lo += (k + 1) * lo
        rhs_hi += (k + 1) * hi
    if lhs_lo > rhs_hi:
        return True
    if lhs_hi <= rhs_lo:
        return False
    return math.factorial(k) > (1 << ((r + t) * (n + k))) * (s - 1) ** (k + 1)


def test_claim_agrees_with_log_oracle():
    rng = random.Random(101)
    for trial in range(1000):
        n = rng.randint(1, 300)
        k = rng.randint(0, 60)
        r = rng.randint(0, 3)
        t = rng.randint(0, 3)
        s = rng.randint(2, 8)
        assert claim_holds(n, k, r, t, s) == _oracle_claim(n, k, r, t, s), (n, k, r, t, s)


# ---------------------------------------------------------- spindle bounds


def test_spindle_bound_frozen_value():
    report = spindle_bound_report(1 << 10, 1, 2, 1)
    assert report.k_star == 395
    assert report.bound == (1 << 10) + 395 == 1419
    assert report.tail_certified is True
    assert report.lhs > report.rhs
    lo, hi = report.realized
    assert lo == hi == Fraction(395 * 10, 1 << 10)


def test_spindle_bound_minimal_k():
    for n in (16, 64, 256, 1024):
        for r, s, t in ((1, 2, 1), (0, 2, 1), (1, 3, 2), (2, 2, 0), (0, 4, 0)):
            report = spindle_bound_report(n, r, s, t)
            k = report.k_star
            assert claim_holds(n, k, r, t, s)
            assert not claim_holds(n, k - 1, r, t, s)
            assert report.bound == n + k


def test_spindle_bound_one_column_uses_chain_rule():
    assert spindle_upper_bound(100, 2, 1, 3) == 105
    report = spindle_bound_report(100, 2, 1, 3)
    assert report.k_star is None and report.lhs is None
    assert report.bound == 105


def test_spindle_bound_degenerate_antichain_row():
    # r = t = 0, s = 2: right side is constantly 1, first win at k = 2
    assert spindle_upper_bound(50, 0, 2, 0) == 52


def test_spindle_scan_cap():
    with pytest.raises(ValueError):
        spindle_upper_bound(2, 0, 1 << 40, 1)


def test_realized_ratio_decreases_toward_two():
    """k* log2(n) / n falls toward r + t as the dimension grows."""
    ratios = []
    for e in (10, 12, 14, 16):
        report = spindle_bound_report(1 << e, 1, 2, 1)
        lo, hi = report.realized
        assert lo == hi  # exact at powers of two
        ratios.append(lo)
    assert all(a > b for a, b in zip(ratios, ratios[1:]))
    assert all(r > 2 for r in ratios)
    # the log log n / log n overhead decays slowly; 2^16 sits near 3.14
    assert ratios[-1] < Fraction(63, 20)


def test_spindle_params_intervals_cross_check():
    params = SpindleBoundParams(1 << 10, 1, 2, 1)
    e_lo, e_hi = params.eps()
    assert e_lo == e_hi == Fraction(1, 10)
    d_lo, d_hi = params.delta()
    want = 2 * 2 * (math.log2(10) + 2) / 10
    assert float(d_lo) <= want <= float(d_hi)
    c_lo, c_hi = params.c()
    want_c = (2 + want) / (1 - 0.1)
    assert float(c_lo) <= want_c <= float(c_hi)
    k_lo, k_hi = params.k_formula()
    assert float(k_lo) <= want_c * 1024 / 10 <= float(k_hi)


def test_spindle_params_eps_must_stay_below_one():
    params = SpindleBoundParams(4, 1, 8, 1)
    with pytest.raises(ValueError):
        params.c()


def test_spindle_params_validation():
    with pytest.raises(ValueError):
        SpindleBoundParams(1, 1, 2, 1)
    with pytest.raises(ValueError):
        SpindleBoundParams(16, -1, 2, 1)


# ------------------------------------------------------ multipartite bounds


def test_multipartite_is_iterated_spindle():
    n = 1 << 10
    report = multipartite_bound_report(n, (2, 2))
    assert isinstance(report, MultipartiteBoundReport)
    assert report.t == 2
    step1 = spindle_bound_report(n, 1, 2, 1)
    step2 = spindle_bound_report(step1.bound, 1, 2, 1)
    assert report.steps[0] == step1
    assert report.steps[1] == step2
    assert report.value == step2.bound
    assert multipartite_upper_bound(n, (2, 2)) == report.value


def test_multipartite_uses_largest_layer():
    n = 1 << 10
    report = multipartite_bound_report(n, (1, 3, 2))
    assert report.t == 3
    value = n
    for _ in range(3):
        value = spindle_upper_bound(value, 1, 3, 1)
    assert report.value == value


def test_compose_bound_matches_two_layer():
    n = 1 << 10
    inner = spindle_upper_bound(n, 1, 2, 1)
    composed = compose_bound(lambda m: spindle_upper_bound(m, 1, 2, 1), inner)
    assert composed == multipartite_upper_bound(n, (2, 2))
    assert compose_bound(lambda m: m, 7) == 7
    assert compose_bound(lambda m: chain_bound(2, m), 5) == 6


# ---------------------------------------------------------------- baselines


def test_chain_bound_values():
    assert chain_bound(1, 5) == 5
    assert chain_bound(3, 1) == 3
    assert chain_bound(2, 2) == 3
    with pytest.raises(ValueError):
        chain_bound(0, 5)
    with pytest.raises(ValueError):
        chain_bound(2, -1)


def test_antichain_alpha_frozen_table():
    assert [antichain_alpha(t) for t in range(1, 8)] == [0, 2, 3, 4, 4, 4, 5]
    with pytest.raises(ValueError):
        antichain_alpha(0)
