"""Core truncated-series arithmetic: construction, ring laws, exponent surgery."""

import pytest
from hypothesis import given, settings, strategies as st

from qseries.series import (
    NonUnitError,
    SeriesError,
    TruncatedSeries,
    UnknownCoefficientError,
    make,
)


def geometric(order):
    return make(0, [1] * order, order)


def series_from_poly(coeffs, order):
    return make(0, list(coeffs) + [0] * (order - len(coeffs)), order)


# independent oracle: partition counts by backtracking enumeration
def partitions_of(n):
    def go(v, rem):
        if rem == 0:
            return 1
        if v > rem:
            return 0
        return sum(go(v + 1, rem - k * v) for k in range(rem // v + 1))

    return go(1, n)


# independent oracle: pentagonal recurrence
def p_by_recurrence(top):
    p = [1]
    for n in range(1, top + 1):
        total, k = 0, 1
        while k * (3 * k - 1) // 2 <= n:
            sign = 1 if k % 2 else -1
            total += sign * p[n - k * (3 * k - 1) // 2]
            if k * (3 * k + 1) // 2 <= n:
                total += sign * p[n - k * (3 * k + 1) // 2]
            k += 1
        p.append(total)
    return p


def pentagonal_series(order):
    terms = {}
    m = 0
    while m * (3 * m - 1) // 2 < order or m * (3 * m + 1) // 2 < order:
        for e in (m * (3 * m - 1) // 2, m * (3 * m + 1) // 2):
            if e < order:
                terms[e] = 1 if m % 2 == 0 else -1
        m += 1
    return TruncatedSeries.from_terms(terms, order)


class TestMake:
    def test_identity_element(self):
        s = make(0, [1], 1)
        assert s.valuation == 0 and s.order == 1 and s.coeffs == (1,)

    def test_laurent(self):
        s = make(-1, [2, 0, 3], 2)
        assert s.coefficient(-1) == 2
        assert s.coefficient(0) == 0
        assert s.coefficient(1) == 3

    def test_empty(self):
        s = make(0, [], 0)
        assert s.is_zero
        assert s.coefficient(-5) == 0
        with pytest.raises(UnknownCoefficientError):
            s.coefficient(0)

    def test_length_mismatch(self):
        with pytest.raises(SeriesError):
            make(0, [1, 2], 1)

    def test_rejects_floats(self):
        with pytest.raises(SeriesError):
            make(0, [1.0], 1)


class TestAdd:
    def test_cancellation(self):
        a = series_from_poly([1, 1], 10)
        b = series_from_poly([1, -1], 10)
        assert (a + b) == series_from_poly([2], 10)

    def test_zero_identity(self):
        s = make(0, [5, -3, 2], 3)
        assert s + TruncatedSeries.zero(3) == s

    def test_laurent_kept_valuation(self):
        a = make(-1, [1, 1], 1)
        b = make(-1, [-1, 0], 1)
        total = a + b
        assert total.valuation == -1
        assert total.coefficient(-1) == 0
        assert total.coefficient(0) == 1


class TestMul:
    def test_telescoping(self):
        n = 30
        out = geometric(n) * series_from_poly([1, -1], n)
        assert out == TruncatedSeries.one(n)

    def test_identity(self):
        s = make(0, [3, 1, 4, 1, 5], 5)
        assert s * TruncatedSeries.one(100) == s

    def test_partition_series_times_pentagonal_is_one(self):
        # oracle: pentagonal recurrence builds p(n)
        order = 50
        p = p_by_recurrence(order)
        ps = make(0, p[:order], order)
        assert ps * pentagonal_series(order) == TruncatedSeries.one(order)

    def test_order_rule(self):
        a = make(1, [1, 2], 3)   # known below q^3
        b = make(2, [5], 3)      # known below q^3
        out = a * b
        assert out.valuation == 3
        assert out.order == min(3 + 2, 3 + 1)


class TestInvert:
    def test_geometric(self):
        s = series_from_poly([1, -1], 20)
        assert s.invert() == geometric(20)

    def test_partition_counts(self):
        # oracle: backtracking enumeration of partitions
        order = 11
        inv = pentagonal_series(order).invert()
        assert inv.coefficients() == [partitions_of(n) for n in range(order)]

    def test_nonunit_rejected(self):
        with pytest.raises(NonUnitError):
            series_from_poly([2, 1], 5).invert()
        with pytest.raises(NonUnitError):
            TruncatedSeries.zero(5).invert()

    def test_laurent_inverse_valuation(self):
        s = make(1, [1, 1], 3)  # q + q^2
        inv = s.invert()
        assert inv.valuation == -1
        assert (s * inv).coefficient(0) == 1


class TestPow:
    def test_three_colored_partitions(self):
        # oracle: enumeration of 3-colored partitions for n <= 3
        def colored(n, colors):
            def go(v, ci, rem):
                if rem == 0:
                    return 1
                if v > rem:
                    return 0
                if ci == colors:
                    return go(v + 1, 0, rem)
                return sum(go(v, ci + 1, rem - k * v) for k in range(rem // v + 1))

            return go(1, 0, n)

        s = pentagonal_series(12) ** (-3)
        assert s.coefficients(4) == [colored(n, 3) for n in range(4)]
        assert s.coefficients(4) == [1, 3, 9, 22]

    def test_pow_one(self):
        s = make(0, [1, 7, 2], 3)
        assert s ** 1 == s

    def test_binomial_square(self):
        s = series_from_poly([1, -1], 10)
        assert (s ** 2).coefficients(3) == [1, -2, 1]

    def test_pow_zero(self):
        s = make(0, [1, 5], 2)
        assert (s ** 0) == TruncatedSeries.one(2)


class TestExtractAp:
    def test_direct_definition(self):
        s = make(0, [1, 2, 3, 4], 4)
        out = s.extract_ap(2, 1)
        assert out.coefficients() == [2, 4]
        assert out.order == 2

    def test_reassembly(self):
        s = make(0, list(range(1, 13)), 12)
        total = TruncatedSeries.zero(12)
        for r in range(3):
            total = total + s.extract_ap(3, r).substitute(3).shift(r)
        agree, diff = total.agrees_with(s)
        assert agree, diff

    def test_laurent_extraction(self):
        s = make(-1, [7, 0, 0, 5], 3)  # 7q^-1 + 5q^2
        out = s.extract_ap(3, 2)
        assert out.valuation == -1
        assert out.coefficient(-1) == 7
        assert out.coefficient(0) == 5


class TestSubstitute:
    def test_basic(self):
        s = series_from_poly([1, 1], 2)
        out = s.substitute(3)
        assert out.coefficient(0) == 1 and out.coefficient(3) == 1
        assert out.order == 6

    def test_identity_power(self):
        s = make(0, [4, 2], 2)
        assert s.substitute(1) is s

    def test_rejects_nonpositive(self):
        with pytest.raises(SeriesError):
            make(0, [1], 1).substitute(0)


class TestReduceMod:
    def test_canonical_residues(self):
        s = make(0, [3, -4], 2)
        assert s.reduce_mod(3).coefficients() == [0, 2]

    def test_idempotent(self):
        s = make(0, [17, -9, 4], 3)
        once = s.reduce_mod(2)
        assert once.reduce_mod(2) == once

    def test_ramanujan_mod5_prefix(self):
        order = 250
        p = p_by_recurrence(order)
        fives = make(0, [p[5 * n + 4] for n in range(40)], 40)
        assert fives.reduce_mod(5).is_zero

    def test_small_modulus_rejected(self):
        with pytest.raises(SeriesError):
            make(0, [1], 1).reduce_mod(1)


class TestFormatting:
    def test_dense_with_laurent_part(self):
        from qseries.series import format_series

        s = make(-1, [2, 0, 3], 2)
        assert format_series(s) == "2q^-1 + 3q + O(q^2)"

    def test_sparse_beyond_dense_limit(self):
        from qseries.series import format_series

        s = TruncatedSeries.from_terms({0: 1, 51: -4}, 60)
        assert format_series(s) == "0:1 51:-4 (O(q^60))"

    def test_zero_series(self):
        from qseries.series import format_series

        assert format_series(TruncatedSeries.zero(5)) == "0 + O(q^5)"


class TestLaurentOps:
    def test_shift_roundtrip(self):
        s = make(0, [1, 2, 3], 3)
        assert s.shift(-2).shift(2) == s

    def test_alternate_parity(self):
        s = make(-1, [1, 1, 1, 1], 3)
        out = s.alternate()
        assert [out.coefficient(e) for e in range(-1, 3)] == [-1, 1, -1, 1]

    def test_alternate_involution(self):
        s = make(0, [5, -2, 7, 1], 4)
        assert s.alternate().alternate() == s


# -- randomized ring laws ----------------------------------------------------

small_series = st.builds(
    lambda val, coeffs: make(val, coeffs, val + len(coeffs)),
    st.integers(-4, 4),
    st.lists(st.integers(-9, 9), min_size=0, max_size=24),
)

unit_series = st.builds(
    lambda lead, coeffs: make(0, [lead] + coeffs, 1 + len(coeffs)),
    st.sampled_from([1, -1]),
    st.lists(st.integers(-9, 9), min_size=0, max_size=20),
)


@settings(max_examples=150)
@given(small_series, small_series)
def test_add_commutes(a, b):
    assert a + b == b + a


@settings(max_examples=150)
@given(small_series, small_series)
def test_mul_commutes(a, b):
    assert a * b == b * a


@settings(max_examples=150)
@given(small_series, small_series, small_series)
def test_add_associates(a, b, c):
    assert (a + b) + c == a + (b + c)


@settings(max_examples=150)
@given(small_series, small_series, small_series)
def test_mul_associates(a, b, c):
    assert (a * b) * c == a * (b * c)


@settings(max_examples=150)
@given(small_series, small_series, small_series)
def test_distributive(a, b, c):
    assert a * (b + c) == a * b + a * c


@settings(max_examples=100)
@given(unit_series)
def test_invert_two_sided(a):
    inv = a.invert()
    prod = a * inv
    assert prod.coefficient(0) == 1
    assert all(prod.coefficient(e) == 0 for e in range(1, prod.order))
    assert prod == inv * a


@settings(max_examples=60)
@given(unit_series, st.integers(1, 3))
def test_pow_inverse_pairing(a, e):
    prod = (a ** e) * (a ** (-e))
    assert prod.coefficient(0) == 1
    assert all(prod.coefficient(k) == 0 for k in range(1, prod.order))


@settings(max_examples=150)
@given(small_series, st.integers(1, 5))
def test_extract_substitute_roundtrip(s, m):
    total = None
    for r in range(m):
        piece = s.extract_ap(m, r).substitute(m).shift(r)
        total = piece if total is None else total + piece
    agree, diff = total.agrees_with(s)
    assert agree, diff


@settings(max_examples=100)
@given(small_series, small_series, st.integers(0, 12))
def test_truncation_stability(a, b, k):
    # computing at full order then truncating equals truncating first
    full = a * b
    cut = full.truncate(min(full.order, full.valuation + k))
    again = (a.truncate(a.order) * b).truncate(cut.order)
    assert cut == again
