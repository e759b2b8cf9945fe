import pytest
from hypothesis import given, settings, strategies as st

from qbiject.series import (
    MultisumSpec,
    TruncatedSeries,
    from_csv,
    from_json_array,
    multisum,
    poch_finite,
    poch_inf,
    staircase_shapes,
    to_csv,
    to_json_array,
    triple_product,
)


def partition_counts(n):
    """Independent oracle: number of partitions of each 0..n, by the
    classic dynamic program over part sizes."""
    table = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            table[total] += table[total - part]
    return table


small_series = st.builds(
    lambda c0, rest: TruncatedSeries([c0] + rest, 24),
    st.sampled_from([1, -1]),
    st.lists(st.integers(min_value=-5, max_value=5), max_size=12),
)


def test_constructor_and_bound():
    s = TruncatedSeries([1, 2, 3], 5)
    assert s.coeffs == (1, 2, 3, 0, 0, 0)
    assert s.bound == 5
    assert TruncatedSeries([1, 2, 3, 4], 1).coeffs == (1, 2)
    with pytest.raises(ValueError):
        TruncatedSeries([])


def test_poch_frozen_values():
    # (q; q)_inf to degree 5: 1 - q - q^2 + q^5
    assert poch_inf(1, 1, 5).coeffs == (1, -1, -1, 0, 0, 1)
    # (q^2; q^2)_2 = (1 - q^2)(1 - q^4)
    assert poch_finite(2, 2, 2, 8).coeffs == (1, 0, -1, 0, -1, 0, 1, 0, 0)
    assert poch_finite(1, 1, 0, 3).coeffs == (1, 0, 0, 0)
    with pytest.raises(ValueError):
        poch_inf(0, 1, 5)


def test_invert_unit_partition_numbers():
    n = 40
    inv = poch_inf(1, 1, n).invert_unit()
    assert list(inv.coeffs) == partition_counts(n)


def test_invert_unit_requires_unit():
    with pytest.raises(ValueError):
        TruncatedSeries([2, 1], 4).invert_unit()


@given(small_series)
@settings(max_examples=60)
def test_invert_unit_two_sided(s):
    one = TruncatedSeries.one(s.bound)
    assert s * s.invert_unit() == one
    assert s.invert_unit() * s == one


@given(small_series, small_series, small_series)
@settings(max_examples=40)
def test_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a - a == TruncatedSeries.zero(a.bound)


def test_shift_and_scale():
    s = TruncatedSeries([1, 2, 3], 4)
    assert s.shift(2).coeffs == (0, 0, 1, 2, 3)
    assert s.shift(2).shift(-2) == s
    with pytest.raises(ValueError):
        s.shift(-1)
    assert s.scale(-3).coeffs == (-3, -6, -9, 0, 0)


def test_triple_product_edges():
    n = 30
    assert triple_product(0, 5, n) == TruncatedSeries.zero(n)
    assert triple_product(5, 5, n) == TruncatedSeries.zero(n)
    # symmetric in a <-> m - a
    assert triple_product(2, 5, n) == triple_product(3, 5, n)
    with pytest.raises(ValueError):
        triple_product(6, 5, n)


def test_triple_product_brute_force():
    """Oracle: expand each factor separately to low degree by brute
    polynomial multiplication over dicts."""
    n = 20

    def poly_mul(a, b):
        out = {}
        for i, x in a.items():
            for j, y in b.items():
                if i + j <= n:
                    out[i + j] = out.get(i + j, 0) + x * y
        return out

    def poch(offset, mod):
        acc = {0: 1}
        e = offset
        while e <= n:
            acc = poly_mul(acc, {0: 1, e: -1})
            e += mod
        return acc

    expect = poly_mul(poly_mul(poch(5, 5), poch(2, 5)), poch(3, 5))
    got = triple_product(2, 5, n)
    assert list(got.coeffs) == [expect.get(k, 0) for k in range(n + 1)]


def test_csv_json_roundtrip():
    s = poch_inf(1, 2, 12).invert_unit()
    assert from_csv(to_csv(s)) == s
    assert from_json_array(to_json_array(s)) == s
    assert '"value"' in to_json_array(s)


def test_staircase_shapes_budget():
    shapes = list(staircase_shapes(3, 6))
    assert (0, 0) in shapes and (2, 1) in shapes
    assert all(sum(x * x - x for x in s) <= 6 for s in shapes)
    assert len(shapes) == len(set(shapes))
    # (3, ...) needs budget >= 6, (3,2) needs 8
    assert (3, 0) in shapes and (3, 2) not in shapes


def test_multisum_spec_validation():
    with pytest.raises(ValueError):
        MultisumSpec("AG", 2, 0)
    with pytest.raises(ValueError):
        MultisumSpec("AG", 2, 3)
    with pytest.raises(ValueError):
        MultisumSpec("BP", 3, 1)
    with pytest.raises(ValueError):
        MultisumSpec("nope", 3, 1)


def direct_single_sum(i, n):
    """Oracle for rank 2: sum over s of q^(s^2 + (2-i)s) / (q; q)_s."""
    total = TruncatedSeries.zero(n)
    s = 0
    while s * s + (2 - i) * s <= n:
        term = TruncatedSeries.monomial(s * s + (2 - i) * s, n)
        term = term * poch_finite(1, 1, s, n).invert_unit()
        total = total + term
        s += 1
    return total


@pytest.mark.parametrize("i", [1, 2])
def test_multisum_rank2_against_single_sum(i):
    n = 40
    assert multisum(MultisumSpec("AG", 2, i), n) == direct_single_sum(i, n)


def test_multisum_first_coefficients():
    # the i = 2 rank-2 sum starts 1,1,1,1,2 (same as the counts oracle)
    got = multisum(MultisumSpec("AG", 2, 2), 4)
    assert list(got.coeffs) == [1, 1, 1, 1, 2]
