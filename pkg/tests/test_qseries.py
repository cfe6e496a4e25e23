import pytest
from hypothesis import given, strategies as st

from comlie.qseries import (
    QPoly,
    RationalSeries,
    TruncatedSeries,
    exact_div,
    product_series,
)


def qpoly_strategy(max_degree=8, max_coeff=30):
    return st.builds(
        QPoly.from_coeffs,
        st.lists(
            st.integers(min_value=-max_coeff, max_value=max_coeff),
            min_size=0,
            max_size=max_degree + 1,
        ),
    )


factors_strategy = st.dictionaries(
    st.integers(min_value=1, max_value=6),
    st.integers(min_value=1, max_value=2),
    max_size=3,
)


def test_expand_geometric():
    series = RationalSeries(QPoly.one(), ((2, 1),))
    assert series.expand(6).coeffs == (1, 0, 1, 0, 1, 0, 1)


def test_expand_two_generator_example():
    series = RationalSeries(QPoly.one(), ((2, 1), (4, 1)))
    assert series.expand(4).coeffs == (1, 0, 1, 0, 2)


def test_expand_betti_pattern_numerator():
    series = RationalSeries(QPoly({0: 1, 4: 1}), ((4, 1),))
    expanded = series.expand(12)
    assert expanded.coeffs == (1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 2)


def test_qpoly_product_difference_of_squares():
    assert QPoly({0: 1, 1: 1}) * QPoly({0: 1, 1: -1}) == QPoly({0: 1, 2: -1})


def test_add_zero_is_identity():
    p = QPoly({0: 3, 5: -2})
    assert QPoly.zero() + p == p


def test_value_at_one_counts_basis():
    p = QPoly({0: 1, 4: 1, 6: 2, 8: 1, 12: 1})
    assert p.value_at_one() == 6


def test_palindromic():
    assert QPoly({0: 1, 4: 1, 6: 2, 8: 1, 12: 1}).is_palindromic(12)
    assert not QPoly({0: 1, 2: 1}).is_palindromic(4)
    assert QPoly.zero().is_palindromic()


def test_truncated_series_mismatch_raises():
    a = TruncatedSeries((1, 2, 3))
    b = TruncatedSeries((1, 2))
    with pytest.raises(ValueError):
        a * b
    with pytest.raises(ValueError):
        a + b


def test_product_series_examples():
    assert product_series({2: 1}, 4).coeffs == (1, 0, 1, 0, 1)
    assert product_series({2: 1, 4: 2, 6: 3}, 4).coeffs[4] == 3
    assert product_series({}, 3).coeffs == (1, 0, 0, 0)
    with pytest.raises(ValueError):
        product_series({0: 1}, 3)


def test_rational_series_product_merges_factors():
    a = RationalSeries(QPoly.one(), ((2, 1),))
    b = RationalSeries(QPoly({0: 1, 2: 1}), ((2, 1), (4, 1)))
    ab = a * b
    assert ab.denominator_factors == ((2, 2), (4, 1))
    assert ab.numerator == QPoly({0: 1, 2: 1})


def test_factor_validation():
    with pytest.raises(ValueError):
        RationalSeries(QPoly.one(), ((0, 1),))
    with pytest.raises(ValueError):
        RationalSeries(QPoly.one(), ((2, 0),))


def test_exact_div():
    num = QPoly({0: 1, 2: -1})
    assert exact_div(num, QPoly({0: 1, 1: 1})) == QPoly({0: 1, 1: -1})
    with pytest.raises(ValueError):
        exact_div(QPoly({0: 1, 1: 1}), QPoly({0: 1, 1: -1, 2: 5}))


def test_json_round_trip():
    series = TruncatedSeries((1, 0, 2, 5))
    payload = series.to_json()
    assert payload == {"var": "t", "trunc": 3, "coeffs": [1, 0, 2, 5]}
    assert TruncatedSeries.from_json(payload) == series
    with pytest.raises(ValueError):
        TruncatedSeries.from_json({"var": "t", "trunc": 7, "coeffs": [1]})


@given(qpoly_strategy(), qpoly_strategy(), qpoly_strategy())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(qpoly_strategy(max_degree=6), factors_strategy, st.integers(8, 14))
def test_expand_times_denominator_recovers_numerator(numerator, factors, trunc):
    series = RationalSeries(numerator, tuple(factors.items()))
    expansion = series.expand(trunc)
    denominator = QPoly.one()
    for exp, mult in series.denominator_factors:
        for _ in range(mult):
            denominator = denominator * QPoly({0: 1, exp: -1})
    product = expansion * denominator.truncated(trunc)
    assert product.coeffs == numerator.truncated(trunc).coeffs
