from fractions import Fraction

import pytest

from comlie.multisym import (
    IdealSpec,
    MultiPoly,
    act,
    average,
    averaged_descent_basis,
    bcom_ideal,
    descent_monomial,
    ecom_ideal,
    exact_rank,
    invariant_coordinates,
    invariant_graded_dim,
    monomial_orbit_reps,
    orbit_sum,
    power_sum,
    quotient_graded_dims,
    signed_descent_monomial,
    verify_free_basis,
    verify_power_sum_generation,
)
from comlie.poincare import GroupSpec
from comlie.weylcomb import (
    GroupSizeError,
    Permutation,
    SignedPermutation,
    elements,
)


def mono(n, xexp, yexp, coeff=1):
    return MultiPoly.monomial(n, xexp, yexp, coeff)


def test_act_examples():
    p = mono(2, (1, 0), (0, 1))  # x1 y2
    assert act(Permutation((2, 1)), p) == mono(2, (0, 1), (1, 0))
    assert act(Permutation.identity(2), p) == p
    q = mono(2, (2, 0), (1, 0))  # x1^2 y1
    assert act(SignedPermutation((-1, 2)), q) == mono(2, (2, 0), (1, 0), -1)
    with pytest.raises(ValueError):
        act(Permutation((1, 2, 3)), p)


def test_act_is_ring_homomorphism():
    w = SignedPermutation((-2, 1))
    p = mono(2, (1, 1), (0, 0)) + mono(2, (0, 0), (1, 0), 3)
    q = mono(2, (1, 0), (0, 2))
    assert act(w, p * q) == act(w, p) * act(w, q)


def test_average_examples():
    n = 3
    avg = average("sym", mono(n, (1, 0, 0), (0, 0, 0)))
    expected = power_sum(n, 1, 0) * Fraction(1, 3)
    assert avg == expected
    # odd pair degree kills the signed average
    assert average("signed", mono(2, (1, 0), (0, 1))).is_zero()
    # sym average of x1 y2 over three letters: all off-diagonal products
    avg = average("sym", mono(3, (1, 0, 0), (0, 1, 0)))
    off_diag = MultiPoly.zero(3)
    for i in range(3):
        for j in range(3):
            if i != j:
                xexp = [0, 0, 0]
                yexp = [0, 0, 0]
                xexp[i] = 1
                yexp[j] = 1
                off_diag = off_diag + mono(3, tuple(xexp), tuple(yexp))
    assert avg == off_diag * Fraction(1, 6)


def test_average_is_idempotent_and_invariant():
    p = mono(3, (2, 1, 0), (0, 0, 1)) + mono(3, (1, 0, 0), (1, 1, 0), 2)
    avg = average("sym", p)
    assert average("sym", avg) == avg
    for w in elements("sym", 3):
        assert act(w, avg) == avg
    sp = mono(2, (2, 0), (0, 0)) + mono(2, (1, 1), (1, 1), 5)
    savg = average("signed", sp)
    assert average("signed", savg) == savg
    for w in elements("signed", 2):
        assert act(w, savg) == savg


def test_signed_vanishing_is_exactly_odd_pair_degree():
    # exhaustive over monomials of total degree <= 6 in two variable pairs
    for d in range(7):
        for rep in monomial_orbit_reps("sym", 2, d):
            xexp = tuple(a for a, _ in rep)
            yexp = tuple(b for _, b in rep)
            has_odd = any((a + b) % 2 for a, b in rep)
            vanished = average("signed", mono(2, xexp, yexp)).is_zero()
            assert vanished == has_odd


def test_power_sum_examples():
    assert power_sum(2, 1, 0) == mono(2, (1, 0), (0, 0)) + mono(2, (0, 1), (0, 0))
    p11 = power_sum(2, 1, 1)
    assert p11 == mono(2, (1, 0), (1, 0)) + mono(2, (0, 1), (0, 1))
    assert act(SignedPermutation((-1, 2)), p11) == p11
    with pytest.raises(ValueError):
        power_sum(2, 0, 0)


def test_descent_monomial_examples():
    assert descent_monomial(Permutation.identity(3)) == MultiPoly.one(3)
    # w = (2,1,3): single descent at 1 in both w and its inverse
    assert descent_monomial(Permutation((2, 1, 3))) == mono(3, (1, 0, 0), (0, 1, 0))
    # w = (3,2,1): x-part x1^2 x2, y-part y3^2 y2
    assert descent_monomial(Permutation((3, 2, 1))) == mono(3, (2, 1, 0), (0, 1, 2))
    assert signed_descent_monomial(SignedPermutation((-1, 2))) == mono(
        2, (1, 0), (1, 0)
    )


@pytest.mark.parametrize("n", [2, 3, 4])
def test_descent_monomial_degrees_match_major_indices(n):
    for w in elements("sym", n):
        m = descent_monomial(w)
        ((xexp, yexp),) = m.terms
        assert sum(xexp) == w.inverse().major_index()
        assert sum(yexp) == w.major_index()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_signed_descent_monomial_degrees_match_flag_major_indices(n):
    for w in elements("signed", n):
        m = signed_descent_monomial(w)
        assert m.total_degree() == w.inverse().flag_major_index() + w.flag_major_index()


def test_invariant_graded_dim_examples():
    assert invariant_graded_dim("sym", 2, 1) == 2
    assert invariant_graded_dim("signed", 2, 1) == 0
    assert invariant_graded_dim("signed", 3, 1) == 0
    for d in range(7):
        assert invariant_graded_dim("sym", 1, d) == d + 1


def test_orbit_reps_and_coordinates_are_consistent():
    reps = monomial_orbit_reps("sym", 2, 2)
    assert len(reps) == 6
    for rep in reps:
        poly = orbit_sum(2, rep)
        coords = invariant_coordinates(poly, reps)
        assert coords == [1 if other == rep else 0 for other in reps]


def test_exact_rank():
    one = Fraction(1)
    zero = Fraction(0)
    rows = [[one, zero], [zero, one], [one, one]]
    assert exact_rank(rows) == 2
    assert exact_rank([]) == 0
    assert exact_rank([[zero, zero]]) == 0
    assert exact_rank([[Fraction(2, 3), one]]) == 1


def test_ideal_spec_validation():
    with pytest.raises(ValueError):
        IdealSpec(((0, 0),))
    assert bcom_ideal("u", 2).generators == ((1, 0), (2, 0))
    assert bcom_ideal("su", 2).generators == ((1, 0), (2, 0), (0, 1))
    assert bcom_ideal("sp", 2).generators == ((2, 0), (4, 0))
    assert ecom_ideal("u", 2).generators == ((1, 0), (2, 0), (0, 1), (0, 2))
    assert ecom_ideal("sp", 1).generators == ((2, 0), (0, 2))
    with pytest.raises(ValueError):
        ecom_ideal("su", 2)


def test_quotient_by_empty_ideal_is_invariant_dimension():
    dims = quotient_graded_dims("sym", 2, IdealSpec(()), 5)
    assert dims == {d: invariant_graded_dim("sym", 2, d) for d in range(6)}


def test_quotient_fiber_ideal_u2():
    dims = quotient_graded_dims("sym", 2, ecom_ideal("u", 2), 4)
    assert dims == {0: 1, 1: 0, 2: 1, 3: 0, 4: 0}


def test_quotient_base_ideal_u2_matches_series_expansion():
    # graded dimensions 1, 1, 3 = coefficients of (1+t^4)/((1-t^2)(1-t^4))
    dims = quotient_graded_dims("sym", 2, bcom_ideal("u", 2), 2)
    assert dims == {0: 1, 1: 1, 2: 3}


def test_quotient_base_ideal_su2_matches_series_expansion():
    from comlie.poincare import bcom_series

    dims = quotient_graded_dims("sym", 2, bcom_ideal("su", 2), 4)
    expansion = bcom_series(GroupSpec("su", 2)).expand(8)
    assert dims == {d: expansion.coeffs[2 * d] for d in range(5)}


def test_quotient_rejects_odd_signed_generators():
    with pytest.raises(ValueError):
        quotient_graded_dims("signed", 2, IdealSpec(((1, 0),)), 4)


def test_feasibility_caps():
    with pytest.raises(GroupSizeError):
        quotient_graded_dims("sym", 5, bcom_ideal("u", 5), 4)
    with pytest.raises(GroupSizeError):
        verify_free_basis("signed", 4, 4)
    with pytest.raises(GroupSizeError):
        verify_power_sum_generation("sym", 2, 20)


def test_free_basis_rank_one_groups():
    report = verify_free_basis("sym", 1, 6)
    assert report.passed and report.basis_size == 1 and report.degrees == (0,)
    report = verify_free_basis("signed", 1, 6)
    assert report.passed and report.basis_size == 2 and report.degrees == (0, 2)


def test_free_basis_rank_two():
    report = verify_free_basis("sym", 2, 6)
    assert report.passed
    assert report.basis_size == 2
    assert report.degrees == (0, 2)


def test_power_sum_generation_small_ranks():
    assert verify_power_sum_generation("sym", 1, 6).passed
    assert verify_power_sum_generation("sym", 2, 5).passed


def test_averaged_basis_is_invariant():
    for _, poly in averaged_descent_basis("signed", 2):
        for w in elements("signed", 2):
            assert act(w, poly) == poly
