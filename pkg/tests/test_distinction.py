"""Growth series, Poincare values, and the truncated double-coset sum."""

from fractions import Fraction

import pytest

from heckezonal.distinction import (
    GrowthSeries,
    RequiresOddE,
    coset_measure,
    distinction_integral,
    growth_bfs,
    growth_closed_form,
    nonvanishing_scan,
    per_term_value,
    poincare_closed_form,
    poincare_series_coefficients,
    poincare_value,
)
from heckezonal.scalars import LaurentPoly
from heckezonal.spherical import SphericalParams, matrix_coefficient_scalar
from heckezonal.weyl import enumerate_by_length, generator, multiply


def element_of_length(e, word):
    w = generator(e, word[0])
    for i in word[1:]:
        w = multiply(w, generator(e, i))
    return w.w0


def test_coset_measure_examples():
    identity = element_of_length(3, [1, 1])  # the identity, via s1*s1
    assert identity.length() == 0
    for k in (-2, 0, 5):
        assert coset_measure(identity, k, 2, 3) == 1
    w3 = element_of_length(3, [1, 2, 1])
    assert w3.length() == 3
    assert coset_measure(w3, 0, 1, 2) == 8
    w2 = element_of_length(3, [1, 2])
    assert coset_measure(w2, 7, 2, 3) == 6561
    with pytest.raises(ValueError):
        coset_measure(w2, 0, 1, 1)


def test_per_term_value_exponent_cancellation():
    s1 = element_of_length(3, [1])
    assert per_term_value(s1, 1, 2) == Fraction(-1, 2)
    # f=2, q0=2: 2**4 * (-1/16) * (1/4) = -1/4 = (-1/2**2)**1
    assert per_term_value(s1, 2, 2) == Fraction(-1, 4)
    assert per_term_value(s1, 2, 2) == coset_measure(s1, 0, 2, 2) * matrix_coefficient_scalar(
        s1, 0, SphericalParams.numeric(3, 2, 2)
    )
    # the chain holds for all lengths <= 8 and (f, q0) in {1,2}x{2,3}
    for f in (1, 2):
        for q0 in (2, 3):
            y = Fraction(-1, q0**f)
            for ell, layer in enumerate(enumerate_by_length(3, 8)):
                for w0 in layer:
                    assert per_term_value(w0, f, q0) == y**ell


def test_growth_bfs_examples():
    assert growth_bfs(2, 6).counts == (1, 2, 2, 2, 2, 2, 2)
    g3 = growth_bfs(3, 6)
    assert g3.counts == (1, 3, 6, 9, 12, 15, 18)
    for e in (2, 3, 4, 5):
        assert growth_bfs(e, 1).counts[1] == e


def test_growth_series_invariants():
    with pytest.raises(ValueError):
        GrowthSeries(3, (2, 3), "BFS")
    with pytest.raises(ValueError):
        GrowthSeries(3, (1, 4), "BFS")


def test_poincare_closed_form_small_ranks():
    # e=2: (1+X)/(1-X); e=3: (1+X+X**2)/(1-X)**2, up to a common factor
    x = LaurentPoly.variable("X")
    one = LaurentPoly.constant(1, "X")
    num2, den2 = poincare_closed_form(2)
    assert num2 * (one - x) == den2 * (one + x)
    num3, den3 = poincare_closed_form(3)
    assert num3 * (one - x) ** 2 == den3 * (one + x + x**2)
    assert poincare_value(2, 0) == 1
    assert poincare_value(5, 0) == 1


@pytest.mark.parametrize("e", [2, 3, 4])
def test_growth_bfs_matches_closed_form(e):
    assert growth_bfs(e, 12).counts == growth_closed_form(e, 12).counts


def test_poincare_values():
    assert poincare_value(2, Fraction(-1, 2)) == Fraction(1, 3)
    # (1 - 1/2 + 1/4) / (3/2)**2 = 1/3
    assert poincare_value(3, Fraction(-1, 2)) == Fraction(1, 3)
    with pytest.raises(ValueError):
        poincare_value(3, Fraction(3, 2))
    # truncated series approaches the closed value from within the tail
    for e in (2, 3):
        x = Fraction(-1, 2)
        coeffs = poincare_series_coefficients(e, 30)
        partial = sum(c * x**n for n, c in enumerate(coeffs))
        tail = poincare_value(e, -x) - sum(c * (-x) ** n for n, c in enumerate(coeffs))
        assert abs(partial - poincare_value(e, x)) <= tail


def test_distinction_integral_closed_forms():
    report = distinction_integral(3, 1, 2, 40)
    assert report.closed_form == 1
    assert report.per_term_ok
    assert report.abs_error <= report.tail_bound
    assert report.tail_bound < Fraction(1, 10**6)
    report3 = distinction_integral(3, 1, 3, 40)
    assert report3.closed_form == Fraction(21, 16)
    assert report3.per_term_ok


def test_distinction_integral_truncation_zero():
    report = distinction_integral(3, 1, 2, 0)
    assert report.partial_sum == 3


def test_distinction_tail_monotone():
    previous = None
    for L in (5, 10, 15, 20):
        report = distinction_integral(3, 1, 2, L)
        assert report.abs_error <= report.tail_bound
        if previous is not None:
            assert report.tail_bound < previous
        previous = report.tail_bound


def test_distinction_requires_odd_e():
    with pytest.raises(RequiresOddE):
        distinction_integral(2, 1, 2, 10)
    with pytest.raises(ValueError):
        distinction_integral(3, 1, 1, 10)


def test_k_sum_is_e_times_single():
    # summing the k classes explicitly reproduces the e factor because
    # both the volume and the coefficient ignore k
    e, f, q0, L = 3, 1, 2, 6
    p = SphericalParams.numeric(e, f, q0)
    explicit = Fraction(0)
    for layer in enumerate_by_length(e, L):
        for w0 in layer:
            for k in range(e):
                explicit += coset_measure(w0, k, f, q0) * matrix_coefficient_scalar(w0, k, p)
    assert explicit == distinction_integral(e, f, q0, L).partial_sum


def test_nonvanishing_scan():
    report = nonvanishing_scan(3, [Fraction(-9, 10), Fraction(-1, 2), 0, Fraction(1, 2), Fraction(9, 10)])
    assert report["all_positive"]
    points = [Fraction(-1, q0**f) for q0 in (2, 3, 4, 5) for f in (1, 2)]
    assert nonvanishing_scan(2, points)["all_positive"]
    with pytest.raises(ValueError):
        nonvanishing_scan(3, [Fraction(1)])


def test_report_json_shape():
    report = distinction_integral(3, 1, 2, 4)
    data = report.to_json()
    assert data["closed_form"] == "1/1"
    assert set(data) == {
        "e", "f", "q0", "L", "chi_pi",
        "partial_sum", "closed_form", "abs_error", "tail_bound", "per_term_ok",
    }
