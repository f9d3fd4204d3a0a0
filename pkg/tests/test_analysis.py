from fractions import Fraction

import pytest
import sympy

from su3sph.analysis import (
    DivergentIntegralError,
    beta_moment,
    boundary_check,
    gram_matrix,
    inner_product,
    inner_product_approx,
)
from su3sph.repr_core import SFIndex
from su3sph.series import VectorSeries, normalize_at_one, series_solution

T = sympy.Symbol("t")


def poly_series(*components, start=0):
    width = max(len(c) for c in components)
    padded = [list(c) + [0] * (width - len(c)) for c in components]
    return VectorSeries(len(components) - 1, list(zip(*padded)), start, True)


def sympy_inner(sa, sb, n, ell):
    total = 0
    for i in range(ell + 1):
        fa = sum(c * T**(sa.start + j) for j, c in enumerate(sa.component(i)))
        fb = sum(c * T**(sb.start + j) for j, c in enumerate(sb.component(i)))
        total += sympy.integrate(fa * fb * (1 - T) * T**(n + ell - i), (T, 0, 1))
    return Fraction(str(total))


def test_scalar_examples():
    one, f = poly_series([1]), poly_series([1, -3])
    assert inner_product(f, one, 0, 0) == 0
    assert inner_product(one, one, 0, 0) == Fraction(1, 2)
    assert inner_product(f, f, 0, 0) == Fraction(1, 4)


def test_beta_moment():
    assert beta_moment(0) == Fraction(1, 2)
    assert beta_moment(3) == Fraction(1, 20)
    with pytest.raises(DivergentIntegralError):
        beta_moment(-1)


@pytest.mark.parametrize("a,b", [(SFIndex(1, 2, 1, 0), SFIndex(1, 2, 2, 1)),
                                 (SFIndex(-1, 2, 1, 1), SFIndex(-1, 2, 2, 2)),
                                 (SFIndex(-3, 2, 3, 0), SFIndex(-3, 2, 4, 0))])
def test_inner_product_against_sympy(a, b):
    sa, sb = series_solution(a), series_solution(b)
    for x, y in ((sa, sb), (sa, sa)):
        assert inner_product(x, y, a.n, a.ell) == sympy_inner(x, y, a.n, a.ell)


def test_gram_is_diagonal_and_positive():
    report = gram_matrix(0, 1, 3)
    assert report.diagonal and report.positive
    assert report.norms[:4] == (Fraction(2, 3), Fraction(2, 15), Fraction(1, 21), Fraction(1, 45))
    assert report.forced_zero_violations() == []


def test_gram_scalar_norms():
    assert gram_matrix(0, 0, 3).norms == (Fraction(1, 2), Fraction(1, 16), Fraction(1, 54), Fraction(1, 128))


def test_boundary_check():
    assert boundary_check(series_solution(SFIndex(-2, 1, 2, 0)), -2, 1).passed
    bad = boundary_check(poly_series([1], [0]), -2, 1)
    assert not bad.passed
    assert not bad.components[0].passed and bad.components[1].passed


def test_approx_path_agrees_with_exact():
    pytest.importorskip("scipy")
    s = normalize_at_one(series_solution(SFIndex(1, 2, 2, 1)))
    exact = inner_product(s, s, 1, 2)
    assert abs(inner_product_approx(s, s, 1, 2) - float(exact)) < 1e-12
