from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from su3sph.eigen import (
    build_L,
    char_poly_L,
    is_degenerate,
    l_eigenvector,
    mu_spectrum,
    spectrum_polynomial,
)
from su3sph.exact import matvec, poly_from_roots, rank
from su3sph.repr_core import mu_k

lams = st.fractions(min_value=-40, max_value=40, max_denominator=7)


def test_small_matrices():
    lam = Fraction(7)
    assert build_L(0, 1, lam).entries == [[-3 - lam, 3 - 3 * lam], [3, 2 * lam - 3]]
    assert build_L(1, 0, lam).entries == [[lam]]


@given(st.integers(0, 4), st.integers(0, 5), lams)
def test_charpoly_against_sympy(n, ell, lam):
    m = sympy.Matrix(build_L(n, ell, lam).entries)
    expected = [Fraction(str(c)) for c in m.charpoly().all_coeffs()[::-1]]
    assert char_poly_L(n, ell, lam) == expected
    assert expected == poly_from_roots(mu_k(n, ell, lam, k) for k in range(ell + 1))
    assert spectrum_polynomial(n, ell, lam) == expected


@given(st.integers(0, 4), st.integers(1, 5), lams)
def test_eigenvectors(n, ell, lam):
    if is_degenerate(n, ell, lam):
        return
    L = build_L(n, ell, lam).entries
    for k, mu in enumerate(mu_spectrum(n, ell, lam)):
        v = l_eigenvector(n, ell, lam, k)
        assert v[-1] == 1
        assert matvec(L, v) == [mu * x for x in v]


def test_eigenvector_example():
    assert l_eigenvector(0, 1, Fraction(7), 0) == [-6, 1]
    assert mu_spectrum(0, 1, Fraction(7)) == [-7, 8]


def test_degenerate_lambda_has_one_eigenvector():
    # mu_0 = -lam and mu_1 = 2 lam - 6 meet at lam = 2 for (n, ell) = (0, 1)
    lam = Fraction(2)
    assert is_degenerate(0, 1, lam)
    mu = mu_k(0, 1, lam, 0)
    shifted = [[x - (mu if i == j else 0) for j, x in enumerate(row)] for i, row in enumerate(build_L(0, 1, lam).entries)]
    assert rank(shifted) == 1
    assert l_eigenvector(0, 1, lam, 0) == l_eigenvector(0, 1, lam, 1) == [-1, 1]


def test_negative_n_rejected():
    with pytest.raises(ValueError):
        build_L(-1, 2, 0)
