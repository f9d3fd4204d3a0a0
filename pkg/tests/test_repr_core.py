from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from su3sph.exact import is_zero_matrix
from su3sph.repr_core import (
    AdmissibilityError,
    EigenPair,
    RestrictionParams,
    SFIndex,
    admissible_indices,
    canonical_w,
    casimir_eigenvalues,
    eigen_from_index,
    index_to_restriction,
    kcasimir_scalars,
    lambda_of,
    make_repr_action,
    mu_k,
    partner_w,
    restriction_to_index,
    to_casimir,
    unscaled,
)


def classical_casimirs(p, q):
    """Quadratic and cubic sl(3) Casimirs on the highest weight (p, q), rescaled."""
    c2 = Fraction(p * p + q * q + p * q + 3 * p + 3 * q, 3)
    c3 = (p - q) * (2 * p + q + 3) * (p + 2 * q + 3)
    return -4 * c2, 12 * c2 + Fraction(4, 9) * c3


indices = st.builds(
    lambda n, ell, w, k: SFIndex(n, ell, w, k),
    st.integers(-4, 4), st.integers(0, 5), st.integers(0, 6), st.integers(0, 5),
).filter(lambda i: i.admissible)


def test_restriction_example():
    assert index_to_restriction(SFIndex(-1, 2, 1, 1)) == RestrictionParams(2, 2, 3, 1)
    assert restriction_to_index(RestrictionParams(2, 2, 3, 1)) == SFIndex(-1, 2, 1, 1)


@given(indices)
def test_restriction_round_trip(idx):
    rp = index_to_restriction(idx)
    assert rp.violations() == []
    assert restriction_to_index(rp) == idx


def test_admissibility():
    assert SFIndex(-3, 1, 0, 0).violations() == ["w+n+k=-3 < 0"]
    with pytest.raises(AdmissibilityError):
        SFIndex(0, 1, 0, 2).check()
    assert all(i.admissible for i in admissible_indices(-2, 2, 4))
    assert SFIndex(-2, 2, 0, 2) in admissible_indices(-2, 2, 4)
    assert SFIndex(-2, 2, 0, 1) not in admissible_indices(-2, 2, 4)


def test_regimes():
    assert SFIndex(0, 3, 0, 0).regime == "a"
    assert SFIndex(-3, 3, 3, 0).regime == "b"
    assert SFIndex(-1, 2, 1, 0).regime == "c"


def test_casimir_examples():
    assert casimir_eigenvalues(1, 0) == (Fraction(-16, 3), Fraction(224, 9))
    assert casimir_eigenvalues(0, 1) == (Fraction(-16, 3), Fraction(64, 9))
    assert casimir_eigenvalues(0, 0) == (0, 0)


def test_casimir_matches_classical_polynomials():
    for p in range(10):
        for q in range(10):
            assert casimir_eigenvalues(p, q) == classical_casimirs(p, q)


def test_eigen_examples():
    assert eigen_from_index(SFIndex(0, 1, 0, 1)) == EigenPair(-2, -10)
    assert eigen_from_index(SFIndex(0, 1, 0, 0)) == EigenPair(0, 0)
    assert eigen_from_index(SFIndex(0, 0, 1, 0)) == EigenPair(-3, 0)
    assert unscaled(EigenPair(-2, -10)) == EigenPair(-8, -40)


@given(indices)
def test_partner_root_gives_same_eigenvalues(idx):
    other = SFIndex(idx.n, idx.ell, partner_w(idx), idx.k)
    assert eigen_from_index(other) == eigen_from_index(idx)
    assert canonical_w(idx) == idx.w


def test_mu_k_is_linear_in_lambda():
    for n, ell, k in ((0, 2, 1), (-3, 4, 2), (2, 1, 0)):
        slope = mu_k(n, ell, 1, k) - mu_k(n, ell, 0, k)
        assert slope == n - ell + 3 * k
        assert mu_k(n, ell, lambda_of(n, ell, 0, k), k) == mu_k(n, ell, 0, k) + slope * lambda_of(n, ell, 0, k)


def test_sl2_relations_hold():
    for n in range(-3, 3):
        for ell in range(5):
            assert is_zero_matrix(make_repr_action(n, ell).sl2_defect())


def test_kcasimir_scalars_example():
    assert kcasimir_scalars(0, 1) == (Fraction(-16, 3), Fraction(224, 9))
    assert kcasimir_scalars(0, 0) == (0, 0)


@given(indices)
def test_casimir_chain(idx):
    rp = index_to_restriction(idx)
    assert to_casimir(idx) == casimir_eigenvalues(rp.p, rp.q)
