from fractions import Fraction

import pytest

from su3sph.operators import (
    build_coefficient_matrices,
    radial_apply_D,
    radial_apply_E,
    radial_from_t_polynomial,
    recursion_step_D,
    residual_D,
    residual_E,
)
from su3sph.repr_core import SFIndex, eigen_from_index, make_repr_action, unscaled
from su3sph.series import VectorSeries, psi_closed_form, series_solution


def test_coefficient_matrices_example():
    cm = build_coefficient_matrices(0, 1).as_dict()
    assert cm["a0"] == [[2, 0], [0, 1]]
    assert cm["b0"] == [[-1, 1], [0, 0]]
    assert cm["c0"] == [[-2, -3], [0, 2]]
    assert cm["d0"] == [[-2, 2], [3, -3]]
    assert cm["d1"] == [[0, 0], [-4, 4]]
    assert cm["m"] == [[-1, 0], [0, 2]]


def test_recursion_step_scalar_case():
    cm = build_coefficient_matrices(0, 0)
    assert recursion_step_D(cm, -3, 0, [0], [1]) == [-3]


def test_residuals_vanish_on_solution_only():
    idx = SFIndex(0, 1, 1, 0)
    pair = eigen_from_index(idx)
    cm = build_coefficient_matrices(0, 1)
    s = series_solution(idx)
    assert residual_D(cm, pair.lam, s) == 0
    assert residual_E(cm, pair.mu, s) == 0
    wrong = VectorSeries(1, [(1, 0)], terminated=True)
    assert residual_E(cm, pair.mu, wrong) != 0


@pytest.mark.parametrize("idx", [SFIndex(0, 1, 1, 0), SFIndex(1, 2, 1, 2), SFIndex(-2, 1, 2, 0),
                                 SFIndex(-1, 2, 1, 1), SFIndex(-3, 3, 3, 0)])
def test_t_recursion_agrees_with_radial_operators(idx):
    # the coefficient recursions and the radial operators are coded independently
    s = series_solution(idx)
    ra = make_repr_action(idx.n, idx.ell)
    h = [radial_from_t_polynomial(s.component(i), s.start).to_function() for i in range(idx.ell + 1)]
    pair = unscaled(eigen_from_index(idx))
    assert all(x.equals(y.scale(pair.lam)) for x, y in zip(radial_apply_D(ra, h), h))
    assert all(x.equals(y.scale(pair.mu)) for x, y in zip(radial_apply_E(ra, h), h))


def test_psi_examples():
    psi = [h.to_function() for h in psi_closed_form(-1, 1)]
    ra = make_repr_action(-1, 1)
    assert all(x.equals(y.scale(-12)) for x, y in zip(radial_apply_D(ra, psi), psi))
    psi = [h.to_function() for h in psi_closed_form(-2, 1)]
    ra = make_repr_action(-2, 1)
    assert all(x.equals(y.scale(72)) for x, y in zip(radial_apply_E(ra, psi), psi))


def test_radial_from_t_polynomial():
    # 1 - t = r^2 / (1 + r^2)
    h = radial_from_t_polynomial([1, -1])
    assert h.alpha == -1 and h.coeffs == (0, 1)
    assert h(Fraction(2)) == Fraction(4, 5)
