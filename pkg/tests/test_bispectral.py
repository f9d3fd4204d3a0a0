from fractions import Fraction

import pytest
import sympy

from su3sph.bispectral import (
    bispectral_matrices,
    c_determinant,
    forward_phi,
    lambda_diagonal,
    m_diagonal,
    phi_matrix,
    structure_ok,
    verify_bispectral,
)
from su3sph.exact import peval, ptrim
from su3sph.repr_core import lambda_of, mu_k


def solve_recursion(n, w):
    """A, B, C recovered from the Phi polynomials by exact linear algebra."""
    phis = {v: phi_matrix(n, v) for v in (w - 1, w, w + 1) if v >= 0}
    names = "ABC"
    syms = {x: sympy.Matrix(3, 3, lambda i, j: sympy.Symbol(f"{x}{i}{j}")) for x in names}
    eqs = []
    for col in range(3):
        for deg in range(12):
            for r in range(3):
                lhs = 0
                for x, v in zip(names, (w - 1, w, w + 1)):
                    if v in phis:
                        lhs += sum(syms[x][r, k] * coeff(phis[v][k][col], deg) for k in range(3))
                eqs.append(lhs - coeff(phis[w][r][col], deg - 1))
    unknowns = [s for x in names for s in syms[x] if w > 0 or x != "A"]
    sol = sympy.solve(eqs, unknowns, dict=True)
    assert len(sol) == 1
    return {x: [[Fraction(str(sol[0].get(syms[x][i, j], 0))) for j in range(3)] for i in range(3)] for x in names}


def coeff(p, d):
    return sympy.Rational(p[d].numerator, p[d].denominator) if 0 <= d < len(p) else 0


def test_printed_entries_examples():
    assert bispectral_matrices(0, 1).A[0][0] == Fraction(1, 15)
    assert bispectral_matrices(0, 0).C[0][0] == Fraction(4, 15)


@pytest.mark.parametrize("n,w", [(0, 0), (0, 2), (1, 1), (2, 3)])
def test_printed_matrices_are_the_unique_solution(n, w):
    tr = bispectral_matrices(n, w)
    solved = solve_recursion(n, w)
    assert solved["B"] == tr.B and solved["C"] == tr.C
    if w > 0:
        assert solved["A"] == tr.A


def test_phi_is_ones_at_one():
    for w in range(3):
        assert all(peval(p, 1) == 1 for row in phi_matrix(1, w) for p in row)


def test_identity_and_forward_generation():
    cache = {}
    assert verify_bispectral(2, 0, cache) == 0
    assert verify_bispectral(2, 1, cache) == 0
    generated = forward_phi(2, 1, cache[0], cache[1])
    assert [[ptrim(p) for p in row] for row in generated] == cache[2]


def test_structure_and_invertibility():
    for n in range(3):
        for w in range(4):
            assert structure_ok(bispectral_matrices(n, w))
            assert c_determinant(n, w) != 0
    assert all(x == 0 for row in bispectral_matrices(1, 0).A for x in row)


def test_eigenvalue_diagonals():
    for n in range(3):
        for w in range(4):
            lam = lambda_diagonal(n, w)
            assert lam == [lambda_of(n, 2, w, k) for k in range(3)]
            assert m_diagonal(n, w) == [mu_k(n, 2, lam[k], k) for k in range(3)]
    assert lambda_diagonal(0, 1) == [-5, -8, -13]
    assert m_diagonal(0, 1) == [10, -20, -70]


def test_negative_n_rejected():
    with pytest.raises(ValueError):
        phi_matrix(-1, 0)
