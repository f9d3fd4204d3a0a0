from fractions import Fraction

import sympy
from hypothesis import given
from hypothesis import strategies as st

from su3sph.exact import (
    charpoly,
    det,
    fmt,
    identity,
    interpolate,
    inverse,
    matmul,
    matvec,
    nullspace,
    parse_fraction,
    peval,
    pmul,
    poly_from_roots,
    rank,
    to_matrix,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=9)


def square(size):
    return st.lists(st.lists(rationals, min_size=size, max_size=size), min_size=size, max_size=size)


@given(square(4))
def test_charpoly_matches_sympy(rows):
    m = to_matrix(rows)
    expected = sympy.Matrix(rows).charpoly().all_coeffs()[::-1]
    assert charpoly(m) == [Fraction(str(c)) for c in expected]


@given(square(3), square(3))
def test_det_is_multiplicative(a, b):
    assert det(matmul(to_matrix(a), to_matrix(b))) == det(to_matrix(a)) * det(to_matrix(b))


@given(square(3))
def test_inverse_round_trip(rows):
    m = to_matrix(rows)
    if det(m) != 0:
        assert matmul(m, inverse(m)) == identity(3)


@given(st.lists(st.lists(rationals, min_size=5, max_size=5), min_size=1, max_size=4))
def test_nullspace_dimension_and_kernel(rows):
    m = to_matrix(rows)
    basis = nullspace(m, 5)
    assert len(basis) == 5 - rank(m)
    for v in basis:
        assert all(x == 0 for x in matvec(m, v))


def test_nullspace_of_empty_system_is_full():
    assert len(nullspace([], 3)) == 3


@given(st.lists(rationals, min_size=1, max_size=5))
def test_poly_from_roots_vanishes_at_roots(roots):
    p = poly_from_roots(roots)
    assert all(peval(p, r) == 0 for r in roots)
    assert p[-1] == 1


def test_interpolate_recovers_polynomial():
    p = pmul([1, 2], [Fraction(-1, 3), 0, 5])
    xs = [Fraction(x) for x in range(4)]
    assert interpolate(xs, [peval(p, x) for x in xs]) == p


def test_fraction_format_round_trip():
    assert fmt(Fraction(-3, 4)) == "-3/4"
    assert fmt(Fraction(6, 3)) == "2"
    assert parse_fraction("-3/4") == Fraction(-3, 4)
