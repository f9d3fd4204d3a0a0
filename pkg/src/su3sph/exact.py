"""Small exact-arithmetic helpers: rational matrices and polynomials.

Matrices are lists of rows, polynomials are coefficient lists in increasing
degree (``[1, 10, 5]`` is ``1 + 10x + 5x**2``). Everything is built on
``fractions.Fraction`` so identities can be checked with ``==``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Matrix = list[list[Fraction]]
Vector = list[Fraction]
Poly = list[Fraction]


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# -- matrices ---------------------------------------------------------------

def zeros(rows: int, cols: int | None = None) -> Matrix:
    cols = rows if cols is None else cols
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    m = zeros(n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def diag(values: Iterable) -> Matrix:
    values = [frac(v) for v in values]
    m = zeros(len(values))
    for i, v in enumerate(values):
        m[i][i] = v
    return m


def to_matrix(rows: Iterable[Iterable]) -> Matrix:
    return [[frac(x) for x in row] for row in rows]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matvec(a: Matrix, v: Sequence) -> Vector:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def madd(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def msub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mscale(c, a: Matrix) -> Matrix:
    c = frac(c)
    return [[c * x for x in row] for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def is_zero_matrix(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return msub(matmul(a, b), matmul(b, a))


def det(a: Matrix) -> Fraction:
    """Determinant by Gaussian elimination over Q."""
    m = [row[:] for row in a]
    n = len(m)
    result = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            result = -result
        p = m[c][c]
        result *= p
        for r in range(c + 1, n):
            f = m[r][c] / p
            if f:
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    return result


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    m = [row[:] + e for row, e in zip(a, identity(n))]
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        m[c], m[pivot] = m[pivot], m[c]
        p = m[c][c]
        m[c] = [x / p for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[n:] for row in m]


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [row[:] for row in a]
    rows = len(m)
    cols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def nullspace(a: Matrix, cols: int | None = None) -> list[Vector]:
    """Basis of the right nullspace of ``a`` (``cols`` needed when ``a`` has no rows)."""
    if not a:
        return [[Fraction(int(i == j)) for i in range(cols)] for j in range(cols)]
    ncols = len(a[0])
    m, pivots = rref(a)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -m[r][f]
        basis.append(v)
    return basis


def rank(a: Matrix) -> int:
    if not a:
        return 0
    return len(rref(a)[1])


def charpoly(a: Matrix) -> Poly:
    """Coefficients of det(x I - a), lowest degree first (Faddeev-LeVerrier)."""
    n = len(a)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = zeros(n)
    for k in range(1, n + 1):
        m = madd(matmul(a, m), mscale(coeffs[n - k + 1], identity(n)))
        am = matmul(a, m)
        coeffs[n - k] = -sum((am[i][i] for i in range(n)), Fraction(0)) / k
    return coeffs


# -- polynomials ------------------------------------------------------------

def ptrim(p: Sequence) -> Poly:
    p = [frac(x) for x in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def padd(a: Sequence, b: Sequence) -> Poly:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return ptrim(out)


def psub(a: Sequence, b: Sequence) -> Poly:
    return padd(a, [-x for x in b])


def pmul(a: Sequence, b: Sequence) -> Poly:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return ptrim(out)


def pscale(c, a: Sequence) -> Poly:
    c = frac(c)
    return ptrim([c * x for x in a])


def pderiv(a: Sequence) -> Poly:
    return ptrim([i * a[i] for i in range(1, len(a))])


def ppow(a: Sequence, k: int) -> Poly:
    out: Poly = [Fraction(1)]
    for _ in range(k):
        out = pmul(out, a)
    return out


def peval(a: Sequence, x):
    acc = 0 * x
    for c in reversed(a):
        acc = acc * x + c
    return acc


def poly_from_roots(roots: Iterable) -> Poly:
    out: Poly = [Fraction(1)]
    for r in roots:
        out = pmul(out, [-frac(r), Fraction(1)])
    return out


def interpolate(xs: Sequence, ys: Sequence) -> Poly:
    """Lagrange interpolation through the points (xs, ys), exact."""
    out: Poly = []
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        basis: Poly = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = pmul(basis, [-frac(xj), Fraction(1)])
                denom *= frac(xi) - frac(xj)
        out = padd(out, pscale(frac(yi) / denom, basis))
    return out


def fmt(x: Fraction) -> str:
    """Serialize a rational as ``"p/q"`` (``"p"`` when integral)."""
    x = frac(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_fraction(s) -> Fraction:
    return Fraction(s)
