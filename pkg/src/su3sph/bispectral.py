"""The matrix three-term recursion in w for ell = 2, n >= 0.

Phi(w, t) is the 3x3 matrix whose row k is the k-branch spherical function,
normalized so Phi(w, 1) is all ones.  The identity

    A_w Phi(w-1, t) + B_w Phi(w, t) + C_w Phi(w+1, t) = t Phi(w, t)

holds with t-independent A_w, B_w, C_w.  Their entries are written with
1-based indices i = 1, 2, 3 below and stored 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import Matrix, Poly, det, inverse, padd, pmul, pscale, ptrim, zeros
from .repr_core import SFIndex
from .series import default_truncation, normalize_at_one, series_solution

ELL = 2

PolyMatrix = list[list[Poly]]


@dataclass(frozen=True)
class BispectralTriple:
    n: int
    w: int
    A: Matrix
    B: Matrix
    C: Matrix


def phi_matrix(n: int, w: int, ell: int = ELL, N: int | None = None) -> PolyMatrix:
    """Rows k = 0..ell: the normalized k-branch solutions as polynomials in t."""
    if n < 0:
        raise ValueError("Phi(w, t) is defined here for n >= 0")
    rows = []
    for k in range(ell + 1):
        idx = SFIndex(n, ell, w, k)
        s = normalize_at_one(series_solution(idx, N if N is not None else default_truncation(idx)))
        rows.append([ptrim(s.component(i)) for i in range(ell + 1)])
    return rows


def _entries(n: int, w: int) -> tuple[dict, dict, dict]:
    ell = ELL
    F = Fraction
    a, b, c = {}, {}, {}
    for i in range(1, ell + 2):
        a[i, i] = F(w * (w + ell + 1) * (w + n + i - 1) * (w + n + ell + i),
                    (w + ell - i + 2) * (w + n + 2 * i - 1) * (2 * w + n + ell + i) * (2 * w + n + ell + i + 1))
        c[i, i] = F((w + 1) * (w + ell + 2) * (w + n + i) * (w + n + ell + i + 1),
                    (w + ell - i + 2) * (w + n + 2 * i - 1) * (2 * w + n + ell + i + 1) * (2 * w + n + ell + i + 2))
        if i <= ell:
            a[i, i + 1] = F(2 * w * (w + ell + 1),
                            (w + ell - i + 1) * (w + ell - i + 2) * (w + n + 2 * i - 1) * (2 * w + n + ell + i + 1))
            c[i + 1, i] = F(2 * (w + 1) * (w + ell + 2),
                            (w + ell - i + 1) * (w + ell - i + 2) * (w + n + 2 * i + 1) * (2 * w + n + ell + i + 2))
            b[i + 1, i] = F(2 * (w + n + i) * (w + n + ell + i + 1),
                            (w + ell - i + 1) * (w + n + 2 * i) * (w + n + 2 * i + 1) * (2 * w + n + ell + i + 2))
        if i >= 2:
            b[i - 1, i] = F(2 * (w + n + i - 1) * (w + n + ell + i),
                            (w + ell - i + 3) * (w + n + 2 * i - 3) * (w + n + 2 * i - 2) * (2 * w + n + ell + i))
    z = w * (w + n + 4)
    b[1, 1] = F(z * (2 * z + n * n + 10 * n + 13) + 2 * (n + 1) * (n + 3) * (n + 4),
                (w + 2) * (w + n + 2) * (2 * w + n + 3) * (2 * w + n + 5))
    q = w * (w + n + 5)
    b[2, 2] = F(q * (q * (2 * q + (n + 2) * (n + 12)) + 4 * (n**3 + 10 * n**2 + 28 * n + 28))
                + (n + 4) * (3 * n**3 + 24 * n**2 + 56 * n + 56),
                (w + 1) * (w + 3) * (w + n + 2) * (w + n + 4) * (2 * w + n + 4) * (2 * w + n + 6))
    y = w * (w + n + 6)
    b[3, 3] = F(y * (2 * y + n * n + 10 * n + 29) + 2 * (n + 5) * (n * n + 5 * n + 10),
                (w + 2) * (w + n + 4) * (2 * w + n + 5) * (2 * w + n + 7))
    return a, b, c


def _to_matrix(entries: dict) -> Matrix:
    m = zeros(ELL + 1)
    for (i, j), v in entries.items():
        m[i - 1][j - 1] = v
    return m


def bispectral_matrices(n: int, w: int) -> BispectralTriple:
    if n < 0 or w < 0:
        raise ValueError("the recursion matrices are given for n >= 0 and w >= 0")
    a, b, c = _entries(n, w)
    return BispectralTriple(n, w, _to_matrix(a), _to_matrix(b), _to_matrix(c))


def _apply(m: Matrix, phi: PolyMatrix) -> PolyMatrix:
    size = len(m)
    out = []
    for r in range(size):
        row = []
        for col in range(len(phi[0])):
            acc: Poly = []
            for k in range(size):
                if m[r][k]:
                    acc = padd(acc, pscale(m[r][k], phi[k][col]))
            row.append(acc)
        out.append(row)
    return out


def _madd(x: PolyMatrix, y: PolyMatrix) -> PolyMatrix:
    return [[padd(p, q) for p, q in zip(rx, ry)] for rx, ry in zip(x, y)]


def _times_t(phi: PolyMatrix) -> PolyMatrix:
    return [[pmul([0, 1], p) for p in row] for row in phi]


def defect(n: int, w: int, phis: dict | None = None) -> PolyMatrix:
    """A_w Phi(w-1) + B_w Phi(w) + C_w Phi(w+1) - t Phi(w), as polynomials."""
    phis = {} if phis is None else phis

    def phi(v):
        if v not in phis:
            phis[v] = phi_matrix(n, v)
        return phis[v]

    tr = bispectral_matrices(n, w)
    total = _madd(_apply(tr.B, phi(w)), _apply(tr.C, phi(w + 1)))
    if w > 0:
        total = _madd(total, _apply(tr.A, phi(w - 1)))
    return _madd(total, [[pscale(-1, p) for p in row] for row in _times_t(phi(w))])


def verify_bispectral(n: int, w: int, phis: dict | None = None) -> Fraction:
    """Largest coefficient of the defect polynomial matrix (0 certifies the identity)."""
    d = defect(n, w, phis)
    return max((abs(x) for row in d for p in row for x in p), default=Fraction(0))


def forward_phi(n: int, w: int, phi_prev: PolyMatrix | None, phi_cur: PolyMatrix) -> PolyMatrix:
    """Phi(w+1) = C_w^-1 (t Phi(w) - B_w Phi(w) - A_w Phi(w-1))."""
    tr = bispectral_matrices(n, w)
    rhs = _madd(_times_t(phi_cur), [[pscale(-1, p) for p in row] for row in _apply(tr.B, phi_cur)])
    if w > 0:
        if phi_prev is None:
            raise ValueError("Phi(w-1) is needed for w > 0")
        rhs = _madd(rhs, [[pscale(-1, p) for p in row] for row in _apply(tr.A, phi_prev)])
    return _apply(inverse(tr.C), rhs)


def c_determinant(n: int, w: int) -> Fraction:
    return det(bispectral_matrices(n, w).C)


def structure_ok(tr: BispectralTriple) -> bool:
    """A upper two-diagonal, C lower two-diagonal, B tridiagonal."""
    size = ELL + 1
    for i in range(size):
        for j in range(size):
            if tr.A[i][j] and j not in (i, i + 1):
                return False
            if tr.C[i][j] and j not in (i, i - 1):
                return False
            if tr.B[i][j] and abs(i - j) > 1:
                return False
    return True


def lambda_diagonal(n: int, w: int, ell: int = ELL) -> list[Fraction]:
    """Lambda(i, i) = -w(w+n+i+ell+1) - (i-1)(n+i) for i = 1..ell+1."""
    return [Fraction(-w * (w + n + i + ell + 1) - (i - 1) * (n + i)) for i in range(1, ell + 2)]


def m_diagonal(n: int, w: int, ell: int = ELL) -> list[Fraction]:
    lam = lambda_diagonal(n, w, ell)
    return [lam[i - 1] * (n - ell + 3 * i - 3) - 3 * (i - 1) * (ell - i + 2) * (n + i) for i in range(1, ell + 2)]

