"""The matrix L(lam) = D0 - C0 A0^-1 (B0 - lam) and its eigenvectors (n >= 0).

For n >= 0 a formal D-eigenseries is fixed by its constant term H_0, and E
acts on H_0 through L(lam).  L has nonzero entries only on the sub-, main,
super- and second super-diagonal, which makes every eigenvector computable
by back-substitution from its last coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import Matrix, Vector, charpoly, frac, matmul, matvec, msub, poly_from_roots, zeros
from .operators import build_coefficient_matrices
from .repr_core import mu_k


class SpectralDegeneracyError(ArithmeticError):
    """Back-substitution found no eigenvector for the requested branch."""


@dataclass(frozen=True)
class LMatrix:
    n: int
    ell: int
    lam: Fraction
    entries: Matrix


def _require_nonneg(n: int) -> None:
    if n < 0:
        raise ValueError(f"L(lam) is only built for n >= 0 (got n={n}); use the joint nullspace solver")


def build_L(n: int, ell: int, lam) -> LMatrix:
    _require_nonneg(n)
    lam = frac(lam)
    cm = build_coefficient_matrices(n, ell)
    dim = ell + 1
    a0_inv = zeros(dim)
    for i in range(dim):
        a0_inv[i][i] = 1 / cm.a0[i][i]
    shifted = [row[:] for row in cm.b0]
    for i in range(dim):
        shifted[i][i] -= lam
    entries = msub(cm.d0, matmul(matmul(cm.c0, a0_inv), shifted))
    return LMatrix(n, ell, lam, entries)


def l_diagonals(n: int, ell: int, lam) -> tuple[list, list, list, list]:
    """Closed-form diagonals (a_i, b_i, c_i, d_i) of L(lam).

    a_i sits at (i, i-1), b_i at (i, i), c_i at (i, i+1), d_i at (i, i+2);
    entries whose position falls outside the matrix are returned as 0.
    """
    _require_nonneg(n)
    lam = frac(lam)
    a, b, c, d = [], [], [], []
    for i in range(ell + 1):
        a.append(Fraction(3 * i * (ell - i + 1) * (n + ell - i + 1)) if i >= 1 else Fraction(0))
        b.append(lam * (n - ell + 3 * i) - 3 * (i + 1) * (ell - i) * (ell - 2 * i)
                 - 3 * i * (ell - i + 1) * (n + ell - i + 1))
        if i <= ell - 1:
            c.append(3 * (i + 1) * (ell - i) * (ell - 2 * i - ((i + 2) * (ell - i - 1) + lam) / Fraction(n + ell - i)))
        else:
            c.append(Fraction(0))
        if i <= ell - 2:
            d.append(Fraction(3 * (i + 1) * (i + 2) * (ell - i - 1) * (ell - i), n + ell - i))
        else:
            d.append(Fraction(0))
    return a, b, c, d


def mu_spectrum(n: int, ell: int, lam) -> list[Fraction]:
    _require_nonneg(n)
    return [mu_k(n, ell, lam, k) for k in range(ell + 1)]


def spectrum_polynomial(n: int, ell: int, lam) -> list[Fraction]:
    """prod_k (x - mu_k(lam)) as a coefficient list, lowest degree first."""
    return poly_from_roots(mu_spectrum(n, ell, lam))


def char_poly_L(n: int, ell: int, lam) -> list[Fraction]:
    return charpoly(build_L(n, ell, lam).entries)


def is_degenerate(n: int, ell: int, lam) -> bool:
    mus = mu_spectrum(n, ell, lam)
    return len(set(mus)) < len(mus)


def l_eigenvector(n: int, ell: int, lam, k: int) -> Vector:
    """Eigenvector of L(lam) for mu_k(lam), normalized to last coordinate 1.

    Row i of (L - mu) x = 0 determines x_{i-1} from x_i, x_{i+1}, x_{i+2}
    because a_i != 0 for 1 <= i <= ell; row 0 is then a consistency check.
    """
    _require_nonneg(n)
    if not 0 <= k <= ell:
        raise ValueError(f"k={k} outside [0, {ell}]")
    lam = frac(lam)
    mu = mu_k(n, ell, lam, k)
    L = build_L(n, ell, lam).entries
    x: list[Fraction] = [Fraction(0)] * (ell + 1)
    x[ell] = Fraction(1)
    for i in range(ell, 0, -1):
        s = (L[i][i] - mu) * x[i]
        if i + 1 <= ell:
            s += L[i][i + 1] * x[i + 1]
        if i + 2 <= ell:
            s += L[i][i + 2] * x[i + 2]
        x[i - 1] = -s / L[i][i - 1]
    residual = [y - mu * z for y, z in zip(matvec(L, x), x)]
    if any(residual):
        tag = "degenerate " if is_degenerate(n, ell, lam) else ""
        raise SpectralDegeneracyError(
            f"back-substitution inconsistent for {tag}lam={lam}, k={k} (mu={mu}): row residual {residual[0]}")
    return x
