"""The operators D and E: coefficient matrices, recursions, radial forms.

In the variable t = (1 + r^2)^-1 the two operators read

    D H = t(1-t) H'' + (A0 - t A1) H' + (B0 - t B1) H / (1-t)
    E H = t(1-t) M H'' + (C0 - t C1) H' + (D0 + t D1) H / (1-t)

with (ell+1)x(ell+1) rational coefficient matrices.  Power series solutions
H = sum_j H_j t^j turn both eigen-equations into three term recursions in j.

The r-variable systems act on functions of the form (1+r^2)^alpha P(r) / r^e,
handled exactly by :class:`RadialFunction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import (
    Matrix,
    Vector,
    diag,
    frac,
    madd,
    matvec,
    padd,
    pderiv,
    peval,
    pmul,
    ppow,
    pscale,
    ptrim,
    zeros,
)
from .repr_core import ReprAction


@dataclass(frozen=True)
class CoefficientMatrices:
    n: int
    ell: int
    a0: Matrix
    a1: Matrix
    b0: Matrix
    b1: Matrix
    m: Matrix
    c0: Matrix
    c1: Matrix
    d0: Matrix
    d1: Matrix

    @property
    def dim(self) -> int:
        return self.ell + 1

    def as_dict(self) -> dict[str, Matrix]:
        return {name: getattr(self, name) for name in ("a0", "a1", "b0", "b1", "m", "c0", "c1", "d0", "d1")}


def build_coefficient_matrices(n: int, ell: int) -> CoefficientMatrices:
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    dim = ell + 1
    a0 = diag(n + ell - i + 1 for i in range(dim))
    a1 = diag(n + ell - i + 3 for i in range(dim))
    m = diag(n - ell + 3 * i for i in range(dim))
    b0, b1, c0, c1, d0, d1 = (zeros(dim) for _ in range(6))

    def put(mat: Matrix, i: int, j: int, value) -> None:
        # terms with an out-of-range index carry a vanishing coefficient
        if 0 <= j < dim:
            mat[i][j] += value

    for i in range(dim):
        up = (i + 1) * (ell - i)
        down = i * (ell - i + 1)
        put(b0, i, i + 1, up)
        put(b0, i, i, -up)
        put(b1, i, i, down)
        put(b1, i, i - 1, -down)
        put(c0, i, i, (n - ell + 3 * i) * (n + ell - i + 1))
        put(c0, i, i + 1, -3 * up)
        put(c1, i, i, (n - ell + 3 * i) * (n + ell - i + 3))
        put(c1, i, i - 1, -3 * down)
        put(d0, i, i + 1, (n + 2 * ell - 3 * i) * up)
        put(d0, i, i, -(n + 2 * ell - 3 * i) * up)
        put(d0, i, i, -3 * (n + ell - i + 1) * down)
        put(d0, i, i - 1, 3 * (n + ell - i + 1) * down)
        put(d1, i, i, (2 * n + ell + 3) * down)
        put(d1, i, i - 1, -(2 * n + ell + 3) * down)
    return CoefficientMatrices(n, ell, a0, a1, b0, b1, m, c0, c1, d0, d1)


# -- three term recursions --------------------------------------------------
#
# D:  P_D(j) H_{j-1} - Q_D(j) H_j + R_D(j) H_{j+1} = 0
#     P_D = (j-1)(j-2) + (j-1) A1 - B1 + lam
#     Q_D = 2j(j-1) + j (A0 + A1) - B0 + lam
#     R_D = (j+1)(j + A0)
# E:  P_E = (j-1)(j-2) M + (j-1) C1 + D1 + mu
#     Q_E = 2j(j-1) M + j (C0 + C1) - D0 + mu
#     R_E = (j+1)(j M + C0)

def _lin(*terms) -> Matrix:
    """Sum of scalar * matrix terms; a bare scalar means scalar * identity."""
    dim = next(len(t[1]) for t in terms if isinstance(t, tuple))
    out = zeros(dim)
    for t in terms:
        if isinstance(t, tuple):
            c, mat = t
            out = madd(out, [[frac(c) * x for x in row] for row in mat])
        else:
            for i in range(dim):
                out[i][i] += frac(t)
    return out


def d_recursion_matrices(cm: CoefficientMatrices, lam, j: int) -> tuple[Matrix, Matrix, Matrix]:
    lam = frac(lam)
    p = _lin((j - 1, cm.a1), (-1, cm.b1), (j - 1) * (j - 2) + lam)
    q = _lin((j, cm.a0), (j, cm.a1), (-1, cm.b0), 2 * j * (j - 1) + lam)
    r = _lin((j + 1, cm.a0), (j + 1) * j)
    return p, q, r


def e_recursion_matrices(cm: CoefficientMatrices, mu, j: int) -> tuple[Matrix, Matrix, Matrix]:
    mu = frac(mu)
    p = _lin(((j - 1) * (j - 2), cm.m), (j - 1, cm.c1), (1, cm.d1), mu)
    q = _lin((2 * j * (j - 1), cm.m), (j, cm.c0), (j, cm.c1), (-1, cm.d0), mu)
    r = _lin(((j + 1) * j, cm.m), (j + 1, cm.c0))
    return p, q, r


def _defect(mats: tuple[Matrix, Matrix, Matrix], h_prev: Sequence, h_cur: Sequence, h_next: Sequence) -> Vector:
    p, q, r = mats
    return [x - y + z for x, y, z in zip(matvec(p, h_prev), matvec(q, h_cur), matvec(r, h_next))]


class SingularStepError(ArithmeticError):
    """The leading matrix of the D-recursion is singular at this step."""

    def __init__(self, j: int, rows: list[int]):
        self.j = j
        self.rows = rows
        super().__init__(f"(j+1)(j+A0) singular at j={j}: rows {rows} (n+ell-i+1+j == 0)")


def recursion_step_D(cm: CoefficientMatrices, lam, j: int, h_prev: Sequence, h_cur: Sequence) -> Vector:
    """Solve the D-recursion at index j for H_{j+1}."""
    p, q, r = d_recursion_matrices(cm, lam, j)
    rhs = [y - x for x, y in zip(matvec(p, h_prev), matvec(q, h_cur))]
    bad = [i for i in range(cm.dim) if r[i][i] == 0]
    if bad:
        raise SingularStepError(j, bad)
    return [rhs[i] / r[i][i] for i in range(cm.dim)]


def _coeff(coeffs: Sequence[Sequence], j: int, dim: int) -> Sequence:
    if 0 <= j < len(coeffs):
        return coeffs[j]
    return [Fraction(0)] * dim


def d_defects(cm: CoefficientMatrices, lam, coeffs: Sequence[Sequence], j_max: int) -> list[Vector]:
    """Defects of the D-recursion for j = 0..j_max; coeffs[j] is H_j."""
    dim = cm.dim
    return [_defect(d_recursion_matrices(cm, lam, j), _coeff(coeffs, j - 1, dim), _coeff(coeffs, j, dim),
                    _coeff(coeffs, j + 1, dim)) for j in range(j_max + 1)]


def e_defects(cm: CoefficientMatrices, mu, coeffs: Sequence[Sequence], j_max: int) -> list[Vector]:
    dim = cm.dim
    return [_defect(e_recursion_matrices(cm, mu, j), _coeff(coeffs, j - 1, dim), _coeff(coeffs, j, dim),
                    _coeff(coeffs, j + 1, dim)) for j in range(j_max + 1)]


def _max_abs(vectors) -> Fraction:
    return max((abs(x) for v in vectors for x in v), default=Fraction(0))


def residual_D(cm: CoefficientMatrices, lam, series, j_max: int | None = None) -> Fraction:
    coeffs, j_max = _checked_coeffs(series, j_max)
    return _max_abs(d_defects(cm, lam, coeffs, j_max))


def residual_E(cm: CoefficientMatrices, mu, series, j_max: int | None = None) -> Fraction:
    """Largest entry of the E-recursion defect over j <= j_max.

    The series must carry coefficients through j_max + 1, unless it is known
    to terminate (its tail is then zero).
    """
    coeffs, j_max = _checked_coeffs(series, j_max)
    return _max_abs(e_defects(cm, mu, coeffs, j_max))


def _checked_coeffs(series, j_max):
    coeffs = series.dense()
    available = len(coeffs) - 1
    if j_max is None:
        j_max = available if series.terminated else available - 1
    if j_max + 1 > available and not series.terminated:
        raise ValueError(f"series truncated at order {available}; defect at j={j_max} needs order {j_max + 1}")
    return coeffs, j_max


# -- radial r-variable systems -----------------------------------------------

@dataclass(frozen=True)
class RadialPoly:
    """h(r) = (1 + r^2)^alpha * sum_m coeffs[m] r^(2m)."""

    alpha: int
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(frac(c) for c in self.coeffs))

    def to_function(self) -> "RadialFunction":
        num = [Fraction(0)] * (2 * len(self.coeffs))
        for m, c in enumerate(self.coeffs):
            num[2 * m] = c
        return RadialFunction(self.alpha, ptrim(num), 0)

    def __call__(self, r):
        return self.to_function()(r)


@dataclass(frozen=True)
class RadialFunction:
    """f(r) = (1 + r^2)^alpha * num(r) / r^e, num a polynomial in r."""

    alpha: int
    num: tuple
    e: int = 0

    def __post_init__(self):
        object.__setattr__(self, "num", tuple(ptrim(self.num)))

    @staticmethod
    def zero() -> "RadialFunction":
        return RadialFunction(0, (), 0)

    def is_zero(self) -> bool:
        return not self.num

    def _aligned(self, alpha: int, e: int) -> list[Fraction]:
        # rewrite with a smaller (1+r^2)-exponent and a larger r-denominator
        num = pmul(list(self.num), ppow([1, 0, 1], self.alpha - alpha))
        return [Fraction(0)] * (e - self.e) + num

    def __add__(self, other: "RadialFunction") -> "RadialFunction":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        alpha = min(self.alpha, other.alpha)
        e = max(self.e, other.e)
        return RadialFunction(alpha, padd(self._aligned(alpha, e), other._aligned(alpha, e)), e)

    def __neg__(self) -> "RadialFunction":
        return RadialFunction(self.alpha, pscale(-1, self.num), self.e)

    def __sub__(self, other: "RadialFunction") -> "RadialFunction":
        return self + (-other)

    def scale(self, c) -> "RadialFunction":
        return RadialFunction(self.alpha, pscale(c, self.num), self.e)

    def times(self, poly: Sequence = (1,), alpha: int = 0, e: int = 0) -> "RadialFunction":
        """Multiply by poly(r) * (1+r^2)^alpha / r^e."""
        return RadialFunction(self.alpha + alpha, pmul(list(self.num), list(poly)), self.e + e)

    def derivative(self) -> "RadialFunction":
        # d/dr [(1+r^2)^a N r^-e] = (1+r^2)^(a-1) r^(-e-1) [2a r^2 N + (1+r^2)(r N' - e N)]
        n = list(self.num)
        inner = padd(pscale(-self.e, n), [Fraction(0)] + pderiv(n))
        num = padd(pmul([0, 0, 2 * self.alpha], n), pmul([1, 0, 1], inner))
        return RadialFunction(self.alpha - 1, num, self.e + 1)

    def __call__(self, r):
        return (1 + r * r) ** self.alpha * peval(self.num, r) / r**self.e

    def equals(self, other: "RadialFunction") -> bool:
        return (self - other).is_zero()


def _as_functions(h: Sequence) -> list[RadialFunction]:
    return [x.to_function() if isinstance(x, RadialPoly) else x for x in h]


def radial_apply_D(ra: ReprAction, h: Sequence) -> list[RadialFunction]:
    """Left-hand side of the radial D-system, componentwise."""
    n, ell = ra.n, ra.ell
    if len(h) != ell + 1:
        raise ValueError(f"expected {ell + 1} components, got {len(h)}")
    f = _as_functions(h)
    out = []
    for i in range(ell + 1):
        d1 = f[i].derivative()
        d2 = d1.derivative()
        term = d2.times(alpha=2)
        term += d1.times([3, 0, 1 - 2 * (n + ell - i)], alpha=1, e=1)
        up = (i + 1) * (ell - i)
        down = i * (ell - i + 1)
        bracket = RadialFunction.zero()
        if up:
            bracket += (f[i + 1] - f[i]).scale(up)
        if down:
            bracket += (f[i - 1] - f[i]).scale(down)
            term -= (f[i - 1] - f[i]).scale(4 * down)
        term += bracket.times(alpha=1, e=2).scale(4)
        out.append(term)
    return out


def radial_apply_E(ra: ReprAction, h: Sequence) -> list[RadialFunction]:
    """Left-hand side of the radial E-system, componentwise."""
    n, ell = ra.n, ra.ell
    if len(h) != ell + 1:
        raise ValueError(f"expected {ell + 1} components, got {len(h)}")
    f = _as_functions(h)
    der = [x.derivative() for x in f]
    out = []
    for i in range(ell + 1):
        s = n - ell + 3 * i
        up = (i + 1) * (ell - i)
        down = i * (ell - i + 1)
        term = der[i].derivative().times(alpha=2).scale(s)
        term += der[i].times([3, 0, 1 - 2 * (n + ell - i)], alpha=1, e=1).scale(s)
        if up:
            term += der[i + 1].times(alpha=2, e=1).scale(6 * up)
        if down:
            term -= der[i - 1].times(alpha=1, e=1).scale(6 * down)
        bracket = RadialFunction.zero()
        if up:
            bracket += (f[i + 1] - f[i]).scale(up)
        if down:
            bracket += (f[i - 1] - f[i]).scale(down)
            term += (f[i - 1] - f[i]).scale(4 * down * (2 * n + ell + 3))
        term += bracket.times(alpha=1, e=2).scale(4 * (n + 2 * ell - 3 * i))
        out.append(term)
    return out


def radial_from_t_polynomial(coeffs: Sequence, start: int = 0) -> RadialPoly:
    """Rewrite sum_j c_j t^(start+j) with t = (1+r^2)^-1 as a RadialPoly."""
    coeffs = ptrim(coeffs)
    if not coeffs:
        return RadialPoly(0, ())
    d = start + len(coeffs) - 1
    # t^(start+j) = (1+r^2)^-d (1+r^2)^(d-start-j), polynomial in u = r^2
    poly: list[Fraction] = []
    for j, c in enumerate(coeffs):
        if c:
            poly = padd(poly, pscale(c, ppow([1, 1], d - start - j)))
    return RadialPoly(-d, tuple(poly))
