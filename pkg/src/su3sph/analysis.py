"""Inner products, Gram matrices and the boundary condition at t = 0.

In the variable t the inner product of two spherical functions is, up to a
positive constant,

    <H, G> = sum_i int_0^1 h_i(t) g_i(t) (1 - t) t^(n+ell-i) dt,

and for polynomial data every term is a Beta integral
int_0^1 t^m (1 - t) dt = 1 / ((m+1)(m+2)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import Matrix
from .repr_core import admissible_indices, eigen_from_index
from .series import VectorSeries, evaluate_series, normalize_at_one, series_solution


class DivergentIntegralError(ArithmeticError):
    """A term t^m (1-t) with m < 0 appeared under the integral."""


def beta_moment(m: int) -> Fraction:
    """int_0^1 t^m (1 - t) dt for an integer m >= 0."""
    if m < 0:
        raise DivergentIntegralError(f"t^{m}(1-t) is not integrable at 0")
    return Fraction(1, (m + 1) * (m + 2))


def _require_polynomial(s: VectorSeries) -> None:
    if not s.terminated:
        raise ValueError("exact inner products need terminating series")


def inner_product(sa: VectorSeries, sb: VectorSeries, n: int, ell: int) -> Fraction:
    _require_polynomial(sa)
    _require_polynomial(sb)
    if sa.ell != ell or sb.ell != ell:
        raise ValueError("series and K-type have different ell")
    total = Fraction(0)
    for i in range(ell + 1):
        ca, cb = sa.component(i), sb.component(i)
        for ja, x in enumerate(ca):
            if x == 0:
                continue
            for jb, y in enumerate(cb):
                if y:
                    m = sa.start + ja + sb.start + jb + n + ell - i
                    total += x * y * beta_moment(m)
    return total


@dataclass(frozen=True)
class GramReport:
    n: int
    ell: int
    indices: tuple
    eigenpairs: tuple
    gram: tuple
    max_offdiag: Fraction
    norms: tuple

    @property
    def diagonal(self) -> bool:
        return self.max_offdiag == 0

    @property
    def positive(self) -> bool:
        return all(x > 0 for x in self.norms)

    def forced_zero_violations(self) -> list[tuple[int, int]]:
        """Off-diagonal pairs with distinct eigenvalue pairs but nonzero inner product."""
        out = []
        for r, pr in enumerate(self.eigenpairs):
            for c, pc in enumerate(self.eigenpairs):
                if r != c and pr != pc and self.gram[r][c] != 0:
                    out.append((r, c))
        return out


def gram_matrix(n: int, ell: int, w_max: int) -> GramReport:
    """Exact Gram matrix of the normalized spherical functions with w <= w_max."""
    indices = admissible_indices(n, ell, w_max)
    series = [normalize_at_one(series_solution(idx)) for idx in indices]
    pairs = [eigen_from_index(idx) for idx in indices]
    size = len(series)
    gram: Matrix = [[Fraction(0)] * size for _ in range(size)]
    for r in range(size):
        for c in range(r, size):
            gram[r][c] = gram[c][r] = inner_product(series[r], series[c], n, ell)
    off = max((abs(gram[r][c]) for r in range(size) for c in range(size) if r != c), default=Fraction(0))
    return GramReport(n, ell, tuple(indices), tuple(pairs), tuple(map(tuple, gram)), off,
                      tuple(gram[r][r] for r in range(size)))


@dataclass(frozen=True)
class ComponentBoundary:
    i: int
    order: int | None
    weight_exponent: Fraction
    passed: bool


@dataclass(frozen=True)
class BoundaryReport:
    components: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.components)


def boundary_check(s: VectorSeries, n: int, ell: int) -> BoundaryReport:
    """Decay condition at t = 0 (r -> infinity), componentwise.

    (1+r^2)^(-(n+ell-i)/2) h_i = t^((n+ell-i)/2) h_i must tend to 0 for
    i != n+ell, and stay bounded for i = n+ell.
    """
    _require_polynomial(s)
    out = []
    for i in range(ell + 1):
        order = s.component_order(i)
        half = Fraction(n + ell - i, 2)
        if order is None:
            ok = True
        elif i == n + ell:
            ok = order >= 0
        else:
            ok = order + half > 0
        out.append(ComponentBoundary(i, order, half, ok))
    return BoundaryReport(tuple(out))


def scalar_at_one(s: VectorSeries) -> bool:
    return len(set(evaluate_series(s, Fraction(1)))) == 1


def inner_product_approx(sa: VectorSeries, sb: VectorSeries, n: int, ell: int, nodes: int = 40) -> float:
    """Gauss-Jacobi quadrature of the same integral, in floating point.

    Meant for exploratory, non-polynomial inputs (truncated series); the
    stored coefficients are treated as the function.  Needs scipy.
    """
    from scipy.special import roots_jacobi

    total = 0.0
    for i in range(ell + 1):
        beta = n + ell - i + sa.start + sb.start
        if beta <= -1:
            raise DivergentIntegralError(f"weight exponent {beta} at component {i}")
        # t = (1+x)/2 turns (1-t) t^beta dt into 2^-(beta+2) (1-x)(1+x)^beta dx
        xs, ws = roots_jacobi(nodes, 1.0, float(beta))
        acc = 0.0
        for x, wt in zip(xs, ws):
            t = (1.0 + x) / 2.0
            fa = evaluate_series(_shift(sa), t)[i]
            fb = evaluate_series(_shift(sb), t)[i]
            acc += wt * float(fa) * float(fb)
        total += acc / 2.0 ** (beta + 2)
    return total


def _shift(s: VectorSeries) -> VectorSeries:
    # the t^start factor is folded into the Jacobi weight
    return VectorSeries(s.ell, s.coeffs, 0, s.terminated)

