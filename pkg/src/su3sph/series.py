"""Joint eigenfunctions of D and E as exact power series in t.

For n >= 0 the series is generated from an eigenvector of L(lam) by the
D-recursion.  For n < 0 the leading matrix of the D-recursion is singular
at small j; there the coefficients are carried as linear functions of a
few free parameters, the E-recursion and the order conditions at t = 0 are
imposed as constraints, and the surviving one-dimensional family is the
solution.

Hypergeometric closed forms are stored as :class:`HypergeometricSpec`,
where the extra parameter pairs (s_m + 1; s_m) are folded into a polynomial
multiplier P(j) proportional to prod_m (s_m + j).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .eigen import l_eigenvector
from .exact import Vector, frac, interpolate, matvec, nullspace, peval, ptrim
from .operators import (
    RadialPoly,
    build_coefficient_matrices,
    d_recursion_matrices,
    e_recursion_matrices,
    recursion_step_D,
)
from .repr_core import SFIndex, eigen_from_index, lambda_of, mu_k


def default_truncation(idx: SFIndex) -> int:
    return idx.w + idx.ell + abs(min(idx.n, 0)) + 8


# -- vector series -----------------------------------------------------------

@dataclass(frozen=True)
class VectorSeries:
    """sum_j H_j t^j with H_j stored for j = start .. start + len(coeffs) - 1.

    ``terminated`` records that every coefficient past the stored ones is
    zero, so the series is a polynomial (times t^start when start < 0).
    """

    ell: int
    coeffs: tuple
    start: int = 0
    terminated: bool = False

    def __post_init__(self):
        rows = tuple(tuple(frac(x) for x in h) for h in self.coeffs)
        for h in rows:
            if len(h) != self.ell + 1:
                raise ValueError(f"coefficient of length {len(h)} in a series with ell={self.ell}")
        object.__setattr__(self, "coeffs", rows)

    @property
    def dim(self) -> int:
        return self.ell + 1

    @property
    def truncation(self) -> int:
        return self.start + len(self.coeffs) - 1

    def coeff(self, j: int) -> tuple:
        k = j - self.start
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        if k >= len(self.coeffs) and not self.terminated:
            raise IndexError(f"coefficient {j} beyond truncation {self.truncation}")
        return (Fraction(0),) * self.dim

    def dense(self) -> list[tuple]:
        """H_0 .. H_N as a list (requires start >= 0)."""
        if self.start < 0:
            raise ValueError("series has negative powers of t")
        return [(Fraction(0),) * self.dim] * self.start + list(self.coeffs)

    def is_zero(self) -> bool:
        return all(x == 0 for h in self.coeffs for x in h)

    @property
    def leading_order(self) -> int | None:
        for j, h in enumerate(self.coeffs):
            if any(h):
                return self.start + j
        return None

    @property
    def degree(self) -> int | None:
        for j in range(len(self.coeffs) - 1, -1, -1):
            if any(self.coeffs[j]):
                return self.start + j
        return None

    def component(self, i: int) -> list[Fraction]:
        """Coefficients of h_i for j = start .. truncation."""
        return [h[i] for h in self.coeffs]

    def component_order(self, i: int) -> int | None:
        for j, h in enumerate(self.coeffs):
            if h[i] != 0:
                return self.start + j
        return None

    def scale(self, c) -> "VectorSeries":
        c = frac(c)
        return VectorSeries(self.ell, tuple(tuple(c * x for x in h) for h in self.coeffs), self.start,
                            self.terminated)

    def trimmed(self) -> "VectorSeries":
        """Drop trailing zero coefficients of a terminated series."""
        if not self.terminated:
            return self
        deg = self.degree
        if deg is None:
            return VectorSeries(self.ell, (), self.start, True)
        return VectorSeries(self.ell, self.coeffs[: deg - self.start + 1], self.start, True)


def _zero_vec(dim: int) -> list[Fraction]:
    return [Fraction(0)] * dim


def _terminates(coeffs: Sequence[Sequence], last_singular: int) -> bool:
    # past the last singular step two consecutive zero coefficients force a zero tail
    if len(coeffs) < 2:
        return False
    j = len(coeffs) - 1
    return j - 1 > last_singular + 1 and not any(coeffs[-1]) and not any(coeffs[-2])


# -- solvers -----------------------------------------------------------------

class SolverError(ArithmeticError):
    """The joint eigen-system did not have a one-dimensional solution space."""


def series_solution(idx: SFIndex, N: int | None = None) -> VectorSeries:
    """Joint (D, E)-eigenseries of an admissible index through order N."""
    idx.check()
    N = default_truncation(idx) if N is None else N
    pair = eigen_from_index(idx)
    if idx.n < 0:
        return joint_nullspace_solution(idx.n, idx.ell, pair.lam, pair.mu, N)
    return d_series(idx.n, idx.ell, pair.lam, l_eigenvector(idx.n, idx.ell, pair.lam, idx.k), N)


def d_series(n: int, ell: int, lam, h0: Sequence, N: int) -> VectorSeries:
    """Run the D-recursion from H_0 (n >= 0, where every step is regular)."""
    cm = build_coefficient_matrices(n, ell)
    coeffs = [list(map(frac, h0))]
    prev = _zero_vec(ell + 1)
    for j in range(N):
        nxt = recursion_step_D(cm, lam, j, prev, coeffs[-1])
        prev = coeffs[-1]
        coeffs.append(nxt)
        if _terminates(coeffs, -1):
            break
    done = _terminates(coeffs, -1)
    # pad so that the stored truncation is N even after early termination
    coeffs += [_zero_vec(ell + 1)] * (N + 1 - len(coeffs))
    return VectorSeries(ell, tuple(map(tuple, coeffs)), 0, done)


def order_bounds(n: int, ell: int) -> list[int]:
    """Smallest admissible t-order of each component at t = 0.

    Combines the overall zero of order -n-ell (when n + ell < 0) with the
    componentwise condition H_{i,j} = 0 for j < -floor((n+ell-i)/2).
    """
    a = max(0, -n - ell)
    return [max(a, -((n + ell - i) // 2)) for i in range(ell + 1)]


def joint_nullspace_solution(n: int, ell: int, lam, mu, N: int) -> VectorSeries:
    """Solve the D- and E-recursions together for H_0 .. H_N.

    Each coefficient H_j is kept as an (ell+1) x P matrix acting on a vector
    of P free parameters.  Regular rows of the D-recursion define H_{j+1};
    singular rows open a new parameter and contribute a constraint, as do
    the E-recursion and the order bounds.  After every step the parameters
    are restricted to the nullspace of the constraints.
    """
    lam, mu = frac(lam), frac(mu)
    dim = ell + 1
    cm = build_coefficient_matrices(n, ell)
    bounds = order_bounds(n, ell)

    # H_0: one parameter per component, unless the order bound kills it
    nparams = dim
    coeffs: list[list[list[Fraction]]] = [[[Fraction(int(r == c)) for c in range(dim)] for r in range(dim)]]
    constraints: list[list[Fraction]] = [coeffs[0][i][:] for i in range(dim) if bounds[i] > 0]
    last_singular = -1

    def apply(vec_rows, mat):
        return [[sum((x * mat[k][c] for k, x in enumerate(row)), Fraction(0)) for c in range(len(mat[0]))]
                for row in vec_rows]

    def reduce(cons):
        nonlocal coeffs, nparams
        if not cons:
            return
        basis = nullspace(cons, nparams)
        if not basis:
            coeffs = [[[] for _ in range(dim)] for _ in coeffs]
            nparams = 0
            return
        k = [[b[r] for b in basis] for r in range(nparams)]
        coeffs = [apply(h, k) for h in coeffs]
        nparams = len(basis)

    reduce(constraints)
    for j in range(N):
        # a step may open new parameters even when none survive so far
        zero = [[Fraction(0)] * nparams for _ in range(dim)]
        h_prev = coeffs[j - 1] if j >= 1 else zero
        h_cur = coeffs[j]
        p, q, r = d_recursion_matrices(cm, lam, j)
        rhs = [[y - x for x, y in zip(rp, rq)] for rp, rq in zip(_mat_rows(p, h_prev), _mat_rows(q, h_cur))]
        new_params = [i for i in range(dim) if r[i][i] == 0]
        if new_params:
            last_singular = j
        width = nparams + len(new_params)
        h_next = []
        cons = []
        for i in range(dim):
            if r[i][i] == 0:
                row = [Fraction(0)] * width
                row[nparams + new_params.index(i)] = Fraction(1)
                h_next.append(row)
                cons.append(rhs[i] + [Fraction(0)] * len(new_params))
            else:
                h_next.append([x / r[i][i] for x in rhs[i]] + [Fraction(0)] * len(new_params))
        if new_params:
            coeffs = [[row + [Fraction(0)] * len(new_params) for row in h] for h in coeffs]
            nparams = width
            h_prev = coeffs[j - 1] if j >= 1 else [[Fraction(0)] * nparams for _ in range(dim)]
            h_cur = coeffs[j]
        coeffs.append(h_next)
        pe, qe, re = e_recursion_matrices(cm, mu, j)
        for a_row, b_row, c_row in zip(_mat_rows(pe, h_prev), _mat_rows(qe, h_cur), _mat_rows(re, h_next)):
            cons.append([x - y + z for x, y, z in zip(a_row, b_row, c_row)])
        for i in range(dim):
            if j + 1 < bounds[i]:
                cons.append(h_next[i][:])
        reduce([c for c in cons if any(c)])

    if nparams != 1:
        what = "no nonzero solution" if nparams == 0 else f"{nparams}-dimensional solution space"
        raise SolverError(f"joint system for n={n}, ell={ell}, lam={lam}, mu={mu}, N={N}: {what}")
    values = [[h[i][0] for i in range(dim)] for h in coeffs]
    values += [_zero_vec(dim)] * (N + 1 - len(values))
    series = VectorSeries(ell, tuple(map(tuple, values)), 0, _terminates(values, last_singular))
    return _normalize_last_component(series)


def _mat_rows(m, h):
    """Rows of m @ h where h is a dim x P parameter matrix."""
    width = len(h[0]) if h else 0
    return [[sum((m[i][k] * h[k][c] for k in range(len(h))), Fraction(0)) for c in range(width)]
            for i in range(len(m))]


def _normalize_last_component(s: VectorSeries) -> VectorSeries:
    """Scale so the lowest nonzero coefficient of the last nonzero component is 1."""
    for i in range(s.ell, -1, -1):
        order = s.component_order(i)
        if order is not None:
            return s.scale(1 / s.coeff(order)[i])
    return s


# -- evaluation and normalization -------------------------------------------

def evaluate_series(s: VectorSeries, t) -> list:
    """Horner evaluation of the stored coefficients at t."""
    out = []
    for i in range(s.dim):
        v = peval(s.component(i), t)
        out.append(v * t**s.start if s.start else v)
    return out


class NormalizationError(ArithmeticError):
    pass


def normalize_at_one(s: VectorSeries) -> VectorSeries:
    """Rescale a polynomial solution so that every component equals 1 at t = 1."""
    if not s.terminated:
        raise NormalizationError("normalization at t=1 needs a terminating series")
    values = evaluate_series(s, Fraction(1))
    if len(set(values)) != 1:
        raise NormalizationError(f"components differ at t=1: {values}")
    if values[0] == 0:
        raise NormalizationError("series vanishes at t=1")
    return s.scale(1 / values[0])


# -- hypergeometric data -----------------------------------------------------

@dataclass(frozen=True)
class HypergeometricSpec:
    """prefactor * t^offset * sum_j (a)_j (b)_j / (j! (c)_j) * P(j) t^j.

    ``poly`` holds the coefficients of P, constant term first.  Normally
    P(0) = 1 and P(j) = prod_m (s_m + j) / prod_m s_m; when some s_m is 0 the
    normalization is impossible and P keeps a zero constant term instead.
    """

    prefactor: Fraction
    offset: int
    a: Fraction
    b: Fraction
    c: Fraction
    poly: tuple = (Fraction(1),)

    def __post_init__(self):
        for name in ("prefactor", "a", "b", "c"):
            object.__setattr__(self, name, frac(getattr(self, name)))
        object.__setattr__(self, "poly", tuple(frac(x) for x in self.poly) or (Fraction(0),))

    @property
    def p(self) -> int:
        return len(ptrim(self.poly)) - 1 if any(self.poly) else 0

    @property
    def label(self) -> str:
        return f"{self.p + 2}F{self.p + 1}"

    @property
    def terminating(self) -> bool:
        return any(x <= 0 and x.denominator == 1 for x in (self.a, self.b))

    def term_ratio(self, j: int) -> Fraction:
        """coefficient_{j+1} / coefficient_j of the hypergeometric sum."""
        pj = peval(self.poly, Fraction(j))
        return (self.a + j) * (self.b + j) * peval(self.poly, Fraction(j + 1)) / ((1 + j) * (self.c + j) * pj)


def hypergeometric_coeffs(spec: HypergeometricSpec, N: int) -> list[Fraction]:
    """Taylor coefficients of t^0 .. t^N."""
    out = [Fraction(0)] * (N + 1)
    term = spec.prefactor  # prefactor * (a)_j (b)_j / (j! (c)_j)
    for j in range(0, N + 1 - spec.offset):
        if term == 0:
            break
        out[spec.offset + j] = term * peval(spec.poly, Fraction(j))
        denom = (j + 1) * (spec.c + j)
        num = (spec.a + j) * (spec.b + j)
        if denom == 0:
            if num == 0:
                break
            raise ZeroDivisionError(f"lower parameter c={spec.c} reaches zero at j={j} before termination")
        term = term * num / denom
    return out


def hypergeometric_series(specs: Sequence[HypergeometricSpec], N: int) -> VectorSeries:
    cols = [hypergeometric_coeffs(s, N) for s in specs]
    done = all(s.terminating or s.prefactor == 0 for s in specs)
    return VectorSeries(len(specs) - 1, tuple(zip(*cols)), 0, done)


# -- closed forms for ell <= 2 -----------------------------------------------

@lru_cache(maxsize=None)
def _tables():
    import sympy as sp

    n, w = sp.symbols("n w")
    R = sp.Rational

    def lam(ell, k):
        return -w * (w + n + ell + k + 2) - k * (n + k + 1)

    def s(x):
        return ("s", x)

    def pair(total, product):
        return ("pair", total, product)

    tables = {}
    tables[0, "a", 0] = [(1, 0, -w, w + n + 2, n + 1, None)]
    tables[0, "b", 0] = [(1, -n, -w - n, w + 2, 1 - n, None)]

    L = lam(1, 0)
    tables[1, "a", 0] = [(1 - L / (n + 1), 0, -w, w + n + 3, n + 2, s(L - n - 1)),
                         (1, 0, -w, w + n + 3, n + 1, None)]
    ab = -w * (w + n + 3) - 2 * n - 2
    tables[1, "b", 0] = [(n, -n - 1, w + 2, -w - n - 1, -n, s(ab)),
                         (1, -n, w + 3, -w - n, 1 - n, None)]
    L = lam(1, 1)
    tables[1, "a", 1] = [(1, 0, -w, w + n + 4, n + 2, None),
                         (-(n + 1), 0, -w - 1, w + n + 3, n + 1, s(L - 1))]
    bb = -w * (w + n + 4) - 2 * n - 3
    tables[1, "b", 1] = [(1, -n - 1, w + 3, -w - n - 1, -n, None),
                         (bb / n, -n, w + 3, -w - n - 1, 1 - n, s(bb))]

    L = lam(2, 0)
    tables[2, "a", 0] = [
        (1 + L * (L - 3 * (n + 1)) / (2 * (n + 1) * (n + 2)), 0, -w, w + n + 4, n + 3,
         pair(-w * (w + n + 4) - n, w * (w + 3) * (w + n + 1) * (w + n + 4) / 2 + (n + 1) * (n + 2))),
        (1 - L / (n + 1), 0, -w, w + n + 4, n + 2, s(-w * (w + n + 4) / 2 - (n + 1) / R(2))),
        (1, 0, -w, w + n + 4, n + 1, None)]
    tables[2, "b", 0] = [
        (1, -n - 2, w + 2, -w - n - 2, -n - 1,
         pair(-w * (w + n + 4) - 3 * n - 4, (w + 2) * (w + 3) * (w + n + 1) * (w + n + 2) / 2)),
        (2 / (n + 1), -n - 1, w + 3, -w - n - 1, -n, s(-w * (w + n + 4) / 2 - R(3, 2) * (n + 1))),
        (2 / (n * (n + 1)), -n, w + 4, -w - n, 1 - n, None)]
    L = lam(2, 1)
    tables[2, "a", 1] = [
        (L / ((n + 1) * (n + 2)), 0, -w, w + n + 5, n + 3, s(-w * (w + n + 5) / 2 - (n + 2) / R(2))),
        (-(L + 2) / (2 * (n + 1)), 0, -w - 1, w + n + 4, n + 2,
         pair(-w * (w + n + 5) / 2 - R(1, 2), (w + 1) * (w + n + 4) * (w**2 + n * w + 5 * w + n) / 8)),
        (1, 0, -w - 1, w + n + 4, n + 1, s(-(w + 1) * (w + n + 4) / 2))]
    tables[2, "b", 1] = [
        (1, -n - 2, w + 3, -w - n - 2, -n - 1, s(-w * (w + n + 5) / 2 - (3 * n + 6) / R(2))),
        ((L - 2 * n) / (2 * (n + 1)), -n - 1, w + 3, -w - n - 2, -n,
         pair(-w * (w + n + 5) / 2 - (4 * n + 5) / R(2),
              (w + 3) * (w + n + 2) * (w**2 + n * w + 5 * w + 3 * n + 2) / 8)),
        (L / (n * (n + 1)) - 2 / n, -n, w + 4, -w - n - 1, 1 - n, s(-w * (w + n + 5) / 2 - (3 * n + 4) / R(2)))]
    L = lam(2, 2)
    tables[2, "a", 2] = [
        (2 / ((n + 2) * (n + 1)), 0, -w, w + n + 6, n + 3, None),
        (-2 / (n + 1), 0, -w - 1, w + n + 5, n + 2, s(-w * (w + n + 6) / 2 - (n + 5) / R(2))),
        (1, 0, -w - 2, w + n + 4, n + 1,
         pair(-w * (w + n + 6) - (n + 6), (w + 1) * (w + 2) * (w + n + 4) * (w + n + 5) / 2))]
    tables[2, "b", 2] = [
        (1, -n - 2, w + 4, -w - n - 2, -n - 1, None),
        (L / (n + 1) - 1, -n - 1, w + 4, -w - n - 2, -n, s(-w * (w + n + 6) / 2 - (3 * n + 7) / R(2))),
        ((L - 2) * (L + 1) / (2 * n * (n + 1)) - (L + 2) / (2 * (n + 1)), -n, w + 4, -w - n - 2, 1 - n,
         pair(-w * (w + n + 6) - (3 * n + 6),
              w * (w + n + 6) * (w * (w + n + 6) + 5 * n + 13) / 2 + (3 * n**2 + 15 * n + 20)))]
    # case c only occurs at n = -1; the printed forms already have n substituted
    q = w**2 + 4 * w
    tables[2, "c", 0] = [
        (1, 0, -w, w + 3, 2, pair(-w**2 - 3 * w + 1, w**2 * (w + 3)**2 / 2)),
        (2 / (w * (w + 3)), 0, -w, w + 3, 1, s(-w * (w + 3) / 2)),
        (-2 / (w * (w + 3)), 1, 1 - w, w + 4, 2, None)]
    tables[2, "c", 1] = [
        (1, 0, -w, w + 4, 2, s(-(q + 1) / 2)),
        (-(q - 1) / (2 * (q + 1)), 0, -w - 1, w + 3, 1, pair(-(q + 1) / 2, (w + 1) * (w + 3) * (q - 1) / 8)),
        (1, 1, -w, w + 4, 2, s(-(q + 1) / 2))]
    tables[2, "c", 2] = [
        (1, 0, -w, w + 5, 2, None),
        (-1, 0, -w - 1, w + 4, 1, s(-(w + 1) * (w + 4) / 2)),
        (-(w + 1) * (w + 4) / 2, 1, -w - 1, w + 4, 2, pair(-(w**2 + 5 * w + 3), (w + 1)**2 * (w + 4)**2 / 2))]

    # fold prefactor / prod(s_m) into one rational function before substituting,
    # so that a vanishing s_m together with a vanishing prefactor has a finite limit
    out = {}
    for key, comps in tables.items():
        rows = []
        for pref, off, a, b, c, extra in comps:
            pref = sp.sympify(pref)
            if extra is None:
                numer = [sp.Integer(1)]
                ratio = sp.cancel(pref)
            elif extra[0] == "s":
                numer = [sp.sympify(extra[1]), sp.Integer(1)]
                ratio = sp.cancel(pref / extra[1])
            else:
                numer = [sp.sympify(extra[2]), sp.sympify(extra[1]), sp.Integer(1)]
                ratio = sp.cancel(pref / extra[2])
            rows.append((ratio, [sp.sympify(x) for x in (off, a, b, c)], numer))
        out[key] = rows
    return (n, w), out


def closed_form_case(idx: SFIndex) -> tuple[int, str, int]:
    """(ell, regime letter, k) naming the case table of an index."""
    idx.check()
    if idx.ell > 2:
        raise ValueError(f"closed forms are tabulated for ell <= 2 only (got ell={idx.ell}); use series_solution")
    regime = idx.regime if idx.ell > 0 else ("a" if idx.n >= 0 else "b")
    if regime == "c" and idx.n != -1:
        raise ValueError(f"no case table for n={idx.n}, ell={idx.ell}")
    return idx.ell, regime, idx.k


def closed_form(idx: SFIndex) -> list[HypergeometricSpec]:
    """Component specs of the tabulated spherical function of an index (ell <= 2)."""
    key = closed_form_case(idx)
    (n, w), tables = _tables()
    subs = {n: idx.n, w: idx.w}

    def val(expr) -> Fraction:
        v = expr.subs(subs)
        if not v.is_Rational:
            raise ZeroDivisionError(f"closed form for {idx} is singular: {expr} -> {v}")
        return Fraction(int(v.p), int(v.q))

    specs = []
    for ratio, (off, a, b, c), numer in tables[key]:
        g = val(ratio)
        coeffs = [val(x) for x in numer]
        if coeffs[0] != 0:
            spec = HypergeometricSpec(g * coeffs[0], int(val(off)), val(a), val(b), val(c),
                                      tuple(x / coeffs[0] for x in coeffs))
        else:
            spec = HypergeometricSpec(g, int(val(off)), val(a), val(b), val(c), tuple(coeffs))
        specs.append(spec)
    return specs


def closed_form_series(idx: SFIndex, N: int | None = None) -> VectorSeries:
    N = default_truncation(idx) if N is None else N
    return hypergeometric_series(closed_form(idx), N)


def proportional(s1: VectorSeries, s2: VectorSeries) -> Fraction | None:
    """The scalar c with s2 = c * s1 coefficientwise, or None.

    Coefficients are compared up to the smaller truncation, or further when
    a series is known to terminate.
    """
    tops = [s.truncation for s in (s1, s2) if not s.terminated]
    top = min(tops) if tops else max(s1.truncation, s2.truncation)
    lo = min(s1.start, s2.start)
    pairs = [(x, y) for j in range(lo, top + 1) for x, y in zip(s1.coeff(j), s2.coeff(j))]
    ref = next(((x, y) for x, y in pairs if x != 0), None)
    if ref is None:
        return Fraction(1) if all(y == 0 for _, y in pairs) else None
    c = ref[1] / ref[0]
    return c if all(y == c * x for x, y in pairs) else None


# -- Psi_{n, ell} ---------------------------------------------------------------

def psi_closed_form(n: int, ell: int) -> list[RadialPoly]:
    """Components (1+r^2)^n sum_j (-1)^j C(-n, j) C(ell-i, j) r^(2j), n <= 0."""
    if n > 0:
        raise ValueError("psi_closed_form needs n <= 0")
    out = []
    for i in range(ell + 1):
        top = min(-n, ell - i)
        out.append(RadialPoly(n, tuple((-1)**j * math.comb(-n, j) * math.comb(ell - i, j) for j in range(top + 1))))
    return out


# -- conjecture probe --------------------------------------------------------

@dataclass(frozen=True)
class ProbeResult:
    """Outcome of fitting one component to the predicted hypergeometric shape.

    Conjecture-level: a failed fit is a finding about the conjectured shape,
    not an error of the library.
    """

    index: SFIndex
    component: int
    degree: int
    a: Fraction
    b: Fraction
    c: Fraction
    fitted: bool
    spec: HypergeometricSpec | None
    points: int
    verified: int
    message: str = ""
    conjecture_level: bool = field(default=True)

    @property
    def conclusive(self) -> bool:
        return self.fitted and self.verified > 0


def predicted_parameters(n: int, ell: int, w, k: int, i: int) -> tuple[Fraction, Fraction, Fraction, int]:
    """(a, b, c, deg P) of the conjectured shape for component i of branch k."""
    m = min(i, k)
    w = frac(w)
    return -w - m, w + n + ell + 2 + k - m, Fraction(n + ell - i + 1), ell - abs(i - k)


def probe_series(n: int, ell: int, w, k: int, N: int) -> VectorSeries:
    """D-series from the L-eigenvector for a possibly non-integer w (n >= 0)."""
    lam = lambda_of(n, ell, w, k)
    return d_series(n, ell, lam, l_eigenvector(n, ell, lam, k), N)


def conjecture_probe(s: VectorSeries, i: int, idx: SFIndex, w=None) -> ProbeResult:
    """Fit component i of s to (a)_j (b)_j / (j! (c)_j) * P(j) with the predicted a, b, c.

    ``w`` overrides idx.w when s was generated at a non-integer w.  The
    values c_j j! (c)_j / ((a)_j (b)_j) must then be a polynomial of degree
    ell - |i - k| in j: it is interpolated from the first points and checked
    on all others; coefficients past a terminating (a)_j (b)_j must vanish.
    """
    w = idx.w if w is None else w
    a, b, c, deg = predicted_parameters(idx.n, idx.ell, w, idx.k, i)
    coeffs = s.component(i)
    base = s.start
    xs, ys, tail_ok = [], [], True
    poch = Fraction(1)
    for j, cj in enumerate(coeffs):
        if poch == 0:
            if cj != 0:
                tail_ok = False
            continue
        xs.append(Fraction(j))
        ys.append(cj * math.factorial(j) * _poch(c, j) / poch)
        poch *= (a + j) * (b + j)
    if base != 0:
        return ProbeResult(idx, i, deg, a, b, c, False, None, 0, 0, "series does not start at t^0")
    if not tail_ok:
        return ProbeResult(idx, i, deg, a, b, c, False, None, len(xs), 0,
                           "nonzero coefficients after the predicted termination")
    if len(xs) <= deg:
        poly = interpolate(xs, ys)
        fitted = len(ptrim(poly)) - 1 <= deg
        return ProbeResult(idx, i, deg, a, b, c, fitted, _spec_from(poly, a, b, c) if fitted else None,
                           len(xs), 0, "too few points to verify the fit")
    poly = interpolate(xs[: deg + 1], ys[: deg + 1])
    bad = [int(x) for x, y in zip(xs[deg + 1:], ys[deg + 1:]) if peval(poly, x) != y]
    if bad:
        return ProbeResult(idx, i, deg, a, b, c, False, None, len(xs), 0,
                           f"degree {deg} fit fails at j={bad[0]}")
    return ProbeResult(idx, i, deg, a, b, c, True, _spec_from(poly, a, b, c), len(xs), len(xs) - deg - 1)


def _poch(x: Fraction, j: int) -> Fraction:
    out = Fraction(1)
    for m in range(j):
        out *= x + m
    return out


def _spec_from(poly, a, b, c) -> HypergeometricSpec:
    poly = ptrim(poly)
    if not poly:
        return HypergeometricSpec(0, 0, a, b, c, (1,))
    if poly[0] != 0:
        return HypergeometricSpec(poly[0], 0, a, b, c, tuple(x / poly[0] for x in poly))
    return HypergeometricSpec(1, 0, a, b, c, tuple(poly))
