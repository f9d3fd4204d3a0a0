"""Index bookkeeping for the K-types of (SU(3), U(2)).

An irreducible spherical function of K-type ``(n, ell)`` is labelled by the
free parameters ``(w, k)``; equivalently by the branching data
``(p, q, k1, k2)`` of the SU(3) representation it comes from.

Eigenvalue convention: ``lam`` and ``mu`` always denote the eigenvalues of
the t-variable operators ``D`` and ``E`` (the scaled convention).  The
radial r-variable systems use ``4 * lam`` and ``4 * mu``; the group
Casimir eigenvalues are recovered with :func:`to_casimir`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import Matrix, commutator, diag, identity, madd, matmul, mscale, msub, zeros


class AdmissibilityError(ValueError):
    """Raised when an index violates the admissibility inequalities."""


@dataclass(frozen=True)
class SFIndex:
    n: int
    ell: int
    w: int
    k: int

    def violations(self) -> list[str]:
        out = []
        if self.ell < 0:
            out.append(f"ell={self.ell} < 0")
        if not 0 <= self.k <= self.ell:
            out.append(f"k={self.k} not in [0, ell={self.ell}]")
        if self.w < 0:
            out.append(f"w={self.w} < 0")
        if self.w + self.n + self.k < 0:
            out.append(f"w+n+k={self.w + self.n + self.k} < 0")
        return out

    @property
    def admissible(self) -> bool:
        return not self.violations()

    def check(self) -> "SFIndex":
        bad = self.violations()
        if bad:
            raise AdmissibilityError(f"inadmissible index {self}: " + "; ".join(bad))
        return self

    @property
    def regime(self) -> str:
        """'a' for n >= 0, 'b' for n <= -ell, 'c' for -ell < n < 0."""
        if self.n >= 0:
            return "a"
        return "b" if self.n <= -self.ell else "c"


@dataclass(frozen=True)
class RestrictionParams:
    p: int
    q: int
    k1: int
    k2: int

    def violations(self) -> list[str]:
        p, q, k1, k2 = self.p, self.q, self.k1, self.k2
        out = []
        if not p + q >= k1:
            out.append(f"p+q={p + q} < k1={k1}")
        if not k1 >= q:
            out.append(f"k1={k1} < q={q}")
        if not q >= k2:
            out.append(f"q={q} < k2={k2}")
        if not k2 >= 0:
            out.append(f"k2={k2} < 0")
        return out

    def check(self) -> "RestrictionParams":
        bad = self.violations()
        if bad:
            raise AdmissibilityError(f"chain p+q >= k1 >= q >= k2 >= 0 violated for {self}: " + "; ".join(bad))
        return self


@dataclass(frozen=True)
class EigenPair:
    lam: Fraction
    mu: Fraction


def admissible_indices(n: int, ell: int, w_max: int, w_min: int = 0) -> list[SFIndex]:
    """All admissible (w, k) for a K-type, ordered by k then w."""
    out = []
    for k in range(ell + 1):
        for w in range(max(w_min, 0), w_max + 1):
            idx = SFIndex(n, ell, w, k)
            if idx.admissible:
                out.append(idx)
    return out


def index_to_restriction(idx: SFIndex) -> RestrictionParams:
    idx.check()
    n, ell, w, k = idx.n, idx.ell, idx.w, idx.k
    return RestrictionParams(p=w + ell - k, q=w + n + 2 * k, k1=w + n + ell + k, k2=w + n + k)


def restriction_to_index(rp: RestrictionParams) -> SFIndex:
    rp.check()
    n = rp.k1 + 2 * rp.k2 - rp.p - 2 * rp.q
    ell = rp.k1 - rp.k2
    # q - k2 = k and p = w + ell - k
    k = rp.q - rp.k2
    w = rp.p - ell + k
    return SFIndex(n, ell, w, k).check()


def partner_w(idx: SFIndex) -> int:
    """The other root w' = -(w+n+k+ell+2) giving the same eigenvalues."""
    return -(idx.w + idx.n + idx.k + idx.ell + 2)


def canonical_w(idx: SFIndex) -> int:
    return max(idx.w, partner_w(idx))


def lambda_of(n: int, ell: int, w, k: int) -> Fraction:
    w = Fraction(w)
    return -w * (w + n + ell + k + 2) - k * (n + k + 1)


def mu_k(n: int, ell: int, lam, k: int) -> Fraction:
    lam = Fraction(lam)
    return lam * (n - ell + 3 * k) - 3 * k * (ell - k + 1) * (n + k + 1)


def eigen_from_index(idx: SFIndex) -> EigenPair:
    """Scaled eigenvalues of D and E for an index.

    The w-formula is evaluated without the admissibility check so that the
    w <-> partner_w symmetry can be exercised on both roots.
    """
    lam = lambda_of(idx.n, idx.ell, idx.w, idx.k)
    return EigenPair(lam, mu_k(idx.n, idx.ell, lam, idx.k))


def unscaled(pair: EigenPair) -> EigenPair:
    """Eigenvalues of the radial r-variable systems."""
    return EigenPair(4 * pair.lam, 4 * pair.mu)


def casimir_eigenvalues(p: int, q: int) -> tuple[Fraction, Fraction]:
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    p, q = Fraction(p), Fraction(q)
    lam = -Fraction(4, 3) * (p * p + q * q + p * q + 3 * p + 3 * q)
    mu = 4 * (Fraction(2, 9) * p**3 - Fraction(2, 9) * q**3 + Fraction(1, 3) * p * p * q
              - Fraction(1, 3) * p * q * q + 2 * p * p + p * q + 4 * p + 2 * q)
    return lam, mu


# -- the K-representation on the basis v_0 .. v_ell --------------------------

@dataclass(frozen=True)
class ReprAction:
    n: int
    ell: int
    h_alpha: Matrix
    x_alpha: Matrix
    x_minus_alpha: Matrix
    z_scalar: Fraction

    @property
    def dim(self) -> int:
        return self.ell + 1

    @property
    def z(self) -> Matrix:
        return mscale(self.z_scalar, identity(self.dim))

    @property
    def h_beta(self) -> Matrix:
        return mscale(Fraction(1, 2), msub(self.z, self.h_alpha))

    @property
    def j(self) -> Matrix:
        return msub(self.x_alpha, self.x_minus_alpha)

    @property
    def t(self) -> Matrix:
        return madd(self.x_alpha, self.x_minus_alpha)

    @property
    def h_gamma(self) -> Matrix:
        return madd(mscale(Fraction(1, 2), self.z), mscale(Fraction(1, 2), self.h_alpha))

    @property
    def h_tilde_1(self) -> Matrix:
        return madd(mscale(Fraction(1, 2), self.z), mscale(Fraction(3, 2), self.h_alpha))

    @property
    def h_tilde_2(self) -> Matrix:
        return msub(mscale(Fraction(1, 2), self.z), mscale(Fraction(3, 2), self.h_alpha))

    def sl2_defect(self) -> Matrix:
        return msub(commutator(self.x_alpha, self.x_minus_alpha), self.h_alpha)


def make_repr_action(n: int, ell: int) -> ReprAction:
    if ell < 0:
        raise ValueError(f"ell must be nonnegative, got {ell}")
    dim = ell + 1
    x_a = zeros(dim)
    x_ma = zeros(dim)
    for i in range(dim):
        # matrix columns are images of basis vectors
        if i >= 1:
            x_a[i - 1][i] = Fraction(ell - i + 1)
        if i + 1 <= ell:
            x_ma[i + 1][i] = Fraction(i + 1)
    return ReprAction(n, ell, diag(ell - 2 * i for i in range(dim)), x_a, x_ma, Fraction(2 * n + ell))


def kcasimir_matrices(ra: ReprAction) -> tuple[Matrix, Matrix]:
    """Images of the two K-invariant Casimir elements as matrices."""
    ha, hb, z = ra.h_alpha, ra.h_beta, ra.z
    xx = matmul(ra.x_minus_alpha, ra.x_alpha)
    ha2 = matmul(ha, ha)
    hb2 = matmul(hb, hb)
    d2 = zeros(ra.dim)
    for c, m in ((-1, ha2), (Fraction(-1, 3), matmul(z, z)), (-2, ha), (-2, z), (-4, xx)):
        d2 = madd(d2, mscale(c, m))
    terms = (
        (Fraction(8, 9), matmul(ha2, ha)),
        (Fraction(-8, 9), matmul(hb2, hb)),
        (Fraction(4, 3), matmul(ha2, hb)),
        (Fraction(-4, 3), matmul(ha, hb2)),
        (8, ha2),
        (4, matmul(ha, hb)),
        (16, ha),
        (8, hb),
        (4, matmul(xx, ha)),
        (8, matmul(xx, hb)),
        (24, xx),
    )
    d3 = zeros(ra.dim)
    for c, m in terms:
        d3 = madd(d3, mscale(c, m))
    return d2, d3


def kcasimir_scalars(n: int, ell: int) -> tuple[Fraction, Fraction]:
    d2, d3 = kcasimir_matrices(make_repr_action(n, ell))
    out = []
    for name, m in (("Delta_2K", d2), ("Delta_3K", d3)):
        off = [(i, j) for i in range(ell + 1) for j in range(ell + 1) if i != j and m[i][j] != 0]
        values = {m[i][i] for i in range(ell + 1)}
        if off or len(values) != 1:
            raise ArithmeticError(f"{name} is not scalar on the K-type ({n}, {ell}): diag={sorted(values)}")
        out.append(values.pop())
    return out[0], out[1]


def to_casimir(idx: SFIndex) -> tuple[Fraction, Fraction]:
    """Group Casimir eigenvalues predicted from the scaled (lam, mu) of an index."""
    pair = eigen_from_index(idx)
    d2k, d3k = kcasimir_scalars(idx.n, idx.ell)
    return 4 * pair.lam + d2k, 4 * pair.mu - 12 * pair.lam + d3k
