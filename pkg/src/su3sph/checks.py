"""Grid checks of the exact identities, shared by ``verify`` and the test suite.

Each check returns a :class:`CheckResult`; ``passed`` is True only when
every case in the grid satisfied its identity exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .analysis import boundary_check, gram_matrix
from .bispectral import (
    bispectral_matrices,
    c_determinant,
    forward_phi,
    phi_matrix,
    structure_ok,
    verify_bispectral,
)
from .eigen import char_poly_L, spectrum_polynomial
from .exact import is_zero_matrix, ptrim
from .operators import build_coefficient_matrices, radial_apply_D, radial_apply_E, residual_D, residual_E
from .repr_core import (
    SFIndex,
    admissible_indices,
    casimir_eigenvalues,
    eigen_from_index,
    index_to_restriction,
    make_repr_action,
    restriction_to_index,
    to_casimir,
)
from .series import (
    closed_form_case,
    closed_form_series,
    conjecture_probe,
    default_truncation,
    evaluate_series,
    normalize_at_one,
    probe_series,
    proportional,
    psi_closed_form,
    series_solution,
)

MAX_REPORTED = 20


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and self.checked > 0

    def fail(self, message: str) -> None:
        if len(self.failures) < MAX_REPORTED:
            self.failures.append(message)
        else:
            self.failures[-1] = f"... and more (last: {message})"

    @property
    def status(self) -> str:
        if self.failures:
            return "fail"
        return "pass" if self.checked else "skipped"

    def summary(self) -> str:
        return f"{self.status.upper()} {self.name}: {self.checked} cases, {len(self.failures)} failures"


@lru_cache(maxsize=4096)
def solution(idx: SFIndex):
    return series_solution(idx, default_truncation(idx))


def grid(ns: Iterable[int], ells: Iterable[int], ws: Iterable[int]) -> list[SFIndex]:
    ws = list(ws)
    out = []
    for n in ns:
        for ell in ells:
            out += admissible_indices(n, ell, max(ws), min(ws))
    return out


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-60, 60), rng.randint(1, 12))


def check_spectrum(ns=range(5), ells=range(7), samples=20, seed=0) -> CheckResult:
    res = CheckResult("L-spectrum")
    rng = random.Random(seed)
    for n in ns:
        for ell in ells:
            for _ in range(samples):
                lam = random_rational(rng)
                res.checked += 1
                if char_poly_L(n, ell, lam) != spectrum_polynomial(n, ell, lam):
                    res.fail(f"n={n} ell={ell} lam={lam}")
    return res


def check_joint_defect(indices: Iterable[SFIndex]) -> CheckResult:
    res = CheckResult("joint-eigen defect")
    for idx in indices:
        res.checked += 1
        s = solution(idx)
        pair = eigen_from_index(idx)
        cm = build_coefficient_matrices(idx.n, idx.ell)
        N = default_truncation(idx)
        if not s.terminated:
            res.fail(f"{idx}: series did not terminate by order {N}")
            continue
        rd, re = residual_D(cm, pair.lam, s, N), residual_E(cm, pair.mu, s, N)
        if rd or re:
            res.fail(f"{idx}: D-defect {rd}, E-defect {re}")
    return res


def closed_form_indices(w_max: int = 4, ns=range(-4, 4)) -> list[SFIndex]:
    out = []
    for ell in range(3):
        for idx in grid(ns, [ell], range(w_max + 1)):
            try:
                closed_form_case(idx)
            except ValueError:
                continue
            out.append(idx)
    return out


def check_closed_forms(indices: Iterable[SFIndex]) -> CheckResult:
    res = CheckResult("closed forms")
    cases = set()
    for idx in indices:
        res.checked += 1
        cases.add(closed_form_case(idx))
        c = proportional(solution(idx), closed_form_series(idx))
        if c is None or c == 0:
            res.fail(f"{idx} (case {closed_form_case(idx)}): not proportional to the solver output")
    res.notes.append(f"{len(cases)} case tables exercised")
    return res


def check_psi(ns=range(-4, 1), ells=range(5)) -> CheckResult:
    res = CheckResult("Psi eigen-identities")
    for n in ns:
        for ell in ells:
            res.checked += 1
            ra = make_repr_action(n, ell)
            psi = [h.to_function() for h in psi_closed_form(n, ell)]
            lam, mu = 4 * n * (ell + 2), 4 * n * (ell + 2) * (n - ell)
            dd = radial_apply_D(ra, psi)
            ee = radial_apply_E(ra, psi)
            if not all(x.equals(h.scale(lam)) for x, h in zip(dd, psi)):
                res.fail(f"n={n} ell={ell}: D Psi != {lam} Psi")
            if not all(x.equals(h.scale(mu)) for x, h in zip(ee, psi)):
                res.fail(f"n={n} ell={ell}: E Psi != {mu} Psi")
    return res


def check_scalarity(indices: Iterable[SFIndex]) -> CheckResult:
    res = CheckResult("scalarity at t=1")
    for idx in indices:
        res.checked += 1
        s = solution(idx)
        values = evaluate_series(s, Fraction(1))
        if len(set(values)) != 1 or values[0] == 0:
            res.fail(f"{idx}: values at t=1 {values}")
            continue
        if set(evaluate_series(normalize_at_one(s), Fraction(1))) != {1}:
            res.fail(f"{idx}: normalization did not give all ones")
    return res


def check_orthogonality(ktypes=((0, 0), (0, 1), (1, 2), (-1, 2)), w_max=4) -> CheckResult:
    res = CheckResult("orthogonality")
    for n, ell in ktypes:
        res.checked += 1
        report = gram_matrix(n, ell, w_max)
        if not report.diagonal:
            res.fail(f"(n={n}, ell={ell}): max off-diagonal {report.max_offdiag}")
        if not report.positive:
            res.fail(f"(n={n}, ell={ell}): nonpositive norm")
        res.notes.append(f"(n={n}, ell={ell}): {len(report.indices)} functions")
    return res


def check_bispectral(ns=range(4), ws=range(6)) -> CheckResult:
    res = CheckResult("bispectral identity")
    for n in ns:
        cache: dict = {}
        for w in ws:
            res.checked += 1
            tr = bispectral_matrices(n, w)
            if w == 0 and not is_zero_matrix(tr.A):
                res.fail(f"n={n}: A_0 is not zero")
            if not structure_ok(tr):
                res.fail(f"n={n} w={w}: band structure violated")
            if c_determinant(n, w) == 0:
                res.fail(f"n={n} w={w}: C_w singular")
            d = verify_bispectral(n, w, cache)
            if d:
                res.fail(f"n={n} w={w}: defect {d}")
            prev = cache.get(w - 1) if w > 0 else None
            if prev is None and w > 0:
                prev = cache[w - 1] = phi_matrix(n, w - 1)
            gen = forward_phi(n, w, prev, cache[w])
            if [[ptrim(p) for p in row] for row in gen] != cache[w + 1]:
                res.fail(f"n={n} w={w}: forward generation differs from Phi(w+1)")
    return res


def check_casimir(indices: Iterable[SFIndex]) -> CheckResult:
    res = CheckResult("Casimir chain")
    for idx in indices:
        res.checked += 1
        rp = index_to_restriction(idx)
        if restriction_to_index(rp) != idx:
            res.fail(f"{idx}: restriction round trip")
        if casimir_eigenvalues(rp.p, rp.q) != to_casimir(idx):
            res.fail(f"{idx}: {casimir_eigenvalues(rp.p, rp.q)} != {to_casimir(idx)}")
    return res


def structural_zero_violations(s, n: int, ell: int) -> list[str]:
    out = []
    a = max(0, -n - ell)
    if s.leading_order != a:
        out.append(f"leading order {s.leading_order}, expected {a}")
    if n <= -ell:
        for k in range(ell):
            for i in range(k + 1, ell + 1):
                if s.coeff(a + k)[i] != 0:
                    out.append(f"H_({i},{a + k}) != 0")
    elif n < 0:
        for k in range(-n):
            for i in range(n + ell + k + 1, ell + 1):
                if s.coeff(k)[i] != 0:
                    out.append(f"H_({i},{k}) != 0")
    return out


def check_negative_n_structure(indices: Iterable[SFIndex]) -> CheckResult:
    res = CheckResult("n<0 structure")
    for idx in indices:
        if idx.n >= 0:
            continue
        res.checked += 1
        s = solution(idx)
        bad = structural_zero_violations(s, idx.n, idx.ell)
        if not boundary_check(s, idx.n, idx.ell).passed:
            bad.append("boundary condition at t=0")
        if bad:
            res.fail(f"{idx}: " + "; ".join(bad))
    return res


GENERIC_SHIFT = Fraction(1, 3)


def check_conjecture(ells=(3, 4), ns=(0, 1), w_max=3) -> CheckResult:
    """Conjecture-level: the predicted hypergeometric shape on every component.

    Each component is fitted twice, on the spherical (terminating) series
    and on the series at the non-integer w + 1/3, where the fit is heavily
    overdetermined.
    """
    res = CheckResult("conjecture probe (non-gating)")
    for ell in ells:
        for n in ns:
            for w in range(w_max + 1):
                for k in range(ell + 1):
                    idx = SFIndex(n, ell, w, k)
                    exact = solution(idx)
                    generic = probe_series(n, ell, w + GENERIC_SHIFT, k, 3 * ell + 12)
                    for i in range(ell + 1):
                        res.checked += 1
                        for s, shift in ((exact, 0), (generic, GENERIC_SHIFT)):
                            r = conjecture_probe(s, i, idx, w=w + shift)
                            if not r.fitted:
                                res.fail(f"{idx} component {i} at w+{shift}: {r.message}")
                            elif shift and r.verified == 0:
                                res.fail(f"{idx} component {i}: fit not overdetermined")
    return res


SUITES = {
    "spectrum": lambda ns, ells, ws: check_spectrum([n for n in ns if n >= 0], ells),
    "defect": lambda ns, ells, ws: check_joint_defect(grid(ns, ells, ws)),
    "closed-form": lambda ns, ells, ws: check_closed_forms(
        [i for i in closed_form_indices(max(ws), ns) if i.ell in set(ells)]),
    "psi": lambda ns, ells, ws: check_psi([n for n in ns if n <= 0], ells),
    "scalar": lambda ns, ells, ws: check_scalarity(grid(ns, ells, ws)),
    "gram": lambda ns, ells, ws: check_orthogonality([(n, ell) for n in ns for ell in ells], max(ws)),
    "bispectral": lambda ns, ells, ws: check_bispectral([n for n in ns if n >= 0], ws),
    "casimir": lambda ns, ells, ws: check_casimir(grid(ns, ells, ws)),
    "structure": lambda ns, ells, ws: check_negative_n_structure(grid(ns, ells, ws)),
}
