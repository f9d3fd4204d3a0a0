"""Acceptance criteria 1-10, one PASS/FAIL line each.

Run standalone with ``python3 tests/test_acceptance.py`` or through pytest,
where the lines are repeated in the terminal summary.  Criterion 10 is a
probe of a conjecture: it is reported but never fails the run.
"""

import sys
import time

import pytest

from su3sph.checks import (
    check_bispectral,
    check_casimir,
    check_closed_forms,
    check_conjecture,
    check_joint_defect,
    check_negative_n_structure,
    check_orthogonality,
    check_psi,
    check_scalarity,
    check_spectrum,
    closed_form_indices,
    grid,
)

GRID = grid(range(-3, 4), range(5), range(6))
RESULTS: dict[int, str] = {}


def record(number, result, elapsed=None, limit=None, gating=True):
    ok = result.passed and (limit is None or elapsed < limit)
    timing = f" in {elapsed:.1f}s (limit {limit}s)" if limit else ""
    tag = "PASS" if ok else ("FAIL" if gating else "FLAG")
    line = f"{tag} criterion {number:2d} {result.name}: {result.checked} cases, {len(result.failures)} failures{timing}"
    if not gating:
        line += " [non-gating]"
    RESULTS[number] = line
    print(line)
    for msg in result.failures:
        print(f"    {msg}")
    return ok


def timed(fn, *args):
    start = time.perf_counter()
    res = fn(*args)
    return res, time.perf_counter() - start


def test_criterion_01_l_spectrum():
    res, dt = timed(check_spectrum, range(5), range(7), 20)
    assert res.checked == 5 * 7 * 20
    assert record(1, res, dt, 30)


def test_criterion_02_joint_defect():
    res, dt = timed(check_joint_defect, GRID)
    assert record(2, res, dt, 60)


def test_criterion_03_closed_forms():
    indices = closed_form_indices(4, range(-4, 4))
    res = check_closed_forms(indices)
    assert {(i.ell, i.regime if i.ell else ("a" if i.n >= 0 else "b"), i.k) for i in indices} >= {
        (2, r, k) for r in "abc" for k in range(3)}
    assert record(3, res)


def test_criterion_04_psi():
    assert record(4, check_psi(range(-4, 1), range(5)))


def test_criterion_05_scalarity():
    assert record(5, check_scalarity(GRID))


def test_criterion_06_orthogonality():
    assert record(6, check_orthogonality(((0, 0), (0, 1), (1, 2), (-1, 2)), 4))


def test_criterion_07_bispectral():
    assert record(7, check_bispectral(range(4), range(6)))


def test_criterion_08_casimir_chain():
    assert record(8, check_casimir(GRID))


def test_criterion_09_negative_n_structure():
    res = check_negative_n_structure(GRID)
    assert res.checked == sum(1 for i in GRID if i.n < 0)
    assert record(9, res)


def test_criterion_10_conjecture_probe():
    res = check_conjecture((3, 4), (0, 1), 3)
    record(10, res, gating=False)
    if not res.passed:
        pytest.skip("conjecture probe reported findings (non-gating)")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
            except pytest.skip.Exception:
                pass
    sys.exit(1 if failed else 0)
