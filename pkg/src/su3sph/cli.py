"""Command line front end.

Exit status: 0 when everything computed (and every check passed), 1 when an
exact check failed, 2 for invalid arguments or inadmissible parameters.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import serialize as ser
from .analysis import boundary_check, gram_matrix
from .bispectral import bispectral_matrices, c_determinant, verify_bispectral
from .checks import GENERIC_SHIFT, SUITES
from .eigen import SpectralDegeneracyError, build_L, char_poly_L, l_diagonals, l_eigenvector, mu_spectrum
from .exact import fmt
from .repr_core import (
    AdmissibilityError,
    RestrictionParams,
    SFIndex,
    canonical_w,
    casimir_eigenvalues,
    eigen_from_index,
    index_to_restriction,
    kcasimir_scalars,
    partner_w,
    restriction_to_index,
    unscaled,
)
from .series import (
    closed_form,
    closed_form_case,
    conjecture_probe,
    default_truncation,
    evaluate_series,
    normalize_at_one,
    probe_series,
    psi_closed_form,
    series_solution,
)

DISCLAIMER = ("conjecture-level: the fitted shape is an unproven conjecture; "
              "a failed fit is a finding about the conjecture, not a library error")


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """'3', '0..4', '-3..3' or '0,2,5'."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise UsageError(f"empty range {text!r}")
            return list(range(lo, hi + 1))
        return [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}: expected N, A..B or a comma list") from exc


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational {text!r}") from exc


# -- command implementations -------------------------------------------------
# each returns (payload for json, (header, rows) for csv, exit status)

def _index(args) -> SFIndex:
    idx = SFIndex(args.n, args.ell, args.w, args.k)
    idx.check()
    return idx


def cmd_params(args):
    if args.p is not None:
        idx = restriction_to_index(RestrictionParams(args.p, args.q, args.k1, args.k2))
    else:
        idx = _index(args)
    rp = index_to_restriction(idx)
    pair = eigen_from_index(idx)
    lt, mt = casimir_eigenvalues(rp.p, rp.q)
    d2k, d3k = kcasimir_scalars(idx.n, idx.ell)
    data = {
        "exact": True,
        "index": ser.index_data(idx),
        "regime": idx.regime,
        "restriction": ser.restriction_data(rp),
        "scaled": ser.eigen_data(pair),
        "radial": ser.eigen_data(unscaled(pair)),
        "casimir": {"lambda_tilde": fmt(lt), "mu_tilde": fmt(mt)},
        "k_casimir": {"d2k": fmt(d2k), "d3k": fmt(d3k)},
        "partner_w": partner_w(idx),
        "canonical_w": canonical_w(idx),
    }
    rows = [["lambda", *ser.split(pair.lam)], ["mu", *ser.split(pair.mu)],
            ["lambda_tilde", *ser.split(lt)], ["mu_tilde", *ser.split(mt)],
            ["d2k", *ser.split(d2k)], ["d3k", *ser.split(d3k)]]
    return data, (["field", "num", "den"], rows), 0


def cmd_lmatrix(args):
    if args.n < 0:
        raise UsageError("L(lambda) is only defined for n >= 0")
    lam = parse_rational(args.lam)
    L = build_L(args.n, args.ell, lam)
    vectors = {}
    for k in range(args.ell + 1):
        try:
            vectors[str(k)] = ser.rat_list(l_eigenvector(args.n, args.ell, lam, k))
        except SpectralDegeneracyError as exc:
            vectors[str(k)] = {"error": str(exc)}
    data = {
        "exact": True,
        "n": args.n,
        "ell": args.ell,
        "lambda": fmt(lam),
        "entries": ser.rat_matrix(L.entries),
        "diagonals": dict(zip("abcd", map(ser.rat_list, l_diagonals(args.n, args.ell, lam)))),
        "spectrum": ser.rat_list(mu_spectrum(args.n, args.ell, lam)),
        "charpoly": ser.rat_list(char_poly_L(args.n, args.ell, lam)),
        "eigenvectors": vectors,
    }
    return data, ser.matrix_rows(L.entries), 0


def _series(args):
    idx = _index(args)
    N = args.N if args.N is not None else default_truncation(idx)
    s = series_solution(idx, N)
    if getattr(args, "normalize", False):
        s = normalize_at_one(s)
    return idx, s


def cmd_series(args):
    idx, s = _series(args)
    data = {"exact": True, "index": ser.index_data(idx), **ser.eigen_data(eigen_from_index(idx)),
            "normalized": bool(args.normalize), "series": ser.series_data(s)}
    return data, ser.series_rows(s), 0


def cmd_closed_form(args):
    idx = _index(args)
    try:
        ell, regime, k = closed_form_case(idx)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    specs = closed_form(idx)
    data = {"exact": True, "index": ser.index_data(idx), "case": f"{regime}.{k}" if ell else regime,
            "components": [ser.spec_data(s) for s in specs]}
    rows = []
    for i, s in enumerate(specs):
        for name in ("prefactor", "a", "b", "c"):
            rows.append([i, name, *ser.split(getattr(s, name))])
        rows.append([i, "offset", s.offset, 1])
        for m, x in enumerate(s.poly):
            rows.append([i, f"poly{m}", *ser.split(x)])
    return data, (["component", "field", "num", "den"], rows), 0


def cmd_psi(args):
    if args.n > 0:
        raise UsageError("Psi is defined for n <= 0")
    comps = psi_closed_form(args.n, args.ell)
    data = {"exact": True, "n": args.n, "ell": args.ell, "form": "(1+r^2)^alpha * sum_m c_m r^(2m)",
            "components": [ser.radial_data(h) for h in comps]}
    rows = [[i, h.alpha, m, *ser.split(x)] for i, h in enumerate(comps) for m, x in enumerate(h.coeffs)]
    return data, (["i", "alpha", "m", "num", "den"], rows), 0


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else args.suite.split(",")
    unknown = [x for x in names if x not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s) {unknown}; choose from all, {', '.join(SUITES)}")
    ns, ells, ws = parse_range(args.n), parse_range(args.ell), parse_range(args.w)
    if min(ells) < 0 or min(ws) < 0:
        raise UsageError("ell and w ranges must be nonnegative")
    results = [SUITES[name](ns, ells, ws) for name in names]
    ok = all(r.status != "fail" for r in results)
    data = {
        "exact": True,
        "grid": {"n": ns, "ell": ells, "w": ws},
        "passed": ok,
        "suites": [{"name": r.name, "status": r.status, "checked": r.checked, "failures": r.failures,
                    "notes": r.notes} for r in results],
    }
    rows = [[r.name, r.status, r.checked, len(r.failures)] for r in results]
    return data, (["suite", "status", "checked", "failures"], rows), 0 if ok else 1


def cmd_gram(args):
    report = gram_matrix(args.n, args.ell, args.wmax)
    data = {
        "exact": True,
        "n": args.n,
        "ell": args.ell,
        "indices": [ser.index_data(i) for i in report.indices],
        "eigenpairs": [ser.eigen_data(p) for p in report.eigenpairs],
        "gram": ser.rat_matrix(report.gram),
        "max_offdiag": fmt(report.max_offdiag),
        "norms": ser.rat_list(report.norms),
        "diagonal": report.diagonal,
    }
    status = 0 if report.diagonal and report.positive else 1
    return data, ser.matrix_rows(report.gram), status


def cmd_bispectral(args):
    if args.n < 0 or args.w < 0:
        raise UsageError("the recursion is given for n >= 0 and w >= 0")
    tr = bispectral_matrices(args.n, args.w)
    d = verify_bispectral(args.n, args.w)
    data = {"exact": True, "n": args.n, "ell": 2, "w": args.w, "index_base": 0,
            "A": ser.rat_matrix(tr.A), "B": ser.rat_matrix(tr.B), "C": ser.rat_matrix(tr.C),
            "det_C": fmt(c_determinant(args.n, args.w)), "max_defect": fmt(d)}
    rows = []
    for name, m in (("A", tr.A), ("B", tr.B), ("C", tr.C)):
        rows += [[name, *r] for r in ser.matrix_rows(m)[1]]
    return data, (["matrix", "row", "col", "num", "den"], rows), 0 if d == 0 else 1


def cmd_probe(args):
    idx = _index(args)
    N = args.N if args.N is not None else 3 * idx.ell + 12
    results = [conjecture_probe(series_solution(idx), i, idx) for i in range(idx.ell + 1)]
    generic = []
    if idx.n >= 0:
        shift = parse_rational(args.shift) if args.shift else GENERIC_SHIFT
        g = probe_series(idx.n, idx.ell, idx.w + shift, idx.k, N)
        generic = [conjecture_probe(g, i, idx, w=idx.w + shift) for i in range(idx.ell + 1)]
    data = {
        "exact": True,
        "disclaimer": DISCLAIMER,
        "index": ser.index_data(idx),
        "spherical": [ser.probe_data(r) for r in results],
        "generic_w": [ser.probe_data(r) for r in generic],
    }
    rows = [[kind, r.component, r.degree, r.fitted, r.points, r.verified]
            for kind, rs in (("spherical", results), ("generic_w", generic)) for r in rs]
    return data, (["series", "component", "degree", "fitted", "points", "verified"], rows), 0


def cmd_eval(args):
    idx, s = _series(args)
    ts = [parse_rational(x) for x in args.t.split(",")]
    if not s.terminated and any(abs(t) >= 1 for t in ts):
        raise UsageError("truncated series are only evaluated for |t| < 1")
    values = [evaluate_series(s, t) for t in ts]
    if args.approx:
        data = {"exact": False, "tolerance": "correctly rounded from the exact value", "index": ser.index_data(idx),
                "normalized": bool(args.normalize),
                "points": [{"t": float(t), "values": [float(v) for v in vs]} for t, vs in zip(ts, values)]}
        rows = [[float(t), *map(float, vs)] for t, vs in zip(ts, values)]
        return data, (["t", *[f"h{i}" for i in range(idx.ell + 1)]], rows), 0
    data = {"exact": True, "index": ser.index_data(idx), "normalized": bool(args.normalize),
            "truncated": not s.terminated,
            "points": [{"t": fmt(t), "values": ser.rat_list(vs)} for t, vs in zip(ts, values)]}
    rows = [[fmt(t), i, *ser.split(v)] for t, vs in zip(ts, values) for i, v in enumerate(vs)]
    return data, (["t", "i", "num", "den"], rows), 0


def cmd_export(args):
    args.normalize = True
    idx, s = _series(args)
    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    ts = [Fraction(m, args.samples - 1) for m in range(args.samples)]
    values = [[float(v) for v in evaluate_series(s, t)] for t in ts]
    data = {"exact": False, "tolerance": "correctly rounded from the exact value", "index": ser.index_data(idx),
            "boundary_ok": boundary_check(s, idx.n, idx.ell).passed,
            "points": [{"t": float(t), "values": v} for t, v in zip(ts, values)]}
    rows = [[float(t), *v] for t, v in zip(ts, values)]
    return data, (["t", *[f"h{i}" for i in range(idx.ell + 1)]], rows), 0


# -- argument parsing ------------------------------------------------------------

def _add_index(p, w=True):
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    if w:
        p.add_argument("--w", type=int, required=True)
        p.add_argument("--k", type=int, required=True)


def _add_output(p):
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", "-o", help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="su3sph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="index maps, eigenvalues and Casimir values")
    p.add_argument("--n", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--w", type=int)
    p.add_argument("--k", type=int)
    for name in ("p", "q", "k1", "k2"):
        p.add_argument(f"--{name}", type=int)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("lmatrix", help="L(lambda), its spectrum and eigenvectors (n >= 0)")
    _add_index(p, w=False)
    p.add_argument("--lam", required=True, help="rational, e.g. -7/3")
    p.set_defaults(func=cmd_lmatrix)

    p = sub.add_parser("series", help="joint eigenseries of an index")
    _add_index(p)
    p.add_argument("--N", type=int, help="truncation order (default w+ell+|min(n,0)|+8)")
    p.add_argument("--normalize", action="store_true", help="scale so that H(1) is all ones")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("closed-form", help="hypergeometric closed form (ell <= 2)")
    _add_index(p)
    p.set_defaults(func=cmd_closed_form)

    p = sub.add_parser("psi", help="the functions Psi_{n,ell} (n <= 0)")
    _add_index(p, w=False)
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("verify", help="run exact checks over a parameter grid")
    p.add_argument("--suite", default="all", help=f"all or a comma list of: {', '.join(SUITES)}")
    p.add_argument("--n", default="0..2")
    p.add_argument("--ell", default="0..2")
    p.add_argument("--w", default="0..3")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gram", help="Gram matrix of one K-type")
    _add_index(p, w=False)
    p.add_argument("--wmax", type=int, required=True)
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("bispectral", help="recursion matrices A_w, B_w, C_w (ell = 2)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    p.set_defaults(func=cmd_bispectral)

    p = sub.add_parser("probe", help="fit components to the conjectured hypergeometric shape")
    _add_index(p)
    p.add_argument("--shift", help="non-integer offset of w for the generic series (default 1/3)")
    p.add_argument("--N", type=int, help="truncation of the generic series")
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("eval", help="evaluate a solution at given t")
    _add_index(p)
    p.add_argument("--t", required=True, help="comma list of rationals")
    p.add_argument("--N", type=int)
    p.add_argument("--normalize", action="store_true")
    p.add_argument("--approx", action="store_true", help="emit floats instead of exact rationals")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("export", help="(t, value) samples on [0, 1] for plotting")
    _add_index(p)
    p.add_argument("--samples", type=int, default=101)
    p.add_argument("--N", type=int)
    p.set_defaults(func=cmd_export)

    for action in sub.choices.values():
        _add_output(action)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "params":
        has_index = None not in (args.n, args.ell, args.w, args.k)
        has_rp = None not in (args.p, args.q, args.k1, args.k2)
        if has_index == has_rp:
            parser.error("params needs either --n --ell --w --k or --p --q --k1 --k2")
    try:
        data, (header, rows), status = args.func(args)
    except (UsageError, AdmissibilityError) as exc:
        print(f"su3sph {args.command}: {exc}", file=sys.stderr)
        return 2
    text = ser.dumps(data) if args.format == "json" else ser.csv_text(header, rows)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"su3sph {args.command}: cannot write {args.output}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
