"""Plain-data views of the library objects for JSON and CSV output.

Exact rationals are written as strings "p/q" (or "p" when integral) in JSON
and as a numerator column plus a denominator column in CSV.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import fmt
from .operators import RadialPoly
from .repr_core import EigenPair, RestrictionParams, SFIndex
from .series import HypergeometricSpec, ProbeResult, VectorSeries


def rat(x) -> str:
    return fmt(Fraction(x))


def rat_list(xs: Iterable) -> list[str]:
    return [rat(x) for x in xs]


def rat_matrix(m: Sequence[Sequence]) -> list[list[str]]:
    return [rat_list(row) for row in m]


def index_data(idx: SFIndex) -> dict:
    return {"n": idx.n, "ell": idx.ell, "w": idx.w, "k": idx.k}


def restriction_data(rp: RestrictionParams) -> dict:
    return {"p": rp.p, "q": rp.q, "k1": rp.k1, "k2": rp.k2}


def eigen_data(pair: EigenPair) -> dict:
    return {"lambda": rat(pair.lam), "mu": rat(pair.mu)}


def series_data(s: VectorSeries) -> dict:
    return {
        "ell": s.ell,
        "start": s.start,
        "truncation": s.truncation,
        "terminated": s.terminated,
        "leading_order": s.leading_order,
        "coefficients": [rat_list(h) for h in s.coeffs],
    }


def spec_data(spec: HypergeometricSpec) -> dict:
    return {
        "type": spec.label,
        "prefactor": rat(spec.prefactor),
        "offset": spec.offset,
        "a": rat(spec.a),
        "b": rat(spec.b),
        "c": rat(spec.c),
        "poly": rat_list(spec.poly),
    }


def radial_data(h: RadialPoly) -> dict:
    return {"alpha": h.alpha, "coeffs_in_r2": rat_list(h.coeffs)}


def probe_data(r: ProbeResult) -> dict:
    return {
        "index": index_data(r.index),
        "component": r.component,
        "degree": r.degree,
        "predicted": {"a": rat(r.a), "b": rat(r.b), "c": rat(r.c)},
        "fitted": r.fitted,
        "points": r.points,
        "verified_points": r.verified,
        "spec": spec_data(r.spec) if r.spec else None,
        "message": r.message,
    }


def dumps(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def csv_text(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def split(x) -> tuple[int, int]:
    x = Fraction(x)
    return x.numerator, x.denominator


def series_rows(s: VectorSeries) -> tuple[list[str], list[list]]:
    """Long-form rows j, i, numerator, denominator."""
    rows = []
    for off, h in enumerate(s.coeffs):
        for i, x in enumerate(h):
            rows.append([s.start + off, i, *split(x)])
    return ["j", "i", "num", "den"], rows


def matrix_rows(m: Sequence[Sequence]) -> tuple[list[str], list[list]]:
    rows = []
    for r, row in enumerate(m):
        for c, x in enumerate(row):
            rows.append([r, c, *split(x)])
    return ["row", "col", "num", "den"], rows
