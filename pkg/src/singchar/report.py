"""Aggregated invariant reports and their JSON encoding.

Field names here are the frozen wire format documented in the README.
Infinite values serialize as the string "infinity", non-integral rationals
as "a/b" strings; the diagram's V2/V1 are always exact fraction strings.
"""

from __future__ import annotations

import time
from fractions import Fraction

from .algebra import INF, CoefficientField
from .curves import milnor_formula_check
from .errors import (
    NotInMaximalIdealError,
    OrderTooSmallError,
    SingcharError,
    WrongArityError,
)
from .invariants import determinacy_bound, milnor_number, tjurina_number
from .newton import Facet, VertexFace, delta_N, newton_diagram, newton_number, r_N, volumes
from .nondeg import nondegeneracy_report
from .poly import Poly, Ring, parse

STAGES = ("determinacy", "newton", "nondeg", "curve")


def encode(value):
    """Exact JSON encoding: INF -> "infinity", fractions -> "a/b"."""
    if value is INF:
        return "infinity"
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        return f"{value.numerator}/{value.denominator}"
    return value


def encode_fraction_string(value) -> str:
    if value is INF:
        return "infinity"
    return str(Fraction(value))


def _encode_point(point):
    return [encode(Fraction(c)) for c in point]


def _encode_facet(facet: Facet) -> dict:
    return {
        "from": _encode_point(facet.start),
        "to": _encode_point(facet.end),
        "weight": list(facet.weight),
        "w_degree": facet.w_degree,
        "lattice_length": facet.lattice_length,
        "extended": facet.extended,
    }


def _encode_face(face) -> dict:
    if isinstance(face, VertexFace):
        return {"vertex": list(face.point)}
    return _encode_facet(face)


def _encode_tree(node) -> dict:
    return {
        "chart": node.chart,
        "multiplicity": node.multiplicity,
        "depth": node.depth,
        "children": [_encode_tree(child) for child in node.children],
    }


def make_ring(characteristic: int, variables) -> Ring:
    return Ring(tuple(variables), CoefficientField(characteristic))


def build_report(
    characteristic: int,
    variables,
    poly_text: str,
    skip=(),
    timing: bool = False,
) -> dict:
    """Run all applicable stages on one input polynomial."""
    started = time.perf_counter()
    ring = make_ring(characteristic, variables)
    f = parse(poly_text, ring)
    report = {
        "input": {
            "poly": str(f),
            "vars": list(ring.variables),
            "char": ring.field.characteristic,
        },
        "ord": encode(f.order()),
        "mu": None,
        "tau": None,
        "notes": [],
    }
    if f.is_zero():
        report["notes"].append("zero polynomial: invariants undefined")
        return report

    report["mu"] = encode(milnor_number(f))
    report["tau"] = encode(tjurina_number(f))

    if "determinacy" not in skip:
        report["determinacy"] = _determinacy_stage(f)
    planar = ring.nvars == 2
    if not planar:
        report["notes"].append("newton/nondeg/curve stages out of scope (n>2)")
    if planar and "newton" not in skip:
        report["newton"] = _newton_stage(f)
    if planar and "nondeg" not in skip:
        local = ring.field.is_zero(f.constant_term())
        if local:
            report["nondeg"] = _nondeg_stage(f)
        else:
            report["notes"].append("nondeg/curve stages need f in the maximal ideal")
    if planar and "curve" not in skip:
        if ring.field.is_zero(f.constant_term()):
            report["curve"] = _curve_stage(f)
    if timing:
        report["timing_ms"] = round(1000 * (time.perf_counter() - started), 3)
    return report


def _determinacy_stage(f: Poly) -> dict:
    out = {}
    for kind in ("right", "contact"):
        try:
            d = determinacy_bound(f, kind)
        except OrderTooSmallError:
            out[kind] = {"trivial": "smooth or unit: 1-determined or trivially determined"}
            continue
        out[kind] = {
            "k_star": encode(d.k_star),
            "theorem_bound": encode(d.theorem_bound),
            "corollary_bound": encode(d.corollary_bound),
            "classical_char0_bound": encode(d.classical_char0_bound),
            "best": encode(d.best),
        }
    return out


def _newton_stage(f: Poly) -> dict:
    diagram = newton_diagram(f)
    out = {
        "vertices": [list(v) for v in diagram.vertices],
        "facets": [_encode_facet(facet) for facet in diagram.facets],
        "x_div": diagram.x_div,
        "y_div": diagram.y_div,
        "convenient": diagram.convenient,
        "mu_N": encode(newton_number(f)),
        "delta_N": encode(delta_N(f)),
        "r_N": r_N(f),
    }
    if diagram.convenient:
        vols = volumes(diagram)
        out["V2"] = encode_fraction_string(vols.V2)
        out["V1"] = encode_fraction_string(vols.V1)
    return out


def _nondeg_stage(f: Poly) -> dict:
    report = nondegeneracy_report(f)
    return {
        "NND": report.nnd,
        "WNND": report.wnnd,
        "INND": report.innd,
        "innd_route": report.innd_route,
        "faces": [
            {
                "face": _encode_face(v.face),
                "nd": v.nd,
                "wnd": v.wnd,
                "ind": v.ind,
                "witness": v.witness,
            }
            for v in report.faces + report.inner_faces
        ],
    }


def _curve_stage(f: Poly) -> dict:
    report = milnor_formula_check(f)
    return {
        "nu": encode(report.nu),
        "delta": {"value": encode(report.delta.value), "status": report.delta.status},
        "r": {"value": encode(report.r.value), "status": report.r.status},
        "milnor_formula": {
            "mu": encode(report.mu),
            "mu_N": encode(report.mu_N),
            "rhs": encode(report.formula_rhs),
            "verdict": report.verdict,
        },
        "blowup_tree": _encode_tree(report.tree) if report.tree else None,
    }


def render_text(report: dict) -> str:
    """Terse human-readable rendering of a report dict."""
    lines = []
    inp = report["input"]
    lines.append(
        f"f = {inp['poly']}  over char {inp['char']}  vars {','.join(inp['vars'])}"
    )
    lines.append(f"ord = {report['ord']}   mu = {report['mu']}   tau = {report['tau']}")
    det = report.get("determinacy")
    if det:
        for kind in ("right", "contact"):
            data = det.get(kind, {})
            if "trivial" in data:
                lines.append(f"{kind} determinacy: {data['trivial']}")
            else:
                lines.append(
                    f"{kind} determinacy: k*={data['k_star']} "
                    f"theorem={data['theorem_bound']} corollary={data['corollary_bound']} "
                    f"best={data['best']}"
                )
    newton = report.get("newton")
    if newton:
        verts = " ".join(str(tuple(v)) for v in newton["vertices"])
        lines.append(
            f"newton: vertices {verts}  convenient={newton['convenient']}  "
            f"mu_N={newton['mu_N']} delta_N={newton['delta_N']} r_N={newton['r_N']}"
        )
    nd = report.get("nondeg")
    if nd:
        lines.append(
            f"nondeg: NND={nd['NND']} WNND={nd['WNND']} INND={nd['INND']} "
            f"({nd['innd_route']})"
        )
    curve = report.get("curve")
    if curve:
        mf = curve["milnor_formula"]
        lines.append(
            f"curve: nu={curve['nu']} delta={curve['delta']['value']} "
            f"({curve['delta']['status']}) r={curve['r']['value']} "
            f"({curve['r']['status']})"
        )
        lines.append(
            f"milnor formula: mu={mf['mu']} mu_N={mf['mu_N']} rhs={mf['rhs']} "
            f"verdict={mf['verdict']}"
        )
    for note in report.get("notes", []):
        lines.append(f"note: {note}")
    if "timing_ms" in report:
        lines.append(f"timing: {report['timing_ms']} ms")
    return "\n".join(lines)
