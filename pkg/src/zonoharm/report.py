"""Analysis reports: one structured record per input, rendered as text or JSON.

The JSON schema is versioned and key order is fixed, so identical inputs give
byte-identical output.  Integers whose magnitude exceeds 2**53 are rendered as
decimal strings to stay safe for consumers with double-precision parsers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .arrangement import (
    VectorArrangement,
    enumerate_cocircuits,
    interior_lattice_points,
    loops_and_coloops,
)
from .graphs import (
    DirectedGraph,
    cographical_arrangement,
    enumerate_oriented_cycles,
    graph_rank,
    su2_poincare_polynomial,
    theta_subgraphs,
    tutte_of_arrangement,
    tutte_polynomial,
)
from .harmonics import (
    Harmonics,
    deletion_contraction_check,
    divided_power_generation_check,
    iz_hilbert_series,
    verify_saturation,
)
from .ideals import k_minus_generators, power_ideal_quotient_dims, verify_vanishing

SCHEMA_VERSION = 1
JSON_INT_LIMIT = 2**53


@dataclass(frozen=True)
class AnalysisOptions:
    json_output: bool = False
    assume_tu: bool = False
    max_degree: int | None = None
    exactness_elements: int | None = 4  # rank checks per report; None = all


def _trim(seq) -> list:
    out = list(seq)
    while out and out[-1] == 0:
        out.pop()
    return out


def build_report(
    source_text: str,
    va: VectorArrangement,
    graph: DirectedGraph | None,
    options: AnalysisOptions,
    tu_verdict,
) -> dict:
    """Assemble the full analysis record for an arrangement (or graph) input."""
    ctx = Harmonics(va, max_degree=options.max_degree)
    filt = ctx.report()
    cocircuits = enumerate_cocircuits(va)
    points = ctx.points
    tutte = tutte_of_arrangement(va)
    iz = iz_hilbert_series(va)

    gr = _trim(filt.gr_dims)
    identity_ok = gr == _trim(iz)
    saturation_ok = verify_saturation(filt)
    dp_ok = divided_power_generation_check(ctx)
    gens = k_minus_generators(va, cocircuits)
    vanishing_ok = verify_vanishing(gens, points)
    power_dims = power_ideal_quotient_dims(va)
    power_ok = _trim(power_dims) == gr

    loops, coloops = loops_and_coloops(va)
    dc_reports = []
    usable = [a for a in va.ground if a not in loops and a not in coloops]
    for pos, a in enumerate(usable):
        exact = options.exactness_elements is None or pos < options.exactness_elements
        dc_reports.append(deletion_contraction_check(va, a, check_exactness=exact))
    dc_ok = all(r.ok for r in dc_reports)

    report = {
        "schemaVersion": SCHEMA_VERSION,
        "kind": "graph" if graph is not None else "arrangement",
        "input": source_text,
        "arrangement": {
            "latticeRank": va.lattice_rank,
            "groundSize": va.size,
            "groundSet": list(va.ground),
            "totallyUnimodular": tu_verdict,
            "loops": list(loops),
            "coloops": list(coloops),
        },
        "cocircuits": [
            {
                "covector": list(c.covector),
                "dPlus": c.d_plus,
                "dMinus": c.d_minus,
                "support": list(c.support(va.ground)),
            }
            for c in cocircuits
        ],
        "interiorPoints": [list(p) for p in points.points],
        "pointCount": filt.point_count,
        "tutte": [[i, j, c] for i, j, c in tutte.terms],
        "izHilbert": _trim(iz),
        "qDims": list(filt.q_dims),
        "grDims": list(filt.gr_dims),
        "saturationIndices": list(filt.saturation_indices),
        "topDegree": filt.top_degree,
        "truncated": filt.truncated,
    }
    if graph is not None:
        cycles = enumerate_oriented_cycles(graph)
        thetas = theta_subgraphs(graph, cycles)
        su2 = su2_poincare_polynomial(graph)
        t_graph = tutte_polynomial(graph)
        identity_ok = identity_ok and gr == _trim(su2)
        report["graph"] = {
            "vertexCount": len(graph.vertices),
            "arrowCount": len(graph.arrows),
            "rank": graph_rank(graph),
            "tutte": [[i, j, c] for i, j, c in t_graph.terms],
            "su2Poincare": _trim(su2),
            "orientedCycles": [
                {
                    "arrows": [[i, s] for i, s in c.arrows],
                    "dPlus": len(c.c_plus),
                    "dMinus": len(c.c_minus),
                    "classVector": list(c.class_vector),
                }
                for c in cycles
            ],
            "thetaTriples": [
                [[list(a) for a in c.arrows] for c in triple] for triple in thetas
            ],
        }
    report["checks"] = {
        "tutteIdentity": identity_ok,
        "saturation": saturation_ok,
        "dividedPowerGeneration": dp_ok,
        "generatorsVanish": vanishing_ok,
        "powerIdealDims": power_ok,
        "deletionContraction": [
            {
                "element": r.element,
                "bijection": r.bijection_ok,
                "dims": r.dims_ok,
                "exactness": r.exactness_ok,
            }
            for r in dc_reports
        ],
    }
    report["pass"] = bool(
        identity_ok and saturation_ok and dp_ok and vanishing_ok and power_ok and dc_ok
        and not filt.truncated
    )
    return report


def build_graph_report(source_text: str, graph: DirectedGraph, options: AnalysisOptions) -> dict:
    va = cographical_arrangement(graph)
    return build_report(source_text, va, graph, options, tu_verdict=True)


def _stringify_big_ints(value):
    if type(value) is int and abs(value) >= JSON_INT_LIMIT:
        return str(value)
    if isinstance(value, dict):
        return {k: _stringify_big_ints(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_stringify_big_ints(v) for v in value]
    return value


def to_json_bytes(report: dict) -> bytes:
    payload = _stringify_big_ints(report)
    return (json.dumps(payload, indent=2, sort_keys=False) + "\n").encode("utf-8")


def _poly_str(terms) -> str:
    if not terms:
        return "0"
    parts = []
    for i, j, c in terms:
        piece = []
        if abs(c) != 1 or (i == 0 and j == 0):
            piece.append(str(abs(c)))
        if i:
            piece.append("x" if i == 1 else f"x^{i}")
        if j:
            piece.append("y" if j == 1 else f"y^{j}")
        body = "*".join(piece) if piece else "1"
        parts.append(("- " if c < 0 else "+ ") + body)
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else text


def render_text(report: dict) -> str:
    lines = []
    add = lines.append
    add(f"zonoharm analysis (schema {report['schemaVersion']}, kind {report['kind']})")
    arr = report["arrangement"]
    add(f"  lattice rank     : {arr['latticeRank']}")
    add(f"  ground set       : {arr['groundSize']} elements: {' '.join(arr['groundSet'])}")
    add(f"  totally unimodular: {arr['totallyUnimodular']}")
    if arr["loops"] or arr["coloops"]:
        add(f"  loops: {arr['loops']}  coloops: {arr['coloops']}")
    if "graph" in report:
        gr = report["graph"]
        add(f"  graph            : {gr['vertexCount']} vertices, {gr['arrowCount']} arrows, rank {gr['rank']}")
        add(f"  oriented cycles  : {len(gr['orientedCycles'])} (one per opposite pair)")
        add(f"  theta triples    : {len(gr['thetaTriples'])}")
        add(f"  graph tutte      : {_poly_str([tuple(t) for t in gr['tutte']])}")
        add(f"  su2 poincare     : {gr['su2Poincare']}")
    add("  cocircuits (covector, d+, d-):")
    width = max((len(str(c["covector"])) for c in report["cocircuits"]), default=4)
    for c in report["cocircuits"]:
        add(f"    {str(c['covector']).ljust(width)}  {c['dPlus']:2d}  {c['dMinus']:2d}")
    pts = " ".join("(" + ",".join(str(x) for x in p) + ")" for p in report["interiorPoints"])
    add(f"  interior points ({report['pointCount']}): {pts}")
    add(f"  tutte (arrangement): {_poly_str([tuple(t) for t in report['tutte']])}")
    add(f"  izHilbert        : {report['izHilbert']}")
    add(f"  qDims            : {report['qDims']}")
    add(f"  grDims           : {report['grDims']}")
    add(f"  saturationIndices: {report['saturationIndices']}")
    add(f"  topDegree        : {report['topDegree']}" + (" (truncated)" if report["truncated"] else ""))
    checks = report["checks"]
    add("  checks:")
    for key in (
        "tutteIdentity",
        "saturation",
        "dividedPowerGeneration",
        "generatorsVanish",
        "powerIdealDims",
    ):
        add(f"    {key:<24} {'pass' if checks[key] else 'FAIL'}")
    for rec in checks["deletionContraction"]:
        exact = {True: "pass", False: "FAIL", None: "skipped"}[rec["exactness"]]
        verdict = "pass" if (rec["bijection"] and rec["dims"] and rec["exactness"] is not False) else "FAIL"
        add(
            f"    delete/contract {rec['element']:<6} {verdict}"
            f" (bijection {'ok' if rec['bijection'] else 'FAIL'},"
            f" dims {'ok' if rec['dims'] else 'FAIL'}, exactness {exact})"
        )
    add(f"  verdict: {'PASS' if report['pass'] else 'FAIL'}")
    return "\n".join(lines) + "\n"
