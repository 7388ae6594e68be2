"""Wire serialization shared by the CLI and the HTTP service.

All integer data travels as decimal strings so coefficients are never
squeezed through 53-bit JSON numbers.  ``dumps`` uses fixed separators so
the CLI and the service emit byte-identical documents for the same query.
"""

from __future__ import annotations

import json
from math import tau
from typing import Any

from .cark import CarkGraph, SpineCycle
from .errors import DomainError
from .geometry import DiskGeodesic, Geodesic, sample_geodesic
from .modular_group import GroupElement, Word
from .quadratic_forms import QuadForm
from .reduction import ReductionPath
from .representation import SolveResult, Solution
from .sunburst import SunburstLayout


def dumps(payload: Any) -> str:
    return json.dumps(payload, separators=(",", ":"), allow_nan=False)


def element_json(m: GroupElement) -> dict:
    return {"p": str(m.p), "q": str(m.q), "r": str(m.r), "s": str(m.s)}


def form_json(f: QuadForm) -> dict:
    return {"a": str(f.a), "b": str(f.b), "c": str(f.c)}


def form_text(f: QuadForm) -> str:
    return f"{f.a},{f.b},{f.c}"


def parse_form(text: str) -> QuadForm:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"expected 'a,b,c', got {text!r}")
    return QuadForm(*(int(p.strip()) for p in parts))


def word_json(w: Word) -> str:
    return w.to_string()


def error_json(err: DomainError) -> dict:
    return {"code": err.code, "message": err.message}


def reduction_json(path: ReductionPath) -> dict:
    doc = {
        "end": form_json(path.end),
        "letters": path.letters().to_string(),
        "matrix": element_json(path.total_matrix),
        "steps": [
            {"label": step.label, "form": form_json(step.form_after)}
            for step in path.steps
        ],
    }
    if path.negated:
        doc["negated"] = True
    return doc


def spine_json(cycle: SpineCycle) -> dict:
    return {
        "forms": [form_json(f) for f in cycle.forms],
        "signature": cycle.signature.to_string(),
    }


def cark_json(graph: CarkGraph) -> dict:
    return {
        "nodes": [{"id": n.id, "kind": n.kind} for n in graph.nodes],
        "edges": [
            {
                "id": e.id,
                "from": e.node_from,
                "to": e.node_to,
                "form": form_json(e.form),
                "on_spine": e.on_spine,
                "depth": e.depth,
                "marked": e.marked,
            }
            for e in graph.edges
        ],
        "signature": graph.signature.to_string(),
    }


def geodesic_json(g: Geodesic | DiskGeodesic, samples: int = 64) -> dict:
    points = sample_geodesic(g, samples) if samples >= 2 else []
    if isinstance(g, Geodesic):
        e0, e1 = g.endpoints
        return {
            "model": "half_plane",
            "center": [float(g.center), 0.0],
            "radius": float(g.radius),
            "endpoints": [[float(e0), 0.0], [float(e1), 0.0]],
            "samples": [[z.real, z.imag] for z in points],
        }
    e0, e1 = g.endpoints
    return {
        "model": "disk",
        "center": [g.center.real, g.center.imag] if g.center is not None else None,
        "radius": g.radius,
        "endpoints": [[e0.real, e0.imag], [e1.real, e1.imag]],
        "samples": [[z.real, z.imag] for z in points],
    }


def sunburst_json(layout: SunburstLayout) -> dict:
    return {
        "cells": [
            {
                "word": cell.display.to_string(),
                "annulus": cell.annulus,
                "a0": float(cell.t0) * tau,
                "a1": float(cell.t1) * tau,
                "parent": cell.parent,
            }
            for cell in layout.cells
        ],
        "depth": layout.depth,
        "center": layout.center.to_string(),
    }


def solve_json(result: SolveResult | None, orbit: list[Solution], automorph_m: GroupElement | None) -> dict:
    if result is None:
        return {"solutions": []}
    return {
        "solutions": [[str(s.x), str(s.y)] for s in orbit],
        "automorph": element_json(automorph_m) if automorph_m is not None else None,
        "path_letters": result.path_letters.to_string(),
    }
