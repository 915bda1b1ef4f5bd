"""Deterministic JSON serialisation of CLI reports.

Floats are written with 17 significant digits so identical inputs give
byte-identical files. NaN and infinities are refused; anything that cannot
be computed is written as ``null`` with an entry in the report's
``reasons`` map.
"""
import json
import math
from dataclasses import asdict
from enum import Enum
from importlib import resources

import numpy as np

SCHEMAS = ("analyze", "solve", "bound")


def _scalar(x):
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"refusing to serialise non-finite value {x!r}")
    return format(x, ".17g")


def dumps(obj, indent=2, _level=0):
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if obj is None:
        return "null"
    if isinstance(obj, Enum):
        return json.dumps(obj.value)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple, np.ndarray)) for v in obj):
            return "[" + ", ".join(dumps(v, indent, _level + 1) for v in obj) + "]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if isinstance(obj, complex):
        raise TypeError("encode complex values with complex_vector()")
    return _scalar(obj)


def complex_vector(v):
    v = np.asarray(v, dtype=np.complex128)
    return {"real": v.real.tolist(), "imag": v.imag.tolist()}


def analyze_payload(report, tolerances, scales=None):
    reasons = dict(report.reasons)
    eff = None
    if report.effectiveness is not None:
        eff = asdict(report.effectiveness)
        if eff["almost_effective_bound"] is None:
            reasons["effectiveness.almost_effective_bound"] = (
                "lower frame bound of the auxiliary sequence vanishes"
            )
        if eff["c1_lower"] is None:
            reasons["effectiveness.c1_lower"] = "Hermitian part of C is not positive definite"
    return {
        "kind": "analyze",
        "count": report.frame_e.count,
        "dim": report.frame_e.dim,
        "row_scales": None if scales is None else np.asarray(scales).tolist(),
        "tolerances": asdict(tolerances),
        "frame_e": asdict(report.frame_e),
        "frame_g": asdict(report.frame_g),
        "effectiveness": eff,
        "duality_defect": report.duality_defect,
        "convergence_bound": None if report.convergence is None else asdict(report.convergence),
        "solvability": report.solvability,
        "structural": {
            "c_minus_i_norm": report.c_minus_i_norm,
            "grammian_residual": report.grammian_residual,
        },
        "reasons": reasons,
    }


def load_schema(name):
    if name not in SCHEMAS:
        raise ValueError(f"no schema named {name!r}")
    text = resources.files(__package__).joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)
