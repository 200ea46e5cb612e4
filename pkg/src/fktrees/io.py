"""Serialization helpers: canonical JSON with fixed float formatting.

Certificates and spectra must be byte-identical across reruns, so floats are
always printed with 17 significant digits (enough to round-trip a double)
and key order is the insertion order of the dicts built here.
"""

from __future__ import annotations

import json
import math
from typing import Any

from .spectral import DirichletSpectrum
from .trees import TreeWithBoundary, canonical_code

__all__ = ["dumps", "spectrum_json", "tree_json", "read_tree_file"]


def _float_repr(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        raise ValueError(f"non-finite float {x!r} cannot be serialized")
    s = format(x, ".17g")
    if "e" not in s and "E" not in s and "." not in s:
        s += ".0"
    return s


def dumps(obj: Any) -> str:
    """Canonical single-line JSON: floats at 17 significant digits."""
    parts: list[str] = []
    _emit(obj, parts)
    return "".join(parts)


def _emit(obj: Any, out: list[str]) -> None:
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(_float_repr(obj))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, dict):
        out.append("{")
        for i, (k, v) in enumerate(obj.items()):
            if i:
                out.append(",")
            out.append(json.dumps(str(k)))
            out.append(":")
            _emit(v, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, v in enumerate(obj):
            if i:
                out.append(",")
            _emit(v, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def spectrum_json(spectrum: DirichletSpectrum) -> dict:
    return {
        "lambda1": float(spectrum.lambda1),
        "eigenfunction": [float(x) for x in spectrum.eigenfunction],
        "residual": float(spectrum.residual),
        "gap": None if spectrum.gap is None else float(spectrum.gap),
    }


def tree_json(tree: TreeWithBoundary, include_code: bool = True) -> dict:
    doc = {
        "n": tree.n,
        "edges": [[u, v] for u, v in tree.edges],
        "boundary": sorted(tree.boundary),
    }
    if include_code:
        doc["code"] = canonical_code(tree).text
    return doc


def read_tree_file(path: str) -> TreeWithBoundary:
    """Read a tree in the edge-list text format from a file."""
    from .trees import parse_edge_list_text

    with open(path, "r", encoding="ascii") as fh:
        return parse_edge_list_text(fh.read())
