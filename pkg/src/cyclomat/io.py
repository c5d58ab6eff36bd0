"""JSON file formats: matroids, ordering sidecars, and reports.

Matroid files keep the construction route they were written with, so a
loaded file reconstructs through the same path:

    {"name": str, "n": int, "repr": {"kind": "bases" | "circuits" |
     "linear" | "graph", ...kind-specific fields...}}

Sets are sorted integer arrays.  The linear kind carries "p" and a
row-major "matrix" (height x n).  Ordering sidecars are
{"ordering": [int, ...], "t": int, "parity": "odd" | "even" | null}.
"""

from __future__ import annotations

import json
from typing import Optional

from .cyclic import CyclicOrdering
from .kernel import Matroid, SizeCapError, construct, mask_members


def matroid_to_dict(matroid: Matroid, name: Optional[str] = None) -> dict:
    return {
        "name": name or matroid.label,
        "n": matroid.n,
        "repr": {"kind": "bases", "bases": [mask_members(b) for b in matroid.bases]},
    }


def matroid_from_dict(data: dict, max_n: int = 20) -> Matroid:
    n = data["n"]
    if n > max_n:
        raise SizeCapError(f"matroid file has n = {n} above the cap {max_n}")
    repr_block = data["repr"]
    kind = repr_block["kind"]
    name = data.get("name", "derived")
    if kind == "bases":
        return construct("bases", n=n, bases=repr_block["bases"], label=name)
    if kind == "circuits":
        return construct("circuits", n=n, circuits=repr_block["circuits"], label=name)
    if kind == "linear":
        matrix = repr_block["matrix"]  # row-major, height x n
        columns = [tuple(row[j] for row in matrix) for j in range(n)]
        return construct("linear", p=repr_block["p"], columns=columns, label=name)
    if kind == "graph":
        return construct("graph", vertices=repr_block["vertices"], edges=repr_block["edges"], label=name)
    raise ValueError(f"unknown repr kind {kind!r}")


def ordering_to_dict(ordering: CyclicOrdering, t: int, parity: Optional[str]) -> dict:
    return {
        "ordering": list(ordering.seq),
        "t": t,
        "parity": parity if parity in ("odd", "even") else None,
    }


def ordering_from_dict(data: dict) -> tuple[CyclicOrdering, int, Optional[str]]:
    return CyclicOrdering(data["ordering"]), data["t"], data.get("parity")


def write_json(path: str, payload: dict) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(payload, handle, indent=2)
        handle.write("\n")


def read_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)
