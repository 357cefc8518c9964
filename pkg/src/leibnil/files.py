"""Algebra files and machine-readable reports.

Algebra files are JSON with exact coefficients kept as strings or integers
(floats are rejected). Reports are plain dicts serialized with sorted keys,
so a fixed (input, flags, seed) triple always produces byte-identical output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .algebra import AlgebraDef, algebra_from_constants
from .fields import field_descriptor, field_from_descriptor
from .linalg import Subspace, Vector, span
from .series import (
    EsNilVerdict,
    InclusionReport,
    NilpotencyProfile,
    SeriesBundle,
    SeriesTable,
)


@dataclass(frozen=True)
class LoadedAlgebra:
    algebra: AlgebraDef
    ideals: dict[str, Subspace]


def _exact_coefficient(value, where: str):
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"{where}: coefficient must be an exact int or string, got {value!r}")
    if not isinstance(value, (int, str)):
        raise ValueError(f"{where}: coefficient must be an exact int or string, got {value!r}")
    return value


def load_algebra_data(data: dict, source: str = "<data>") -> LoadedAlgebra:
    """Validate an algebra-file dict and build the algebra plus named subspaces."""
    if not isinstance(data, dict):
        raise ValueError(f"{source}: top level must be an object")
    for key in ("name", "dim", "field", "constants"):
        if key not in data:
            raise ValueError(f"{source}: missing required key {key!r}")
    name = data["name"]
    if not isinstance(name, str) or not name:
        raise ValueError(f"{source}: name must be a nonempty string")
    dim = data["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise ValueError(f"{source}: dim must be a positive integer")
    field = field_from_descriptor(data["field"])
    constants = data["constants"]
    if not isinstance(constants, list):
        raise ValueError(f"{source}: constants must be a list")
    triples = []
    for entry in constants:
        if not isinstance(entry, list) or len(entry) != 4:
            raise ValueError(f"{source}: each constant must be [i, j, k, coeff], got {entry!r}")
        i, j, k, coeff = entry
        value = field.parse(_exact_coefficient(coeff, source))
        triples.append((i, j, k, value))
    algebra = algebra_from_constants(name, dim, field, triples)

    ideals: dict[str, Subspace] = {}
    raw_ideals = data.get("ideals", {})
    if not isinstance(raw_ideals, dict):
        raise ValueError(f"{source}: ideals must be a map of name -> basis rows")
    for ideal_name, rows in raw_ideals.items():
        if not isinstance(rows, list):
            raise ValueError(f"{source}: ideal {ideal_name!r} must be a list of rows")
        vectors = []
        for row in rows:
            if not isinstance(row, list) or len(row) != dim:
                raise ValueError(
                    f"{source}: ideal {ideal_name!r} rows must have {dim} coefficients")
            coords = tuple(field.parse(_exact_coefficient(c, source)) for c in row)
            vectors.append(Vector(field, coords))
        ideals[ideal_name] = span(vectors, dim, field)
    return LoadedAlgebra(algebra, ideals)


def load_algebra_file(path: str | Path) -> LoadedAlgebra:
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: not valid JSON ({exc})") from exc
    return load_algebra_data(data, source=str(path))


def tool_stamp() -> dict:
    return {"name": "leibnil", "version": __version__}


def algebra_stamp(alg: AlgebraDef) -> dict:
    return {"name": alg.name, "dim": alg.dim, "field": field_descriptor(alg.field)}


def series_to_dict(table: SeriesTable) -> dict:
    return {
        "kind": table.kind.value,
        "indices": [k for k, _ in table.entries],
        "dims": table.dims(),
        "stabilized": table.stabilized,
        "terminated_zero": table.terminated_zero,
    }


def es_verdict_to_dict(verdict: EsNilVerdict) -> dict:
    return {
        "k": verdict.k,
        "definitive": verdict.definitive,
        "translate_dims": verdict.table.dims(),
    }


def profile_to_dict(profile: NilpotencyProfile) -> dict:
    return {
        "right_index": profile.right_index,
        "right_status": profile.right_status,
        "left_index": profile.left_index,
        "left_status": profile.left_status,
        "general_index": profile.general_index,
        "general_status": profile.general_status,
        "strong_index": profile.strong_index,
        "strong_status": profile.strong_status,
        "es_right_nil_k": profile.es_right_nil_k,
        "es_right_definitive": profile.es_right_definitive,
        "es_left_nil_k": profile.es_left_nil_k,
        "es_left_definitive": profile.es_left_definitive,
        "theorem_bound": profile.theorem_bound,
        "alt_bound": profile.alt_bound,
        "bound_satisfied": profile.bound_satisfied,
        "bound_verdict": profile.bound_verdict,
    }


def inclusions_to_dict(report: InclusionReport) -> dict:
    return {
        "seed": report.seed,
        "samples": report.samples,
        "all_passed": report.ok,
        "checks": [
            {"name": c.name, "passed": c.passed, "detail": c.detail}
            for c in report.checks
        ],
    }


def profile_report(alg: AlgebraDef, ideal_name: str, bundle: SeriesBundle,
                   profile: NilpotencyProfile, inclusions: InclusionReport,
                   n_max: int, k_max: int, seed: int) -> dict:
    return {
        "tool": tool_stamp(),
        "algebra": algebra_stamp(alg),
        "ideal": ideal_name,
        "params": {"nmax": n_max, "kmax": k_max, "seed": seed},
        "series": {
            "right_powers": series_to_dict(bundle.right),
            "left_powers": series_to_dict(bundle.left),
            "general_powers": series_to_dict(bundle.general),
            "strong_filtration": series_to_dict(bundle.strong),
            "bk_chain": series_to_dict(bundle.chain),
        },
        "es": {
            "dim": bundle.es_space.dim,
            "right": es_verdict_to_dict(bundle.es_right),
            "left": es_verdict_to_dict(bundle.es_left),
        },
        "profile": profile_to_dict(profile),
        "inclusions": inclusions_to_dict(inclusions),
    }


def dump_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def write_report(report: dict, path: str | Path) -> None:
    Path(path).write_text(dump_report(report))
