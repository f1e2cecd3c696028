"""Instance files: exact JSON serialization of comodule algebras.

Scalars travel as strings in the field's own grammar, tensors as sparse
index/coefficient rows, so a file round-trips bit-exactly.  The Hopf algebra
block may instead name a builder with its parameters; the canonical form
produced by serialize_instance always expands to explicit tensors, which is
what the bundled fixtures store.
"""

import hashlib
import json

from .builders import (
    cyclic_group_table,
    dual_group_algebra,
    group_algebra,
    PLieAlgebra,
    restricted_enveloping,
    sweedler_hopf,
    symmetric_group_table,
)
from .comodule import ComoduleError, make_comodule, validate_comodule
from .fields import FieldError, field_from_name, field_name
from .hopf import HopfError, dual_hopf, make_hopf, validate_hopf
from .algebra import AlgebraError, make_algebra
from .linalg import Mat

FORMAT_NAME = "hopfinv-instance"
FORMAT_VERSION = 1


class InstanceError(ValueError):
    pass


def _format_vec(field, v):
    return [field.format(c) for c in v]


def _parse_vec(field, data, expect=None):
    out = tuple(field.parse(str(c)) for c in data)
    if expect is not None and len(out) != expect:
        raise InstanceError(f"vector of length {len(out)}, expected {expect}")
    return out


def algebra_to_data(alg):
    F = alg.field
    mul = []
    for i, j, row in alg.mul_triples():
        for k, c in row:
            mul.append([i, j, k, F.format(c)])
    return {
        "labels": list(alg.labels),
        "unit": _format_vec(F, alg.unit),
        "mul": mul,
    }


def algebra_from_data(field, data):
    try:
        labels = tuple(str(l) for l in data["labels"])
        unit = _parse_vec(field, data["unit"], expect=len(labels))
        triples = {}
        for entry in data["mul"]:
            i, j, k, c = entry
            triples.setdefault((int(i), int(j)), []).append((int(k), field.parse(str(c))))
        flat = [(i, j, row) for (i, j), row in triples.items()]
    except (KeyError, TypeError, ValueError) as exc:
        raise InstanceError(f"malformed algebra block: {exc}") from exc
    return make_algebra(field, labels, unit, flat)


def hopf_to_data(H):
    F = H.field
    comul = []
    for i, row in enumerate(H.comul):
        for (a, b), s in row:
            comul.append([i, a, b, F.format(s)])
    antipode = []
    for i, row in enumerate(H.antipode.rows):
        for j, c in enumerate(row):
            if c:
                antipode.append([i, j, F.format(c)])
    return {
        "algebra": algebra_to_data(H.alg),
        "comul": comul,
        "counit": _format_vec(F, H.counit),
        "antipode": antipode,
    }


def _hopf_from_builder(field, data):
    name = data["builder"]
    if name == "sweedler":
        return sweedler_hopf(field)
    if name in ("group_algebra", "dual_group_algebra"):
        if "cyclic" in data:
            table = cyclic_group_table(int(data["cyclic"]))
        elif "symmetric" in data:
            table = symmetric_group_table(int(data["symmetric"]))
        elif "table" in data:
            table = [list(map(int, row)) for row in data["table"]]
        else:
            raise InstanceError(f"{name} needs 'cyclic', 'symmetric', or 'table'")
        make = group_algebra if name == "group_algebra" else dual_group_algebra
        return make(field, table)
    if name in ("restricted_enveloping", "dual_restricted_enveloping"):
        labels = tuple(str(l) for l in data["labels"])
        n = len(labels)
        bracket = [[tuple([field.zero] * n) for _ in range(n)] for _ in range(n)]
        for entry in data.get("bracket", []):
            i, j, k, c = entry
            row = list(bracket[int(i)][int(j)])
            row[int(k)] = field.parse(str(c))
            bracket[int(i)][int(j)] = tuple(row)
        pmap = tuple(_parse_vec(field, row, expect=n) for row in data["pmap"])
        lie = PLieAlgebra(field, labels, tuple(tuple(r) for r in bracket), pmap)
        H = restricted_enveloping(lie)
        return dual_hopf(H) if name == "dual_restricted_enveloping" else H
    raise InstanceError(f"unknown Hopf builder: {name!r}")


def hopf_from_data(field, data):
    if "builder" in data:
        return _hopf_from_builder(field, data)
    try:
        alg = algebra_from_data(field, data["algebra"])
        comul_rows = [[] for _ in range(alg.dim)]
        for entry in data["comul"]:
            i, a, b, s = entry
            comul_rows[int(i)].append(((int(a), int(b)), field.parse(str(s))))
        counit = _parse_vec(field, data["counit"], expect=alg.dim)
        rows = [[field.zero] * alg.dim for _ in range(alg.dim)]
        for entry in data["antipode"]:
            i, j, c = entry
            rows[int(i)][int(j)] = field.parse(str(c))
        antipode = Mat(field, [tuple(r) for r in rows])
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise InstanceError(f"malformed Hopf block: {exc}") from exc
    return make_hopf(alg, comul_rows, counit, antipode)


def instance_to_data(C):
    F = C.field
    coaction = []
    for i, row in enumerate(C.coaction):
        for (a, h), s in row:
            coaction.append([i, a, h, F.format(s)])
    return {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "field": field_name(F),
        "algebra": algebra_to_data(C.algebra),
        "hopf": hopf_to_data(C.hopf),
        "coaction": coaction,
    }


def instance_from_data(data, validate=True):
    if not isinstance(data, dict):
        raise InstanceError("instance file must hold a JSON object")
    if data.get("format") != FORMAT_NAME:
        raise InstanceError(f"not a {FORMAT_NAME} file")
    if data.get("version") != FORMAT_VERSION:
        raise InstanceError(f"unsupported version {data.get('version')!r}")
    try:
        field = field_from_name(str(data["field"]))
    except KeyError as exc:
        raise InstanceError("missing field name") from exc
    except FieldError as exc:
        raise InstanceError(str(exc)) from exc
    try:
        hopf = hopf_from_data(field, data["hopf"])
        alg = algebra_from_data(field, data["algebra"])
        rows = [[] for _ in range(alg.dim)]
        for entry in data["coaction"]:
            i, a, h, s = entry
            rows[int(i)].append(((int(a), int(h)), field.parse(str(s))))
        C = make_comodule(alg, hopf, rows)
    except (KeyError, TypeError, IndexError) as exc:
        raise InstanceError(f"malformed instance: {exc}") from exc
    except (AlgebraError, HopfError, ComoduleError, FieldError) as exc:
        raise InstanceError(str(exc)) from exc
    if validate:
        problems = validate_hopf(hopf)
        if problems:
            raise InstanceError(f"Hopf axiom violated: {problems[0]}")
        problems = validate_comodule(C)
        if problems:
            raise InstanceError(f"comodule axiom violated: {problems[0]}")
    return C


def serialize_instance(C):
    """Canonical text: sorted keys, no whitespace, raw UTF-8 labels."""
    return json.dumps(instance_to_data(C), sort_keys=True,
                      separators=(",", ":"), ensure_ascii=False) + "\n"


def instance_digest(C):
    return hashlib.sha256(serialize_instance(C).encode("utf-8")).hexdigest()


def parse_instance(path, validate=True):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InstanceError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InstanceError(f"not valid JSON: {exc}") from exc
    return instance_from_data(data, validate=validate)


def write_instance(C, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_instance(C))
