"""Parsing of group-spec documents.

A group spec is a JSON document with a version marker and a kind:

    {"format": 1, "kind": "named", "name": "S3"}
    {"format": 1, "kind": "permutation", "degree": 3,
     "generators": [[1, 0, 2], [1, 2, 0]]}
    {"format": 1, "kind": "matrix", "p": 5, "dimension": 2,
     "generators": [[[0, 4], [1, 0]], [[2, 0], [0, 3]]]}
    {"format": 1, "kind": "direct-product", "factors": [SPEC, SPEC]}
    {"format": 1, "kind": "semidirect", "p": 5, "dimension": 2,
     "group": SPEC, "action": "natural"}

Permutation generators are image arrays on 0..degree-1; matrices are arrays
of row arrays of integers mod p.  A semidirect action is either "natural"
(the inner group must be a matrix group of matching dimension and modulus)
or {"images": [MATRIX, ...]} giving one matrix per generator of the inner
group.  Parse errors carry the JSON-path of the offending field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .elements import FpMat, Perm
from .errors import GroupSpecError, InvalidGenerators
from .groups import (DEFAULT_ORDER_CAP, FiniteGroup, direct_product,
                     generate_group, named_group, parse_group_name,
                     semidirect_product)

FORMAT_VERSION = 1
KINDS = ("named", "permutation", "matrix", "direct-product", "semidirect")


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    payload: dict

    def build(self, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
        return _BUILDERS[self.kind](self.payload, cap)


def parse_group_spec(doc: dict, where: str = "$", top: bool = True) -> GroupSpec:
    if not isinstance(doc, dict):
        raise GroupSpecError("spec must be a JSON object", where)
    if top:
        version = doc.get("format")
        if version != FORMAT_VERSION:
            raise GroupSpecError(f"unsupported format {version!r}; "
                                 f"expected {FORMAT_VERSION}", f"{where}.format")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise GroupSpecError(f"unknown kind {kind!r}; expected one of {KINDS}",
                             f"{where}.kind")
    parser = _PARSERS[kind]
    return GroupSpec(kind, parser(doc, where))


def load_group_spec(path) -> GroupSpec:
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GroupSpecError(f"not valid JSON: {exc}", str(path)) from None
    return parse_group_spec(doc)


# --- field helpers ---

def _need(doc, key, where, types, what):
    if key not in doc:
        raise GroupSpecError(f"missing {what}", f"{where}.{key}")
    value = doc[key]
    if not isinstance(value, types):
        raise GroupSpecError(f"{what} has wrong type", f"{where}.{key}")
    return value


def _int_list(value, where, length=None):
    if not isinstance(value, list) or not all(isinstance(x, int) for x in value):
        raise GroupSpecError("expected an array of integers", where)
    if length is not None and len(value) != length:
        raise GroupSpecError(f"expected {length} entries, got {len(value)}", where)
    return value


def _matrix(value, where, dim, p):
    if not isinstance(value, list) or len(value) != dim:
        raise GroupSpecError(f"expected {dim} rows", where)
    rows = [_int_list(row, f"{where}[{i}]", dim) for i, row in enumerate(value)]
    return FpMat.from_rows(rows, p)


# --- per-kind parsing ---

def _parse_named(doc, where):
    name = _need(doc, "name", where, str, "group name")
    try:
        parse_group_name(name)
    except InvalidGenerators as exc:
        raise GroupSpecError(str(exc), f"{where}.name") from None
    return {"name": name}


def _parse_permutation(doc, where):
    degree = _need(doc, "degree", where, int, "permutation degree")
    raw = _need(doc, "generators", where, list, "generator list")
    if not raw:
        raise GroupSpecError("need at least one generator", f"{where}.generators")
    gens = []
    for i, images in enumerate(raw):
        images = _int_list(images, f"{where}.generators[{i}]", degree)
        try:
            gens.append(Perm(tuple(images)))
        except InvalidGenerators as exc:
            raise GroupSpecError(str(exc), f"{where}.generators[{i}]") from None
    return {"degree": degree, "gens": gens}


def _parse_matrix(doc, where):
    p = _need(doc, "p", where, int, "field modulus")
    dim = _need(doc, "dimension", where, int, "matrix dimension")
    if p < 2 or dim < 1:
        raise GroupSpecError("need p >= 2 and dimension >= 1", where)
    raw = _need(doc, "generators", where, list, "generator list")
    if not raw:
        raise GroupSpecError("need at least one generator", f"{where}.generators")
    gens = []
    for i, rows in enumerate(raw):
        m = _matrix(rows, f"{where}.generators[{i}]", dim, p)
        if not m.is_invertible():
            raise GroupSpecError(f"matrix is singular mod {p}",
                                 f"{where}.generators[{i}]")
        gens.append(m)
    return {"p": p, "dim": dim, "gens": gens}


def _parse_direct_product(doc, where):
    raw = _need(doc, "factors", where, list, "factor list")
    if len(raw) < 2:
        raise GroupSpecError("need at least two factors", f"{where}.factors")
    factors = [parse_group_spec(sub, f"{where}.factors[{i}]", top=False)
               for i, sub in enumerate(raw)]
    return {"factors": factors}


def _parse_semidirect(doc, where):
    p = _need(doc, "p", where, int, "field modulus")
    dim = _need(doc, "dimension", where, int, "vector dimension")
    inner = parse_group_spec(_need(doc, "group", where, dict, "acting group"),
                             f"{where}.group", top=False)
    action = doc.get("action", "natural")
    if action != "natural":
        if not isinstance(action, dict) or "images" not in action:
            raise GroupSpecError('action must be "natural" or {"images": [...]}',
                                 f"{where}.action")
        action = {"images": [_matrix(m, f"{where}.action.images[{i}]", dim, p)
                             for i, m in enumerate(action["images"])]}
    return {"p": p, "dim": dim, "inner": inner, "action": action}


_PARSERS = {
    "named": _parse_named,
    "permutation": _parse_permutation,
    "matrix": _parse_matrix,
    "direct-product": _parse_direct_product,
    "semidirect": _parse_semidirect,
}


# --- building ---

def _build_named(payload, cap):
    return named_group(payload["name"], cap=cap)


def _build_permutation(payload, cap):
    return generate_group(payload["gens"], cap=cap)


def _build_matrix(payload, cap):
    return generate_group(payload["gens"], cap=cap)


def _build_direct_product(payload, cap):
    groups = [spec.build(cap) for spec in payload["factors"]]
    out = groups[0]
    for g in groups[1:]:
        out = direct_product(out, g, cap=cap)
    return out


def _build_semidirect(payload, cap):
    from .linalg import ModuleAction

    inner = payload["inner"].build(cap)
    p, dim = payload["p"], payload["dim"]
    if payload["action"] == "natural":
        ident = inner.identity
        if not isinstance(ident, FpMat) or (ident.dim, ident.p) != (dim, p):
            raise GroupSpecError(
                "natural action needs a matrix group matching the stated "
                "dimension and modulus", "$.action")
        action = ModuleAction.natural(inner)
    else:
        action = ModuleAction.from_generator_images(
            inner, dim, p, payload["action"]["images"])
    return semidirect_product(action, cap=cap)


_BUILDERS = {
    "named": _build_named,
    "permutation": _build_permutation,
    "matrix": _build_matrix,
    "direct-product": _build_direct_product,
    "semidirect": _build_semidirect,
}
