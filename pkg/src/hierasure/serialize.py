"""JSON wire formats for every artifact the CLI reads or writes.

All payloads are plain integers, lists and objects, ascending-power
coefficient arrays throughout, so round trips are bit exact:

* tower:    {"p", "e", "modulus", "alpha", "ext_modulus"}
* element:  base [c0, ...], extension [[c0, ...], ...]
* code:     {"field", "ext", "H", "omega", "claim", "provenance"}
* udms:     {"field", "alpha", "m", "matrices", "meta"}
* received: {"field", "ext", "omega", "t", "known"}
* patterns: [[t1, ..., tn], ...]
"""

from __future__ import annotations

from typing import Any

from .codes import LinearCode, code_from_rows
from .errors import ParameterError
from .fields import Element, ExtSpec, FieldSpec, OrderedBasis
from .patterns import (
    BalancedFamily,
    BoundedFamily,
    FullFamily,
    PatternFamily,
    PowerFamily,
    ReceivedWord,
)
from .udm import UdmSet


# -- fields -----------------------------------------------------------------


def field_to_json(field: FieldSpec) -> dict:
    return {"p": field.p, "e": field.e, "modulus": [int(c) for c in field.modulus]}


def field_from_json(obj: dict) -> FieldSpec:
    return FieldSpec(obj["p"], obj["e"], tuple(obj["modulus"]))


def tower_to_json(ext: ExtSpec) -> dict:
    out = field_to_json(ext.base)
    out["alpha"] = ext.alpha
    out["ext_modulus"] = [[int(x) for x in c] for c in ext.modulus]
    return out


def tower_from_json(obj: dict) -> ExtSpec:
    base = field_from_json(obj)
    return ExtSpec(base, obj["alpha"], tuple(tuple(c) for c in obj["ext_modulus"]))


# -- elements ---------------------------------------------------------------


def element_to_json(el: Element) -> list:
    if isinstance(el.spec, ExtSpec):
        return [[int(x) for x in c] for c in el.coeffs]
    return [int(x) for x in el.coeffs]


def base_element_from_json(field: FieldSpec, obj) -> Element:
    return field.element(tuple(obj))


def ext_element_from_json(ext: ExtSpec, obj) -> Element:
    return ext.element(tuple(tuple(c) for c in obj))


def basis_to_json(basis: OrderedBasis) -> list:
    return [element_to_json(el) for el in basis.elements]


def basis_from_json(ext: ExtSpec, obj) -> OrderedBasis:
    return OrderedBasis(ext, [ext_element_from_json(ext, e) for e in obj])


# -- pattern families ---------------------------------------------------------


def family_to_json(fam: PatternFamily) -> dict:
    if isinstance(fam, FullFamily):
        return {"kind": "full", "alpha": fam.alpha, "m": fam.m, "n": fam.n}
    if isinstance(fam, BalancedFamily):
        return {"kind": "balanced", "alpha": fam.alpha, "n": fam.n}
    if isinstance(fam, PowerFamily):
        return {"kind": "power", "alpha": fam.alpha, "n": fam.n}
    if isinstance(fam, BoundedFamily):
        return {"kind": "bounded", "r": fam.r, "n": fam.n}
    raise ParameterError(f"unknown family {fam!r}")


def family_from_json(obj: dict) -> PatternFamily:
    kind = obj["kind"]
    if kind == "full":
        return FullFamily(obj["alpha"], obj["m"], obj["n"])
    if kind == "balanced":
        return BalancedFamily(obj["alpha"], obj["n"])
    if kind == "power":
        return PowerFamily(obj["alpha"], obj["n"])
    if kind == "bounded":
        return BoundedFamily(obj["r"], obj["n"])
    raise ParameterError(f"unknown family kind {kind!r}")


def patterns_to_json(patterns) -> list:
    return [list(t) for t in patterns]


def patterns_from_json(obj) -> list[tuple[int, ...]]:
    return [tuple(int(v) for v in t) for t in obj]


# -- codes --------------------------------------------------------------------


def code_to_json(code: LinearCode) -> dict:
    return {
        "field": field_to_json(code.ext.base),
        "ext": {
            "alpha": code.ext.alpha,
            "modulus": [[int(x) for x in c] for c in code.ext.modulus],
        },
        "H": [[element_to_json(e) for e in row] for row in code.H],
        "omega": basis_to_json(code.omega),
        "claim": None if code.claim is None else family_to_json(code.claim),
        "provenance": dict(code.provenance),
        "n": code.n,
    }


def code_from_json(obj: dict) -> LinearCode:
    base = field_from_json(obj["field"])
    ext = ExtSpec(base, obj["ext"]["alpha"], tuple(tuple(c) for c in obj["ext"]["modulus"]))
    rows = [[ext_element_from_json(ext, e) for e in row] for row in obj["H"]]
    omega = basis_from_json(ext, obj["omega"])
    claim = None if obj.get("claim") is None else family_from_json(obj["claim"])
    return code_from_rows(ext, rows, omega, claim, obj.get("provenance", {}), length=obj.get("n"))


# -- UDM sets -------------------------------------------------------------------


def udms_to_json(u: UdmSet) -> dict:
    return {
        "field": field_to_json(u.field),
        "alpha": u.alpha,
        "m": u.m,
        "matrices": [
            [[element_to_json(e) for e in row] for row in mat] for mat in u.matrices
        ],
        "meta": dict(u.meta),
    }


def udms_from_json(obj: dict) -> UdmSet:
    field = field_from_json(obj["field"])
    mats = tuple(
        tuple(tuple(base_element_from_json(field, e) for e in row) for row in mat)
        for mat in obj["matrices"]
    )
    return UdmSet(field, obj["alpha"], obj["m"], mats, obj.get("meta", {}))


# -- received words ---------------------------------------------------------------


def received_to_json(rw: ReceivedWord) -> dict:
    ext = rw.omega.ext
    return {
        "field": field_to_json(ext.base),
        "ext": {"alpha": ext.alpha, "modulus": [[int(x) for x in c] for c in ext.modulus]},
        "omega": basis_to_json(rw.omega),
        "t": list(rw.pattern),
        "known": [[element_to_json(c) for c in suffix] for suffix in rw.known],
    }


def received_from_json(obj: dict) -> ReceivedWord:
    base = field_from_json(obj["field"])
    ext = ExtSpec(base, obj["ext"]["alpha"], tuple(tuple(c) for c in obj["ext"]["modulus"]))
    omega = basis_from_json(ext, obj["omega"])
    known = tuple(
        tuple(base_element_from_json(base, c) for c in suffix) for suffix in obj["known"]
    )
    return ReceivedWord(omega, tuple(int(v) for v in obj["t"]), known)


def codeword_to_json(word) -> list:
    return [element_to_json(c) for c in word]


def codeword_from_json(ext: ExtSpec, obj) -> tuple[Element, ...]:
    return tuple(ext_element_from_json(ext, c) for c in obj)
