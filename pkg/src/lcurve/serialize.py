"""JSON encodings shared by the CLI, the cache and certificates.

Field elements are little-endian residue arrays, polynomials are arrays of
those (little-endian by degree), F_2 polynomials are 0/1 arrays.
"""

from __future__ import annotations

from lcurve.curve import HyperellipticCurve, curve_make
from lcurve.errors import InputError
from lcurve.finite_field import FieldSpec, field_make
from lcurve.mod2 import F2Polynomial
from lcurve.polynomial import FqPolynomial


def element_to_json(spec: FieldSpec, value: int) -> list[int]:
    return [int(r) for r in spec.residues(value)]


def element_from_json(spec: FieldSpec, obj) -> int:
    if isinstance(obj, int):
        obj = [obj]
    if not isinstance(obj, list) or not all(isinstance(r, int) for r in obj):
        raise InputError(f"field element must be an integer array, got {obj!r}")
    return spec.from_residues(obj).value


def poly_to_json(poly: FqPolynomial) -> list[list[int]]:
    return [element_to_json(poly.field, c) for c in poly.coeffs]


def poly_from_json(spec: FieldSpec, obj) -> FqPolynomial:
    if not isinstance(obj, list):
        raise InputError("polynomial must be an array of field elements")
    return FqPolynomial(spec, tuple(element_from_json(spec, c) for c in obj))


def field_to_json(spec: FieldSpec) -> dict:
    out = {"p": spec.p, "f": spec.f}
    if spec.modulus is not None:
        out["field_modulus"] = list(spec.modulus)
    return out


def curve_to_json(curve: HyperellipticCurve) -> dict:
    return {**field_to_json(curve.spec), "rhs": poly_to_json(curve.f)}


def curve_from_json(obj: dict) -> HyperellipticCurve:
    try:
        spec = field_make(obj["p"], obj.get("f", 1), obj.get("field_modulus"))
        return curve_make(spec, poly_from_json(spec, obj["rhs"]))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed curve JSON: {exc}") from None


def f2_to_json(poly: F2Polynomial) -> list[int]:
    return poly.to_list()


def f2_from_json(obj) -> F2Polynomial:
    if isinstance(obj, str):
        return F2Polynomial.from_hex(obj)
    if isinstance(obj, list) and all(c in (0, 1) for c in obj):
        return F2Polynomial.from_list(obj)
    raise InputError(f"F_2 polynomial must be a 0/1 array or hex string, got {obj!r}")
