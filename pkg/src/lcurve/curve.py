"""Odd-degree hyperelliptic models y^2 = f(x)."""

from __future__ import annotations

from dataclasses import dataclass

from lcurve.errors import DegreeTooSmall, EvenDegree, FieldMismatch, NotSeparable, ZeroPolynomial
from lcurve.finite_field import FieldSpec
from lcurve.polynomial import FqPolynomial, is_separable


@dataclass(frozen=True)
class HyperellipticCurve:
    """Smooth projective curve with affine model y^2 = f(x), deg f = 2g + 1.

    Build through :func:`curve_make`, which validates the model.  The odd
    degree gives exactly one point at infinity.
    """

    spec: FieldSpec
    f: FqPolynomial

    @property
    def genus(self) -> int:
        return (self.f.degree - 1) // 2

    @property
    def q(self) -> int:
        return self.spec.order


def curve_make(spec: FieldSpec, f: FqPolynomial) -> HyperellipticCurve:
    if f.field != spec:
        raise FieldMismatch(f"polynomial lives over {f.field}, not {spec}")
    if f.is_zero():
        raise ZeroPolynomial("right-hand side is zero")
    n = f.degree
    if n % 2 == 0:
        raise EvenDegree(f"deg f = {n} is even; only odd-degree models are supported")
    if n < 3:
        raise DegreeTooSmall(f"deg f = {n} gives genus 0")
    if not is_separable(f):
        raise NotSeparable("f has a repeated root; the model is singular")
    return HyperellipticCurve(spec, f)
