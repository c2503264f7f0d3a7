"""Holomorphic polynomial vector fields: grading, brackets, tangency."""

from __future__ import annotations

import enum
from fractions import Fraction

from crsym.errors import NotHomogeneous, NotRigid, ZeroField
from crsym.parser import format_poly
from crsym.poly import (
    I,
    ONE,
    CRat,
    HoloPoly,
    Poly,
    RealPoly,
    SparsePoly,
    substitute_w,
    wirtinger_deriv,
)
from crsym.weights import Weight

SLOT_NAMES = ("d/dz1", "d/dz2", "d/dw")


class VectorField:
    """``sum_j comps[j] * d/dx_j`` with polynomial coefficients.

    The default shape is ``f1 d/dz1 + f2 d/dz2 + g d/dw`` over ``HoloPoly``;
    ambient fields for the quadric embeddings use longer component tuples.
    """

    __slots__ = ("comps",)

    def __init__(self, f1=None, f2=None, g=None, *, comps=None):
        if comps is None:
            comps = tuple(x if x is not None else HoloPoly.zero() for x in (f1, f2, g))
        self.comps = tuple(comps)

    @classmethod
    def from_components(cls, comps):
        return cls(comps=comps)

    @property
    def f1(self):
        return self.comps[0]

    @property
    def f2(self):
        return self.comps[1]

    @property
    def g(self):
        return self.comps[-1]

    def __eq__(self, other):
        return isinstance(other, VectorField) and self.comps == other.comps

    def __hash__(self):
        return hash(self.comps)

    def __bool__(self):
        return any(self.comps)

    def is_zero(self):
        return not any(self.comps)

    def __add__(self, other):
        return VectorField(comps=tuple(a + b for a, b in zip(self.comps, other.comps)))

    def __sub__(self, other):
        return VectorField(comps=tuple(a - b for a, b in zip(self.comps, other.comps)))

    def __neg__(self):
        return VectorField(comps=tuple(-a for a in self.comps))

    def scale(self, c):
        return VectorField(comps=tuple(a.scale(c) for a in self.comps))

    def __rmul__(self, c):
        return self.scale(c)

    def apply(self, h: SparsePoly) -> SparsePoly:
        """Act on a polynomial as the derivation ``sum comps[j] d/dx_j``."""
        out = type(h).zero() if h.nvars is not None else h.scale(0)
        for j, f in enumerate(self.comps):
            if f:
                d = h.deriv(j)
                if d:
                    out = out + f * d
        return out

    def __repr__(self):
        return f"VectorField({field_text(self)})"

    def __str__(self):
        return field_text(self)


def field_text(Y: VectorField, names=None) -> str:
    """Canonical rendering, e.g. ``(w - i*z1*z2^2) d/dz1 + (2*i*z2^2*w) d/dw``."""
    if names is None:
        names = SLOT_NAMES if len(Y.comps) == 3 else tuple(
            [f"d/dzeta{j + 1}" for j in range(len(Y.comps) - 1)] + ["d/deta"]
        )
    var_names = None if len(Y.comps) == 3 else (
        [f"zeta{j + 1}" for j in range(len(Y.comps) - 1)] + ["eta"]
    )
    parts = [f"({_holo_text(f, var_names)}) {name}" for f, name in zip(Y.comps, names) if f]
    return " + ".join(parts) if parts else "0"


def _holo_text(h: SparsePoly, var_names=None) -> str:
    if var_names is None:
        var_names = ("z1", "z2", "w")
    out = []
    for key, c in h.items():
        mono = "*".join(
            (n if e == 1 else f"{n}^{e}") for n, e in zip(var_names, key) if e
        )
        txt = format_poly(Poly.constant(c))
        neg = txt.startswith("-")
        mag = txt[1:] if neg else txt
        if mag == "1*i":
            mag = "i"
        body = mono if (mag == "1" and mono) else (f"{mag}*{mono}" if mono else mag)
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out) if out else "0"


def field_of(slot: int, mono, coeff=ONE) -> VectorField:
    comps = [HoloPoly.zero(), HoloPoly.zero(), HoloPoly.zero()]
    comps[slot] = HoloPoly.monomial(mono, coeff)
    return VectorField(comps=comps)


def d_z1():
    return field_of(0, (0, 0, 0))


def d_z2():
    return field_of(1, (0, 0, 0))


def d_w():
    return field_of(2, (0, 0, 0))


def euler_field(weights: Weight) -> VectorField:
    """``l1 z1 d/dz1 + l2 z2 d/dz2 + w d/dw``."""
    return VectorField(
        HoloPoly.monomial((1, 0, 0), weights.l1),
        HoloPoly.monomial((0, 1, 0), weights.l2),
        HoloPoly.monomial((0, 0, 1)),
    )


def _slot_offset(slot: int, weights: Weight) -> Fraction:
    return (weights.l1, weights.l2, Fraction(1))[slot]


def monomial_weight(slot: int, mono, weights: Weight) -> Fraction:
    """Weight of ``z^a w^m d/dx_slot``: ``|a| + m - (weight of x_slot)``."""
    return weights.l1 * mono[0] + weights.l2 * mono[1] + mono[2] - _slot_offset(slot, weights)


def field_weight(Y: VectorField, weights: Weight):
    """Common weight of all terms of ``Y``, or ``None`` if ``Y`` is not homogeneous."""
    if Y.is_zero():
        raise ZeroField("the zero field has no weight")
    found = {monomial_weight(s, k, weights) for s, f in enumerate(Y.comps) for k in f._t}
    return found.pop() if len(found) == 1 else None


def _monomials_of_weight(target: Fraction, weights: Weight):
    """All (a1, a2, m) with ``l1 a1 + l2 a2 + m == target`` (weights positive)."""
    if target < 0:
        return []
    out = []
    for m in range(int(target) + 1):
        rest = target - m
        a1_max = int(rest / weights.l1)
        for a1 in range(a1_max + 1):
            r2 = rest - a1 * weights.l1
            a2 = r2 / weights.l2
            if a2.denominator == 1:
                out.append((a1, int(a2), m))
    return sorted(out)


def basis_monomials(weights: Weight, nu) -> list[tuple[int, tuple]]:
    """(slot, monomial) pairs spanning the weight-``nu`` fields over C, in canonical order."""
    nu = Fraction(nu)
    out = []
    for slot in range(3):
        for mono in _monomials_of_weight(nu + _slot_offset(slot, weights), weights):
            out.append((slot, mono))
    return out


def enumerate_basis(weights: Weight, nu) -> list[VectorField]:
    """Real basis of monomial fields of weight ``nu``: each monomial with factors 1 and i."""
    out = []
    for slot, mono in basis_monomials(weights, nu):
        out.append(field_of(slot, mono, ONE))
        out.append(field_of(slot, mono, I))
    return out


def lie_bracket(X: VectorField, Y: VectorField) -> VectorField:
    """``[X, Y]^k = X(Y^k) - Y(X^k)``."""
    return VectorField(
        comps=tuple(X.apply(b) - Y.apply(a) for a, b in zip(X.comps, Y.comps))
    )


def pre_residual(Y: VectorField, P: Poly) -> Poly:
    """Complex-linear ``T(Y) = -i g^ - 2 (f1^ P_z1 + f2^ P_z2)``; the residual is ``Re T``."""
    out = substitute_w(Y.g, P).scale(CRat(0, -1))
    for j, f in enumerate((Y.f1, Y.f2)):
        if f:
            pz = wirtinger_deriv(P, ("z1", "z2")[j])
            out = out - (substitute_w(f, P) * pz).scale(2)
    return out


def tangency_residual(Y: VectorField, P: Poly) -> RealPoly:
    """``Im g^ - 2 Re(f1^ P_z1 + f2^ P_z2)`` with ``w = u + i P``; zero iff Y is tangent."""
    return pre_residual(Y, P).real_part()


def commutes_with_W(Y: VectorField) -> bool:
    return all(f.is_w_free() for f in Y.comps)


def is_rigid(Y: VectorField) -> bool:
    return commutes_with_W(Y)


class FieldClass(enum.Enum):
    Shift = "shift"
    Rotation = "rotation"
    GeneralizedRotation = "generalized-rotation"
    Other = "other"


def classify_field(Y: VectorField, weights: Weight) -> FieldClass:
    if not is_rigid(Y):
        raise NotRigid("field depends on w")
    nu = field_weight(Y, weights)
    if nu is None:
        raise NotHomogeneous("field is not weighted homogeneous")
    if nu < 0:
        return FieldClass.Shift
    if nu == 0:
        return FieldClass.Rotation
    if nu < 1:
        return FieldClass.GeneralizedRotation
    return FieldClass.Other


def admissible_weights(weights: Weight) -> list[Fraction]:
    """All ``nu`` in [-1, 1] carried by some monomial field."""
    found = set()
    one = Fraction(1)
    for slot in range(3):
        off = _slot_offset(slot, weights)
        # |a| + m <= 1 + off <= 2
        for m in range(3):
            a1 = 0
            while a1 * weights.l1 + m <= 2:
                a2 = 0
                while a1 * weights.l1 + a2 * weights.l2 + m <= 2:
                    nu = a1 * weights.l1 + a2 * weights.l2 + m - off
                    if -one <= nu <= one:
                        found.add(nu)
                    a2 += 1
                a1 += 1
    return sorted(found)


def value_at_origin(Y: VectorField) -> tuple:
    return tuple(f.coeff((0, 0, 0)) for f in Y.comps)


def is_linear(Y: VectorField) -> bool:
    return all(sum(k) <= 1 for f in Y.comps for k in f._t)

