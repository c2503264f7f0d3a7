"""The graded Lie algebra of infinitesimal automorphisms of a model.

For every admissible weight the tangency equation of a general homogeneous
field is assembled as an exact real linear system and its kernel is taken.
``compute_algebra_bruteforce`` solves the same equation over all fields of
bounded total degree, with no grading assumption, as an independent check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from crsym.errors import ClosureViolation
from crsym.fields import (
    VectorField,
    admissible_weights as _grid,
    basis_monomials,
    euler_field,
    field_of,
    field_weight,
    is_linear,
    lie_bracket,
    monomial_weight,
    value_at_origin,
)
from crsym.linalg import SpanSolver, rank, rational_kernel
from crsym.poly import I, ONE, CRat, HoloPoly, Poly, w_power, wirtinger_deriv
from crsym.weights import MultitypeWeight, Weight, variable_weights


@dataclass
class GradedComponent:
    """Kernel of the tangency equation at one weight.

    For ``0 < nu < 1`` the first ``gc_dim`` basis fields commute with d/dw
    and the rest span a complement (the non-commuting part).
    """

    nu: Fraction
    basis: list
    dim: int
    gc_dim: int = 0

    @property
    def gn_dim(self) -> int:
        return self.dim - self.gc_dim if 0 < self.nu < 1 else 0


@dataclass
class SymmetryAlgebra:
    mu: MultitypeWeight
    weights: Weight
    components: list
    gc_dim: int
    gn_dim: int
    total_dim: int
    brackets: dict = field(default_factory=dict)
    swapped: bool = False

    def component(self, nu) -> GradedComponent | None:
        nu = Fraction(nu)
        for c in self.components:
            if c.nu == nu:
                return c
        return None

    def dim_at(self, nu) -> int:
        c = self.component(nu)
        return c.dim if c else 0

    @property
    def g1_dim(self) -> int:
        return self.dim_at(1)

    @property
    def g0_dim(self) -> int:
        return self.dim_at(0)

    def graded_dims(self) -> dict:
        return {c.nu: c.dim for c in self.components if c.dim}

    def basis(self) -> list:
        return [Y for c in self.components for Y in c.basis]

    def contains(self, Y: VectorField) -> bool:
        """Whether ``Y`` lies in the real span of the computed basis."""
        nu = field_weight(Y, self.weights)
        if nu is None:
            return all(self.contains(part) for part in split_by_weight(Y, self.weights).values())
        comp = self.component(nu)
        if comp is None or not comp.dim:
            return False
        return SpanSolver([field_coords(B) for B in comp.basis]).solve(field_coords(Y)) is not None


# --------------------------------------------------------------------------
# coordinates of fields as real vectors
# --------------------------------------------------------------------------

def field_coords(Y: VectorField) -> dict:
    """Real coordinates keyed by ``(slot, monomial, 0 for Re | 1 for Im)``."""
    out = {}
    for s, f in enumerate(Y.comps):
        for k, c in f._t.items():
            if c.re:
                out[(s, k, 0)] = c.re
            if c.im:
                out[(s, k, 1)] = c.im
    return out


def field_from_coords(coords: dict) -> VectorField:
    comps = [{}, {}, {}]
    for (s, k, part), x in coords.items():
        if not x:
            continue
        cur = comps[s].get(k, CRat(0))
        comps[s][k] = cur + (CRat(x) if part == 0 else CRat(0, x))
    return VectorField(comps=[HoloPoly(c) for c in comps])


def split_by_weight(Y: VectorField, weights: Weight) -> dict:
    parts: dict = {}
    for s, f in enumerate(Y.comps):
        for k, c in f._t.items():
            nu = monomial_weight(s, k, weights)
            parts.setdefault(nu, []).append((s, k, c))
    out = {}
    for nu, items in parts.items():
        acc = VectorField()
        for s, k, c in items:
            acc = acc + field_of(s, k, c)
        out[nu] = acc
    return out


# --------------------------------------------------------------------------
# system assembly
# --------------------------------------------------------------------------

class _Assembler:
    """Caches the substituted building blocks of the tangency equation for one model."""

    def __init__(self, P: Poly):
        self.P = P
        self.pz = (wirtinger_deriv(P, "z1"), wirtinger_deriv(P, "z2"))
        self._wp: dict = {}

    def _block(self, slot, m):
        key = (slot, m)
        if key not in self._wp:
            W = w_power(self.P, m)
            if slot == 2:
                self._wp[key] = W.scale(CRat(0, -1))
            else:
                self._wp[key] = (W * self.pz[slot]).scale(-2)
        return self._wp[key]

    def pre_residual(self, slot, mono) -> dict:
        """``T`` for the field ``z^a w^m d/dx_slot`` as a dict over (a1, a2, b1, b2, k)."""
        a1, a2, m = mono
        block = self._block(slot, m)
        return {(k[0] + a1, k[1] + a2, k[2], k[3], k[4]): c for k, c in block._t.items()}

    def rows(self, columns) -> list[dict]:
        """Real rows of the tangency system; column ``2i`` is the field, ``2i+1`` its i-multiple."""
        rows: dict = {}
        for idx, (slot, mono) in enumerate(columns):
            c1, ci = 2 * idx, 2 * idx + 1
            for key, t in self.pre_residual(slot, mono).items():
                partner = (key[2], key[3], key[0], key[1], key[4])
                rep = min(key, partner)
                re_row = rows.setdefault((rep, 0), {})
                if t.re:
                    re_row[c1] = re_row.get(c1, 0) + t.re
                if t.im:
                    re_row[ci] = re_row.get(ci, 0) - t.im
                if key != partner:
                    sign = 1 if key == rep else -1
                    im_row = rows.setdefault((rep, 1), {})
                    if t.im:
                        im_row[c1] = im_row.get(c1, 0) + sign * t.im
                    if t.re:
                        im_row[ci] = im_row.get(ci, 0) + sign * t.re
        return [rows[k] for k in sorted(rows)]

    def kernel_fields(self, columns) -> list[VectorField]:
        kernel = rational_kernel(self.rows(columns), 2 * len(columns))
        out = []
        for vec in kernel:
            coords = {}
            for idx, (slot, mono) in enumerate(columns):
                if vec[2 * idx]:
                    coords[(slot, mono, 0)] = vec[2 * idx]
                if vec[2 * idx + 1]:
                    coords[(slot, mono, 1)] = vec[2 * idx + 1]
            out.append(field_from_coords(coords))
        return out


_ASSEMBLERS: dict = {}


def _assembler(P: Poly) -> _Assembler:
    a = _ASSEMBLERS.get(P)
    if a is None:
        if len(_ASSEMBLERS) > 64:
            _ASSEMBLERS.clear()
        a = _ASSEMBLERS[P] = _Assembler(P)
    return a


# --------------------------------------------------------------------------
# public operations
# --------------------------------------------------------------------------

def admissible_weights(P: Poly, weights: Weight) -> list[Fraction]:
    """Weights in [-1, 1] realised by some monomial field (``P`` fixes nothing beyond ``weights``)."""
    return _grid(weights)


def solve_component(P: Poly, weights: Weight, nu) -> GradedComponent:
    """Kernel of the tangency equation among fields of weight ``nu``."""
    nu = Fraction(nu)
    columns = basis_monomials(weights, nu)
    basis = _assembler(P).kernel_fields(columns) if columns else []
    comp = GradedComponent(nu=nu, basis=basis, dim=len(basis))
    if 0 < nu < 1 and basis:
        _split_rigid(comp)
    return comp


def _split_rigid(comp: GradedComponent):
    """Reorder the basis: w-free span first, then a complement."""
    coords = [field_coords(Y) for Y in comp.basis]
    wkeys = sorted({k for c in coords for k in c if k[1][2] > 0})
    if not wkeys:
        comp.gc_dim = comp.dim
        return
    rows = [{j: c[k] for j, c in enumerate(coords) if k in c} for k in wkeys]
    combos = rational_kernel(rows, comp.dim)
    rigid = []
    for vec in combos:
        acc = {}
        for j, x in enumerate(vec):
            if x:
                for k, v in coords[j].items():
                    acc[k] = acc.get(k, 0) + x * v
        rigid.append({k: v for k, v in acc.items() if v})
    chosen = list(rigid)
    for c in coords:
        if rank(chosen + [c]) > len(chosen):
            chosen.append(c)
        if len(chosen) == comp.dim:
            break
    comp.basis = [field_from_coords(c) for c in chosen]
    comp.gc_dim = len(rigid)


def model_weights(P: Poly, weights: Weight | None = None) -> tuple[Weight, bool]:
    if weights is not None:
        return weights, False
    return variable_weights(P)


def compute_algebra(P: Poly, weights: Weight | None = None, brackets: bool = True) -> SymmetryAlgebra:
    """Graded symmetry algebra of ``Im w = P``, with structure constants."""
    weights, swapped = model_weights(P, weights)
    comps = [solve_component(P, weights, nu) for nu in admissible_weights(P, weights)]
    comps = [c for c in comps if c.dim]
    mu = MultitypeWeight(max(weights), min(weights))
    alg = SymmetryAlgebra(
        mu=mu,
        weights=weights,
        components=comps,
        gc_dim=sum(c.gc_dim for c in comps if 0 < c.nu < 1),
        gn_dim=sum(c.gn_dim for c in comps),
        total_dim=sum(c.dim for c in comps),
        swapped=swapped,
    )
    if brackets:
        alg.brackets = structure_constants(alg)
    return alg


def structure_constants(alg: SymmetryAlgebra) -> dict:
    """``{(i, j): {k: c}}`` with ``[e_i, e_j] = sum c e_k`` over the global basis, ``i < j``.

    Raises ClosureViolation if a bracket is not in the span of the component
    of the summed weight.
    """
    index = []
    solvers = {}
    offset = 0
    offsets = {}
    for c in alg.components:
        offsets[c.nu] = offset
        solvers[c.nu] = SpanSolver([field_coords(Y) for Y in c.basis])
        for Y in c.basis:
            index.append((c.nu, Y))
        offset += c.dim
    table = {}
    for i in range(len(index)):
        for j in range(i + 1, len(index)):
            (a, X), (b, Y) = index[i], index[j]
            B = lie_bracket(X, Y)
            if B.is_zero():
                table[(i, j)] = {}
                continue
            target = a + b
            solver = solvers.get(target)
            coords = solver.solve(field_coords(B)) if solver else None
            if coords is None:
                raise ClosureViolation(f"[e{i}, e{j}] = {B} is outside g_{target}")
            base = offsets[target]
            table[(i, j)] = {base + k: x for k, x in enumerate(coords) if x}
    return table


def default_bruteforce_bound(weights: Weight) -> int:
    return math.ceil(1 / min(weights)) + 2


def all_monomials(bound: int):
    out = []
    for slot in range(3):
        for total in range(bound + 1):
            for a1 in range(total + 1):
                for a2 in range(total - a1 + 1):
                    out.append((slot, (a1, a2, total - a1 - a2)))
    return sorted(out)


def compute_algebra_bruteforce(P: Poly, degree_bound: int | None = None) -> tuple[int, list]:
    """Tangent fields among all monomial fields of total degree <= bound; no grading used."""
    if degree_bound is None:
        weights, _ = variable_weights(P)
        degree_bound = default_bruteforce_bound(weights)
    basis = _Assembler(P).kernel_fields(all_monomials(degree_bound))
    return len(basis), basis


def weight_profile(fields, weights: Weight) -> dict:
    """Dimension of each weight component of the span of ``fields``.

    The span of a graded kernel is the direct sum of its weight parts, so the
    rank of the projections onto each weight gives that part's dimension.
    """
    parts: dict = {}
    for Y in fields:
        for nu, part in split_by_weight(Y, weights).items():
            parts.setdefault(nu, []).append(field_coords(part))
    out = {}
    for nu in sorted(parts):
        keys = sorted({k for c in parts[nu] for k in c})
        pos = {k: i for i, k in enumerate(keys)}
        r = rank([{pos[k]: v for k, v in c.items()} for c in parts[nu]])
        if r:
            out[nu] = r
    return out


def euler_in_g0(alg: SymmetryAlgebra) -> bool:
    return alg.contains(euler_field(alg.weights))


def g0_is_linear(alg: SymmetryAlgebra) -> bool:
    comp = alg.component(0)
    return comp is None or all(is_linear(Y) for Y in comp.basis)


def shifts_are_regular(alg: SymmetryAlgebra) -> bool:
    """Negative-weight fields are w-free and no nonzero one vanishes at the origin."""
    for c in alg.components:
        if c.nu >= 0:
            continue
        if any(not all(f.is_w_free() for f in Y.comps) for Y in c.basis):
            return False
        vals = []
        for Y in c.basis:
            v = {}
            for s, x in enumerate(value_at_origin(Y)):
                if x.re:
                    v[2 * s] = x.re
                if x.im:
                    v[2 * s + 1] = x.im
            vals.append(v)
        if rank(vals) < c.dim:
            return False
    return True


__all__ = [
    "GradedComponent",
    "SymmetryAlgebra",
    "admissible_weights",
    "solve_component",
    "compute_algebra",
    "compute_algebra_bruteforce",
    "default_bruteforce_bound",
    "structure_constants",
    "weight_profile",
    "field_coords",
    "field_from_coords",
    "euler_in_g0",
    "g0_is_linear",
    "shifts_are_regular",
    "I",
    "ONE",
]
