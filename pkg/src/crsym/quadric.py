"""Monomial maps of models into Levi nondegenerate hyperquadrics, and
f-relatedness of symmetry fields under those maps.

Ambient coordinates are ``(zeta_1, ..., zeta_n, eta)``. Ambient polynomials
are plain ``SparsePoly`` objects of arity ``n + 1`` (holomorphic) or
``2n + 1`` (functions of ``zeta, conj(zeta), u``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from crsym.errors import NotBalanced
from crsym.fields import VectorField, field_text, tangency_residual
from crsym.parser import format_poly
from crsym.poly import I, ONE, CRat, HoloPoly, Poly, SparsePoly, substitute_w

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class HermitianQuadric:
    """``Im eta = sum over terms (i, j, A) of Re(A zeta_i conj(zeta_j))``."""

    nzeta: int
    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple((i, j, CRat.coerce(A)) for i, j, A in self.terms))
        if not any(A for _, _, A in self.terms):
            raise ValueError("a hyperquadric needs a nonzero coefficient")

    @property
    def K(self) -> int:
        return len(self.terms)

    @property
    def coefficients(self) -> list:
        return [A for _, _, A in self.terms]

    @property
    def ambient_dim(self) -> int:
        return self.nzeta + 1

    def form(self) -> SparsePoly:
        """The right-hand side as a real polynomial in ``(zeta, conj(zeta), u)``."""
        n = self.nzeta
        t: dict = {}
        for i, j, A in self.terms:
            for (a, b, c) in ((i, j, A * HALF), (j, i, A.conj() * HALF)):
                key = [0] * (2 * n + 1)
                key[a] += 1
                key[n + b] += 1
                key = tuple(key)
                s = t.get(key, CRat(0)) + c
                if s:
                    t[key] = s
                else:
                    t.pop(key, None)
        return SparsePoly._raw(t)

    def __str__(self):
        parts = []
        for i, j, A in self.terms:
            body = f"zeta{i + 1}*conj(zeta{j + 1})"
            parts.append(f"Re({body})" if A == ONE else f"Re({A}*{body})")
        return "Im eta = " + " + ".join(parts)


@dataclass(frozen=True)
class MonomialMap:
    """``zeta_k = zetas[k](z, w)``, ``eta = eta(z, w)`` (``eta = w`` for all maps built here)."""

    zetas: tuple
    eta: HoloPoly

    def __post_init__(self):
        object.__setattr__(self, "zetas", tuple(self.zetas))

    @property
    def components(self) -> tuple:
        return self.zetas + (self.eta,)

    def with_component(self, k: int, value: HoloPoly) -> "MonomialMap":
        zetas = list(self.zetas)
        zetas[k] = value
        return MonomialMap(tuple(zetas), self.eta)

    def __str__(self):
        from crsym.fields import _holo_text

        parts = [f"zeta{k + 1} = {_holo_text(f)}" for k, f in enumerate(self.zetas)]
        parts.append(f"eta = {_holo_text(self.eta)}")
        return ", ".join(parts)


@dataclass
class Embedding:
    quadric: HermitianQuadric
    map: MonomialMap
    Y: VectorField
    Z: VectorField
    a: CRat | None = None

    def __iter__(self):
        return iter((self.quadric, self.map, self.Y, self.Z))


# --------------------------------------------------------------------------
# ambient helpers
# --------------------------------------------------------------------------

def ambient_monomial(n: int, zeta_exps=(), eta_exp=0, c=ONE) -> SparsePoly:
    key = [0] * (n + 1)
    for k, e in zeta_exps:
        key[k] += e
    key[n] = eta_exp
    return SparsePoly._raw({tuple(key): CRat.coerce(c)})


def ambient_field(n: int, comps) -> VectorField:
    return VectorField(comps=[c if c is not None else SparsePoly._raw({}) for c in comps])


def _sum(polys, n):
    t: dict = {}
    for p in polys:
        for k, c in p._t.items():
            s = t.get(k, CRat(0)) + c
            if s:
                t[k] = s
            else:
                t.pop(k, None)
    return SparsePoly._raw(t)


def compose(p: SparsePoly, images) -> HoloPoly:
    """Substitute holomorphic images for the ambient variables of ``p``."""
    out = HoloPoly.zero()
    cache: dict = {}
    for key, c in p._t.items():
        term = HoloPoly.constant(c)
        for v, e in enumerate(key):
            if e:
                if (v, e) not in cache:
                    cache[(v, e)] = images[v] ** e
                term = term * cache[(v, e)]
        out = out + term
    return out


def _ambient_conj(p: SparsePoly, n: int) -> SparsePoly:
    return SparsePoly._raw(
        {k[n : 2 * n] + k[:n] + k[2 * n :]: c.conj() for k, c in p._t.items()}
    )


def ambient_tangency_residual(Z: VectorField, Q: HermitianQuadric) -> SparsePoly:
    """``Re(-i g^ - 2 sum f^_k dQ/dzeta_k)`` with ``eta = u + i Q``; zero iff Z is tangent."""
    n = Q.nzeta
    form = Q.form()
    u = [0] * (2 * n + 1)
    u[2 * n] = 1
    base = SparsePoly._raw({tuple(u): ONE}) + form.scale(I)
    powers = [SparsePoly.constant(1, nvars=2 * n + 1)]

    def lift(h: SparsePoly) -> SparsePoly:
        t: dict = {}
        for key, c in h._t.items():
            m = key[n]
            while len(powers) <= m:
                powers.append(powers[-1] * base)
            shift = tuple(key[:n]) + (0,) * (n + 1)
            for k2, v in powers[m]._t.items():
                nk = tuple(x + y for x, y in zip(k2, shift))
                s = t.get(nk, CRat(0)) + v * c
                if s:
                    t[nk] = s
                else:
                    t.pop(nk, None)
        return SparsePoly._raw(t)

    terms = [lift(Z.comps[n]).scale(CRat(0, -1))]
    for k in range(n):
        if Z.comps[k]:
            terms.append((lift(Z.comps[k]) * form.deriv(k)).scale(-2))
    T = _sum(terms, n)
    R = _sum([T, _ambient_conj(T, n)], n).scale(HALF)
    return R


# --------------------------------------------------------------------------
# constructions
# --------------------------------------------------------------------------

def _pair_representatives(P: Poly):
    seen = []
    for (a1, a2, b1, b2, _), c in P.items():
        a, b = (a1, a2), (b1, b2)
        if a <= b:
            seen.append((a, b, c))
    return seen


def balanced_embedding(P: Poly, weight) -> Embedding:
    """Map ``zeta_j = z^(a_j)``, ``zeta_(K+j) = z^(b_j)``, ``eta = w`` into a quadric in C^(2K+1).

    ``weight`` is the balanced weight with unit lengths; the source field
    uses half of it (lengths one half).
    """
    from crsym.classify import g1_generator

    pairs = _pair_representatives(P)
    for a, b, _ in pairs:
        if weight.length(a) != 1 or weight.length(b) != 1:
            raise NotBalanced(f"support monomial z^{a} conj(z)^{b} has weighted lengths != 1")
    K = len(pairs)
    zetas = [HoloPoly.monomial((a[0], a[1], 0)) for a, _, _ in pairs]
    zetas += [HoloPoly.monomial((b[0], b[1], 0)) for _, b, _ in pairs]
    terms = [(j, K + j, c if a == b else c * 2) for j, (a, b, c) in enumerate(pairs)]
    Q = HermitianQuadric(2 * K, terms)
    fmap = MonomialMap(tuple(zetas), HoloPoly.monomial((0, 0, 1)))
    n = 2 * K
    comps = [ambient_monomial(n, [(k, 1)], 1, HALF) for k in range(n)]
    comps.append(ambient_monomial(n, (), 2, HALF))
    Z = ambient_field(n, comps)
    return Embedding(Q, fmap, g1_generator(weight), Z)


def gn_embedding(family, a=ONE) -> Embedding:
    """Explicit non-commuting fractional symmetry ``Y1(a)`` of the family's
    normal form and its image ``Z1(a)`` on the target quadric."""
    a = CRat.coerce(a)
    ab = a.conj()
    ia = I * ab  # i * conj(a)
    l = family.l
    H = lambda k1, k2, m, c: HoloPoly.monomial((k1, k2, m), c)  # noqa: E731
    n = 2
    A = lambda zs, e, c: ambient_monomial(n, zs, e, c)  # noqa: E731
    fmap = MonomialMap((H(1, 0, 0, 1), H(0, l, 0, 1)), H(0, 0, 1, 1))
    if family.kind == "TubeCross":
        Q = HermitianQuadric(2, [(0, 1, 1)])
        Y = VectorField(
            H(0, 0, 1, a) + H(1, l, 0, ia),
            H(0, l + 1, 0, ia / l),
            H(0, l, 1, ia),
        )
        Z = ambient_field(n, [
            A((), 1, a) + A([(0, 1), (1, 1)], 0, ia),
            A([(1, 2)], 0, ia),
            A([(1, 1)], 1, ia),
        ])
    elif family.kind == "HermitianSum":
        Q = HermitianQuadric(2, [(0, 0, 1), (1, 1, family.sign)])
        Y = VectorField(
            H(0, 0, 1, a) + H(2, 0, 0, ia * 2),
            H(1, 1, 0, ia * Fraction(2, l)),
            H(1, 0, 1, ia * 2),
        )
        Z = ambient_field(n, [
            A((), 1, a) + A([(0, 2)], 0, ia * 2),
            A([(0, 1), (1, 1)], 0, ia * 2),
            A([(0, 1)], 1, ia * 2),
        ])
    else:
        raise ValueError(f"unknown family {family!r}")
    return Embedding(Q, fmap, Y, Z, a)


def gn_embeddings(family) -> list:
    """Both real basis parameters ``a = 1`` and ``a = i``."""
    return [gn_embedding(family, ONE), gn_embedding(family, I)]


# --------------------------------------------------------------------------
# verification
# --------------------------------------------------------------------------

def verify_f_related(fmap: MonomialMap, Y: VectorField, Z: VectorField) -> bool:
    """``Y(phi_k) == Z_k o f`` for every component ``phi_k`` of the map."""
    images = fmap.components
    if len(Z.comps) != len(images):
        return False
    return all(Y.apply(phi) == compose(Zk, images) for phi, Zk in zip(images, Z.comps))


def verify_maps_into(fmap: MonomialMap, P: Poly, Q: HermitianQuadric) -> bool:
    """``Im eta - sum Re(A zeta_i conj(zeta_j))`` vanishes on ``Im w = P`` after composing."""
    hat = [substitute_w(phi, P) for phi in fmap.zetas]
    eta = substitute_w(fmap.eta, P)
    total = eta.imag_part()
    for i, j, A in Q.terms:
        total = total - (hat[i] * hat[j].conj()).scale(A).real_part()
    return total.is_zero()


def embedding_record(emb: Embedding, P: Poly) -> dict:
    """JSON-friendly summary with the verification outcomes."""
    return {
        "quadric": str(emb.quadric),
        "ambient_dim": emb.quadric.ambient_dim,
        "map": str(emb.map),
        "source_field": str(emb.Y),
        "ambient_field": field_text(emb.Z),
        "maps_into": verify_maps_into(emb.map, P, emb.quadric),
        "f_related": verify_f_related(emb.map, emb.Y, emb.Z),
        "source_tangent": tangency_residual(emb.Y, P).is_zero(),
        "ambient_tangent": ambient_tangency_residual(emb.Z, emb.quadric).is_zero(),
    }


def quadric_text(Q: HermitianQuadric) -> str:
    return str(Q)


__all__ = [
    "HermitianQuadric",
    "MonomialMap",
    "Embedding",
    "balanced_embedding",
    "gn_embedding",
    "gn_embeddings",
    "verify_f_related",
    "verify_maps_into",
    "ambient_tangency_residual",
    "embedding_record",
    "compose",
    "format_poly",
]
