"""Weighted degrees and the multitype weight of a model in given coordinates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from crsym.errors import InfiniteMultitype, NotWeightedHomogeneous, PluriharmonicTerms
from crsym.poly import Poly, has_pluriharmonic_terms, swap_variables

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Weight:
    """A pair of rational weights for (z1, z2); w and u always carry weight one."""

    l1: Fraction
    l2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "l1", Fraction(self.l1))
        object.__setattr__(self, "l2", Fraction(self.l2))

    def __iter__(self):
        yield self.l1
        yield self.l2

    def __getitem__(self, j):
        return (self.l1, self.l2)[j]

    def length(self, alpha) -> Fraction:
        return self.l1 * alpha[0] + self.l2 * alpha[1]

    def swapped(self) -> "Weight":
        return Weight(self.l2, self.l1)

    def scaled(self, c) -> "Weight":
        return Weight(self.l1 * c, self.l2 * c)

    def __str__(self):
        return f"({self.l1}, {self.l2})"


@dataclass(frozen=True)
class MultitypeWeight(Weight):
    """Multitype weight with ``0 < mu2 <= mu1 <= 1/2``."""

    def __post_init__(self):
        super().__post_init__()
        if not (0 < self.l2 <= self.l1 <= HALF):
            raise ValueError(f"invalid multitype weight {self}")

    @property
    def mu1(self):
        return self.l1

    @property
    def mu2(self):
        return self.l2


def weighted_degree(mono, weight: Weight) -> Fraction:
    """``k + (a1 + b1) l1 + (a2 + b2) l2`` for a monomial ``(a1, a2, b1, b2, k)``."""
    a1, a2, b1, b2 = mono[0], mono[1], mono[2], mono[3]
    k = mono[4] if len(mono) > 4 else 0
    return k + (a1 + b1) * weight.l1 + (a2 + b2) * weight.l2


def is_homogeneous(P: Poly, weight: Weight, kappa) -> bool:
    kappa = Fraction(kappa)
    return all(weighted_degree(k, weight) == kappa for k in P._t)


def _degree_rows(P: Poly):
    return sorted({(k[0] + k[2], k[1] + k[3]) for k in P._t})


def _lex_min(points):
    return min(points, key=lambda p: (p[0], p[1]))


def _in_region(pt):
    l1, l2 = pt
    return 0 <= l2 <= l1 <= HALF


def infer_multitype_weight(P: Poly) -> MultitypeWeight:
    """Lexicographic infimum of weights making ``P`` homogeneous of degree one.

    Only the given coordinates are considered. The feasible set is the
    affine set cut out by the support intersected with
    ``0 <= l2 <= l1 <= 1/2``.
    """
    if not P:
        raise ValueError("the zero polynomial has no multitype")
    if not P.is_u_free():
        raise ValueError("model must be u-free")
    if has_pluriharmonic_terms(P):
        raise PluriharmonicTerms("remove pluriharmonic terms first (pluriharmonic_split)")
    rows = _degree_rows(P)
    n1, n2 = rows[0]
    # find a second row independent of the first
    other = next((r for r in rows[1:] if r[0] * n2 - r[1] * n1 != 0), None)
    if other is not None:
        m1, m2 = other
        det = n1 * m2 - n2 * m1
        pt = (Fraction(m2 - n2, det), Fraction(n1 - m1, det))
        if any(r[0] * pt[0] + r[1] * pt[1] != 1 for r in rows) or not _in_region(pt):
            raise NotWeightedHomogeneous(f"support admits no weight in the multitype region (candidate {pt})")
        best = pt
    else:
        # all rows equal: the line n1 l1 + n2 l2 = 1 clipped to the region
        best = _lex_min(_segment_endpoints(n1, n2))
    if best[0] == 0 or best[1] == 0:
        raise InfiniteMultitype(f"weight infimum {best} has a zero entry")
    return MultitypeWeight(*best)


def _segment_endpoints(n1: int, n2: int):
    """Endpoints of ``{n1 l1 + n2 l2 = 1} ∩ region``; raises if empty."""
    # region is the triangle with vertices (0,0), (1/2,0), (1/2,1/2)
    verts = [(Fraction(0), Fraction(0)), (HALF, Fraction(0)), (HALF, HALF)]
    vals = [n1 * v[0] + n2 * v[1] - 1 for v in verts]
    pts = [v for v, s in zip(verts, vals) if s == 0]
    for i in range(3):
        a, b = verts[i], verts[(i + 1) % 3]
        sa, sb = vals[i], vals[(i + 1) % 3]
        if sa * sb < 0:
            t = sa / (sa - sb)
            pts.append((a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])))
    if not pts:
        raise NotWeightedHomogeneous("support admits no weight in the multitype region")
    return sorted(set(pts))


def multitype_of(mu: MultitypeWeight) -> tuple[Fraction, Fraction]:
    return (1 / mu.l1, 1 / mu.l2)


def variable_weights(P: Poly) -> tuple[Weight, bool]:
    """Per-variable weights for ``P`` in its given variable order.

    Falls back to the swapped model when ``z1`` carries the smaller weight;
    the returned ``Weight`` is then not ordered and the flag is ``True``.
    """
    try:
        mu = infer_multitype_weight(P)
        return Weight(mu.l1, mu.l2), False
    except NotWeightedHomogeneous:
        mu = infer_multitype_weight(swap_variables(P))
        return Weight(mu.l2, mu.l1), True
