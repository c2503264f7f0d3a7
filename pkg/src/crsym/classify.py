"""Classification of models: nondegeneracy, balanced weights, chains,
the two families with non-commuting fractional symmetries, and the full
analysis report."""

from __future__ import annotations

import enum
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb

from crsym.autalg import (
    compute_algebra,
    euler_in_g0,
    field_coords,
    g0_is_linear,
    shifts_are_regular,
)
from crsym.errors import LengthMismatch, NotReal
from crsym.fields import VectorField, basis_monomials, tangency_residual
from crsym.linalg import rational_kernel
from crsym.poly import (
    CRat,
    HoloPoly,
    Poly,
    RealPoly,
    antiholo_to_poly,
    conj_pair_check,
    format_model,
    holo_to_poly,
    parse_model,
    pluriharmonic_split,
    swap_variables,
    wirtinger_deriv,
)
from crsym.weights import MultitypeWeight, Weight, multitype_of, variable_weights


# --------------------------------------------------------------------------
# holomorphic nondegeneracy
# --------------------------------------------------------------------------

class Nondegeneracy(str, enum.Enum):
    Nondegenerate = "Nondegenerate"
    Degenerate = "Degenerate"
    UnknownAtBound = "UnknownAtBound"


@dataclass
class NondegeneracyVerdict:
    status: Nondegeneracy
    witness: VectorField | None
    bound_used: int


def default_syzygy_bound(P: Poly) -> int:
    """Total degree of ``P``.

    Viewing ``P_z1`` and ``P_z2`` as vectors over the holomorphic polynomial
    ring (indexed by the antiholomorphic monomials), a syzygy exists only if
    the two vectors are proportional, and then it is generated by a pair of
    their entries divided by a common factor: degree <= deg P - 1.
    """
    return P.degree()


def holomorphic_nondegeneracy(P: Poly, bound: int | None = None) -> NondegeneracyVerdict:
    """Search for holomorphic ``(f1, f2)`` of degree <= bound with ``f1 P_z1 + f2 P_z2 = 0``."""
    full = default_syzygy_bound(P)
    if bound is None:
        bound = full
    if bound < 1:
        raise ValueError("bound must be >= 1")
    derivs = (wirtinger_deriv(P, "z1"), wirtinger_deriv(P, "z2"))
    columns = [
        (slot, (a1, d - a1))
        for slot in range(2)
        for d in range(bound + 1)
        for a1 in range(d + 1)
    ]
    rows: dict = {}
    for idx, (slot, (a1, a2)) in enumerate(columns):
        for k, c in derivs[slot]._t.items():
            key = (k[0] + a1, k[1] + a2, k[2], k[3], k[4])
            re_row = rows.setdefault((key, 0), {})
            im_row = rows.setdefault((key, 1), {})
            # column 2*idx: real coefficient; 2*idx+1: imaginary coefficient
            if c.re:
                re_row[2 * idx] = re_row.get(2 * idx, 0) + c.re
                im_row[2 * idx + 1] = im_row.get(2 * idx + 1, 0) + c.re
            if c.im:
                im_row[2 * idx] = im_row.get(2 * idx, 0) + c.im
                re_row[2 * idx + 1] = re_row.get(2 * idx + 1, 0) - c.im
    kernel = rational_kernel([rows[k] for k in sorted(rows)], 2 * len(columns))
    if kernel:
        vec = kernel[0]
        comps = [{}, {}]
        for idx, (slot, (a1, a2)) in enumerate(columns):
            c = CRat(vec[2 * idx], vec[2 * idx + 1])
            if c:
                comps[slot][(a1, a2, 0)] = c
        witness = VectorField(HoloPoly._raw(comps[0]), HoloPoly._raw(comps[1]))
        return NondegeneracyVerdict(Nondegeneracy.Degenerate, witness, bound)
    status = Nondegeneracy.Nondegenerate if bound >= full else Nondegeneracy.UnknownAtBound
    return NondegeneracyVerdict(status, None, bound)


# --------------------------------------------------------------------------
# balanced models and the weight-one generator
# --------------------------------------------------------------------------

def _solve_lengths(vectors) -> Weight | None:
    """A weight with ``l . v = 1`` for every ``v``; canonical on a line of solutions."""
    vectors = sorted(set(vectors))
    if not vectors or (0, 0) in vectors:
        return None
    n1, n2 = vectors[0]
    other = next((v for v in vectors[1:] if v[0] * n2 - v[1] * n1), None)
    if other is not None:
        m1, m2 = other
        det = n1 * m2 - n2 * m1
        sol = (Fraction(m2 - n2, det), Fraction(n1 - m1, det))
    elif n2:
        # line n1 l1 + n2 l2 = 1: smallest |l1| is l1 = 0
        sol = (Fraction(0), Fraction(1, n2))
    else:
        sol = (Fraction(1, n1), Fraction(0))
    if any(v[0] * sol[0] + v[1] * sol[1] != 1 for v in vectors):
        return None
    return Weight(*sol)


def balanced_weight(P: Poly) -> Weight | None:
    """Weight ``L`` with ``|a|_L = |b|_L = 1`` for every support monomial ``z^a zbar^b``."""
    vectors = []
    for k in P._t:
        vectors.append((k[0], k[1]))
        vectors.append((k[2], k[3]))
    return _solve_lengths(vectors)


def balanced_field(P: Poly, weights: Weight | None = None) -> VectorField | None:
    """A weight-zero field ``X = f1 d/dz1 + f2 d/dz2`` (w-free) with ``X(P) = P``,
    acting on the holomorphic variables only; ``None`` if there is none.

    Such an X exists exactly when ``P`` is balanced in some weighted
    homogeneous coordinates: the semisimple part of X is diagonal in
    suitable coordinates and the real parts of its eigenvalues form a
    balanced weight there.
    """
    if weights is None:
        weights, _ = variable_weights(P)
    derivs = (wirtinger_deriv(P, "z1"), wirtinger_deriv(P, "z2"))
    columns = [(slot, mono) for slot, mono in basis_monomials(weights, 0) if slot < 2 and not mono[2]]
    # unknown complex multiples: field columns, then t for the term -t P
    blocks = [derivs[slot].shift((mono[0], mono[1], 0, 0, 0)) for slot, mono in columns]
    blocks.append(-P if not isinstance(P, RealPoly) else Poly._raw((-P)._t))
    rows: dict = {}
    for idx, block in enumerate(blocks):
        for key, c in block._t.items():
            re_row = rows.setdefault((key, 0), {})
            im_row = rows.setdefault((key, 1), {})
            if c.re:
                re_row[2 * idx] = re_row.get(2 * idx, 0) + c.re
                im_row[2 * idx + 1] = im_row.get(2 * idx + 1, 0) + c.re
            if c.im:
                im_row[2 * idx] = im_row.get(2 * idx, 0) + c.im
                re_row[2 * idx + 1] = re_row.get(2 * idx + 1, 0) - c.im
    t = len(columns)
    for vec in rational_kernel([rows[k] for k in sorted(rows)], 2 * len(blocks)):
        tc = CRat(vec[2 * t], vec[2 * t + 1])
        if not tc:
            continue
        comps = [{}, {}, {}]
        for idx, (slot, mono) in enumerate(columns):
            c = CRat(vec[2 * idx], vec[2 * idx + 1])
            if c:
                comps[slot][mono] = c / tc
        return VectorField(comps=[HoloPoly._raw(c) for c in comps])
    return None


def is_balanced(P: Poly, weights: Weight | None = None) -> bool:
    """Balanced in the given coordinates or after a weighted-homogeneous change of z."""
    return balanced_weight(P) is not None or balanced_field(P, weights) is not None


def g1_generator(weight: Weight) -> VectorField:
    """``(l1 z1 d/dz1 + l2 z2 d/dz2) w + 1/2 w^2 d/dw`` with ``l = weight / 2``.

    ``balanced_weight`` normalises weighted lengths to one; the tangent
    generator needs lengths one half, hence the factor.
    """
    half = Fraction(1, 2)
    return VectorField(
        HoloPoly.monomial((1, 0, 1), weight.l1 * half),
        HoloPoly.monomial((0, 1, 1), weight.l2 * half),
        HoloPoly.monomial((0, 0, 2), half),
    )


# --------------------------------------------------------------------------
# chains
# --------------------------------------------------------------------------

@dataclass
class ChainPair:
    U: list
    V: list
    c: list
    d: list

    def __post_init__(self):
        self.U = list(self.U)
        self.V = list(self.V)
        self.c = [CRat.coerce(x) for x in self.c]
        self.d = [CRat.coerce(x) for x in self.d]
        n = len(self.U)
        if n == 0 or len(self.V) != n or len(self.c) != n - 1 or len(self.d) != n - 1:
            raise LengthMismatch(
                f"chains need |U| = |V| = n >= 1 and n-1 constants (got {len(self.U)}, {len(self.V)}, {len(self.c)}, {len(self.d)})"
            )

    @property
    def n(self) -> int:
        return len(self.U)

    def is_symmetric(self) -> bool:
        n = self.n
        return all(
            self.c[j] and self.d[j] and self.c[j] == -self.d[n - 2 - j].conj()
            for j in range(n - 1)
        )


def _chain_ok(seq, consts, Y: VectorField) -> bool:
    n = len(seq)
    for j in range(n - 1):
        if Y.apply(seq[j]) != seq[j + 1].scale(consts[j]):
            return False
    return Y.apply(seq[-1]).is_zero()


def verify_chain_pair(pair: ChainPair, Y: VectorField) -> bool:
    """``Y(U^j) = c_j U^(j+1)``, ``Y(U^n) = 0``, same for V, and ``c_j = -conj(d_(n-j))``."""
    return pair.is_symmetric() and _chain_ok(pair.U, pair.c, Y) and _chain_ok(pair.V, pair.d, Y)


def chain_model(pairs) -> RealPoly:
    """``sum over pairs of sum_k U^k conj(V^(n-k+1))``; must come out real."""
    total = Poly.zero()
    for pair in pairs:
        n = pair.n
        for k in range(n):
            total = total + holo_to_poly(pair.U[k]) * antiholo_to_poly(pair.V[n - 1 - k])
    if not conj_pair_check(total):
        raise NotReal("chain data do not produce a real polynomial")
    return RealPoly._raw(total._t)


# --------------------------------------------------------------------------
# the two special families
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class SpecialFamily:
    """``TubeCross(l)``: Im w = Re z1 conj(z2)^l.
    ``HermitianSum(l, sign)``: Im w = |z1|^2 + sign |z2|^(2l)."""

    kind: str
    l: int
    sign: int = 1
    change: str = field(default="", compare=False)

    def __str__(self):
        if self.kind == "TubeCross":
            return f"TubeCross({self.l})"
        return f"HermitianSum({self.l}, {'plus' if self.sign > 0 else 'minus'})"

    def normal_form(self) -> RealPoly:
        if self.kind == "TubeCross":
            return parse_model(f"Re(z1*conj(z2)^{self.l})")
        op = "+" if self.sign > 0 else "-"
        return parse_model(f"|z1|^2 {op} |z2|^{2 * self.l}")

    def tag(self) -> dict:
        out = {"kind": self.kind, "l": self.l}
        if self.kind == "HermitianSum":
            out["sign"] = "plus" if self.sign > 0 else "minus"
        return out

    @classmethod
    def from_tag(cls, tag: dict, change: str = "") -> "SpecialFamily":
        sign = -1 if tag.get("sign") == "minus" else 1
        return cls(tag["kind"], int(tag["l"]), sign, change)


def TubeCross(l: int) -> SpecialFamily:
    return SpecialFamily("TubeCross", l)


def HermitianSum(l: int, sign: int = 1) -> SpecialFamily:
    return SpecialFamily("HermitianSum", l, 1 if sign > 0 else -1)


def _lth_power_root(coeffs, l):
    """If ``sum r_j z1^(l-j) z2^j`` equals ``r (z1 + t z2)^l`` or ``r z2^l`` return the linear form."""
    r0 = coeffs[0]
    if not r0:
        if any(coeffs[j] for j in range(l)):
            return None
        return (CRat(0), CRat(1))
    t = coeffs[1] / (r0 * l)
    for j in range(l + 1):
        if coeffs[j] != r0 * comb(l, j) * t**j:
            return None
    return (CRat(1), t)


def _recognize_tube(P: Poly, l: int) -> SpecialFamily | None:
    # only bidegrees (1, l) and (l, 1)
    M = [[CRat(0)] * (l + 1) for _ in range(2)]  # M[i][j]: z_i conj(z1^(l-j) z2^j)
    for (a1, a2, b1, b2, _), c in P._t.items():
        if a1 + a2 == 1 and b1 + b2 == l:
            M[0 if a1 else 1][b2] = c
        elif not (a1 + a2 == l and b1 + b2 == 1):
            return None
    # rank one: M = L (x) conj(R)
    pivot = next(((i, j) for i in range(2) for j in range(l + 1) if M[i][j]), None)
    if pivot is None:
        return None
    i0, j0 = pivot
    for i in range(2):
        for j in range(l + 1):
            if M[i][j] * M[i0][j0] != M[i][j0] * M[i0][j]:
                return None
    L1 = (M[0][j0], M[1][j0])
    Rbar = [M[i0][j] / M[i0][j0] for j in range(l + 1)]
    R = [x.conj() for x in Rbar]
    L2 = _lth_power_root(R, l)
    if L2 is None:
        return None
    if not (L1[0] * L2[1] - L1[1] * L2[0]):
        return None
    change = f"zeta1 = {L1[0]}*z1 + {L1[1]}*z2, zeta2 = {L2[0]}*z1 + {L2[1]}*z2"
    return SpecialFamily("TubeCross", l, 1, change)


def _recognize_hermitian_sum(P: Poly, l: int, swapped: bool) -> SpecialFamily | None:
    A = P.coeff((1, 0, 1, 0, 0))
    if not A:
        return None
    cross = P.coeff((1, 0, 0, l, 0))
    rest = {}
    for k, c in P._t.items():
        a1, a2, b1, b2, _ = k
        if k == (1, 0, 1, 0, 0) or k in ((1, 0, 0, l, 0), (0, l, 1, 0, 0)):
            continue
        if a1 or b1:
            # z1 z2^j conj(z2)^(l-j) with 0 < j < l, or anything else touching z1
            return None
        rest[k] = c
    gamma = cross.conj() / A
    diag = (0, l, 0, l, 0)
    B = rest.get(diag, CRat(0)) - A * (gamma * gamma.conj())
    if any(k != diag for k in rest) or not B:
        return None
    sign = 1 if (A.re > 0) == (B.re > 0) else -1
    names = ("z2", "z1") if swapped else ("z1", "z2")
    change = f"zeta1 = {names[0]} + {gamma}*{names[1]}^{l}" if gamma else "diagonal scaling"
    return SpecialFamily("HermitianSum", l, sign, change)


def recognize_special_family(P: Poly) -> SpecialFamily | None:
    """Match ``P`` against the two families up to swap, linear changes of z,
    the shear ``z1 -> z1 + c z2^l``, scaling of w and pluriharmonic terms."""
    P, _ = pluriharmonic_split(RealPoly._raw(P._t) if not isinstance(P, RealPoly) else P)
    if not P:
        return None
    try:
        weights, swapped = variable_weights(P)
    except Exception:
        return None
    l1, l2 = weights
    if l1 == l2:
        l = 1 / l1 - 1
        if l.denominator == 1 and l >= 2:
            return _recognize_tube(P, int(l))
        return None
    Q, sw = (swap_variables(P), True) if l1 < l2 else (P, False)
    hi, lo = max(weights), min(weights)
    if hi == Fraction(1, 2):
        l = 1 / (2 * lo)
        if l.denominator == 1 and l >= 2:
            return _recognize_hermitian_sum(Q, int(l), sw)
    return None


# --------------------------------------------------------------------------
# analysis report
# --------------------------------------------------------------------------

SCHEMA = "cr-symmetry-report/1"


@dataclass
class AnalysisReport:
    model: str
    normalized_model: str
    pluriharmonic_part: str
    mu: list
    multitype: list
    variables_swapped: bool
    nondegeneracy: str
    nondegeneracy_bound: int
    nondegeneracy_witness: str | None
    graded_dims: dict
    total_dim: int | None
    gc_dim: int
    gn_dim: int
    g1_dim: int
    balanced: list | None
    balanced_after_change: str | None
    special_family: dict | None
    one_jet_determined: bool
    observed_fractional_weights: list
    g0_linear: bool
    negative_weights_regular: bool
    euler_in_g0: bool
    warnings: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    basis: dict = field(default_factory=dict)
    embedding: dict | None = None

    def to_dict(self) -> dict:
        d = {"schema": SCHEMA}
        d.update(asdict(self))
        if d["embedding"] is None:
            del d["embedding"]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    @classmethod
    def from_dict(cls, d: dict) -> "AnalysisReport":
        if d.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {d.get('schema')!r}")
        d = {k: v for k, v in d.items() if k != "schema"}
        d.setdefault("embedding", None)
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        return cls.from_dict(json.loads(text))

    def to_markdown(self) -> str:
        lines = [f"# Symmetry report for `{self.model}`", ""]
        if self.pluriharmonic_part != "0":
            lines.append(f"- normalized model: `{self.normalized_model}` (w* = w - 2i h, h = `{self.pluriharmonic_part}`)")
        lines.append(f"- multitype weight: ({', '.join(self.mu)}); multitype ({', '.join(self.multitype)})")
        if self.variables_swapped:
            lines.append("- z1 and z2 play swapped roles (z2 carries the larger weight)")
        lines.append(f"- holomorphic nondegeneracy: {self.nondegeneracy} (bound {self.nondegeneracy_bound})")
        if self.total_dim is not None:
            lines.append(f"- dim aut = **{self.total_dim}**")
            lines.append(f"- g_c: {self.gc_dim}, g_n: {self.gn_dim}, g_1: {self.g1_dim}")
            lines.append("")
            lines.append("| weight | dim |")
            lines.append("|---|---|")
            for nu, dim in self.graded_dims.items():
                lines.append(f"| {nu} | {dim} |")
            lines.append("")
        lines.append(f"- balanced weight: {'(' + ', '.join(self.balanced) + ')' if self.balanced else 'none'}")
        if self.balanced_after_change:
            lines.append(f"- balanced after a coordinate change: X(P) = P for X = `{self.balanced_after_change}`")
        fam = self.special_family
        lines.append(f"- special family: {str(SpecialFamily.from_tag(fam)) if fam else 'none'}")
        lines.append(f"- determined by 1-jets: {'yes' if self.one_jet_determined else 'no'}")
        for wmsg in self.warnings:
            lines.append(f"- warning: {wmsg}")
        for note in self.notes:
            lines.append(f"- note: {note}")
        if self.basis:
            lines.append("")
            lines.append("## Basis")
            for nu, fields_ in self.basis.items():
                for Y in fields_:
                    lines.append(f"- [{nu}] `{Y}`")
        return "\n".join(lines) + "\n"


def _weight_strs(wt) -> list:
    return [str(x) for x in wt]


def analyze(P, *, bound: int | None = None, embed: bool = True) -> AnalysisReport:
    """Normalize, infer weights, test nondegeneracy, solve for the algebra and classify."""
    if isinstance(P, str):
        source = P
        P = parse_model(P)
    else:
        source = format_model(P)
    core, h = pluriharmonic_split(P if isinstance(P, RealPoly) else RealPoly._raw(P._t))
    if not core:
        raise ValueError("model is pluriharmonic (no Levi form terms)")
    weights, swapped = variable_weights(core)
    mu = MultitypeWeight(max(weights), min(weights))
    verdict = holomorphic_nondegeneracy(core, bound)
    warnings = []
    balanced = balanced_weight(core)
    change_field = balanced_field(core, weights) if balanced is None else None
    family = recognize_special_family(core)
    alg = None
    if verdict.status == Nondegeneracy.Degenerate:
        warnings.append("holomorphically degenerate: the symmetry algebra is infinite dimensional; no graded solve")
    else:
        if verdict.status == Nondegeneracy.UnknownAtBound:
            warnings.append(f"nondegeneracy undecided at bound {verdict.bound_used}")
        alg = compute_algebra(core, weights)
    report = AnalysisReport(
        model=source,
        normalized_model=format_model(core),
        pluriharmonic_part=_holo_str(h),
        mu=_weight_strs(mu),
        multitype=_weight_strs(multitype_of(mu)),
        variables_swapped=swapped,
        nondegeneracy=verdict.status.value,
        nondegeneracy_bound=verdict.bound_used,
        nondegeneracy_witness=str(verdict.witness) if verdict.witness is not None else None,
        graded_dims={},
        total_dim=None,
        gc_dim=0,
        gn_dim=0,
        g1_dim=0,
        balanced=_weight_strs(balanced) if balanced else None,
        balanced_after_change=None,
        special_family=family.tag() if family else None,
        one_jet_determined=False,
        observed_fractional_weights=[],
        g0_linear=True,
        negative_weights_regular=True,
        euler_in_g0=True,
        warnings=warnings,
    )
    if alg is not None:
        report.graded_dims = {str(nu): d for nu, d in alg.graded_dims().items()}
        report.total_dim = alg.total_dim
        report.gc_dim = alg.gc_dim
        report.gn_dim = alg.gn_dim
        report.g1_dim = alg.g1_dim
        report.one_jet_determined = alg.gc_dim == 0 and alg.gn_dim == 0 and alg.g1_dim == 0
        report.observed_fractional_weights = [str(c.nu) for c in alg.components if 0 < c.nu < 1]
        report.g0_linear = g0_is_linear(alg)
        report.negative_weights_regular = shifts_are_regular(alg)
        report.euler_in_g0 = euler_in_g0(alg)
        report.basis = {str(c.nu): [str(Y) for Y in c.basis] for c in alg.components}
        report.balanced_after_change = str(change_field) if change_field is not None else None
        _check_theorems(report, alg, balanced, change_field, family)
    if embed and report.total_dim is not None:
        report.embedding = _embedding_record(core, balanced, family)
    return report


def _holo_str(h: HoloPoly) -> str:
    return format_model(holo_to_poly(h)) if h else "0"


def _check_theorems(report, alg, balanced, change_field, family):
    if (alg.g1_dim > 0) != (balanced is not None or change_field is not None):
        report.warnings.append(
            f"weight-one symmetries (dim {alg.g1_dim}) disagree with balanced test ({balanced}, {change_field})"
        )
    if balanced is not None and alg.g1_dim:
        if not alg.contains(g1_generator(balanced)):
            report.warnings.append("weight-one generator from the balanced weight is not in g_1")
    levi_degenerate = alg.mu != MultitypeWeight(Fraction(1, 2), Fraction(1, 2))
    if levi_degenerate and alg.gn_dim > 0 and family is None:
        report.warnings.append(
            "g_n is nonzero but the model was not recognized as TubeCross or HermitianSum "
            "under elementary normalizations"
        )
    if alg.dim_at(-1) != 1:
        report.warnings.append(f"dim g_-1 = {alg.dim_at(-1)}")
    if alg.g0_dim > 5:
        report.warnings.append(f"dim g_0 = {alg.g0_dim} exceeds 5")
    if levi_degenerate and alg.total_dim > 10:
        report.warnings.append(f"Levi-degenerate model with dim {alg.total_dim} > 10")
    if not report.euler_in_g0:
        report.warnings.append("Euler field is not in g_0")
    if not report.g0_linear:
        report.notes.append("g_0 has elements of polynomial degree > 1 in these coordinates")
    if not report.negative_weights_regular:
        report.notes.append("some negative-weight field is not a regular shift in these coordinates")


def _embedding_record(core, balanced, family) -> dict | None:
    from crsym.quadric import balanced_embedding, embedding_record, gn_embeddings

    if balanced is not None:
        return embedding_record(balanced_embedding(core, balanced), core)
    if family is not None:
        embs = gn_embeddings(family)
        rec = embedding_record(embs[0], family.normal_form())
        rec["fields"] = [str(e.Y) for e in embs]
        rec["normalization"] = family.change
        return rec
    return None


def is_levi_degenerate(P: Poly) -> bool:
    weights, _ = variable_weights(P)
    return not (weights.l1 == weights.l2 == Fraction(1, 2))


def residual_is_zero(Y: VectorField, P: Poly) -> bool:
    return tangency_residual(Y, P).is_zero()


__all__ = [
    "Nondegeneracy",
    "NondegeneracyVerdict",
    "holomorphic_nondegeneracy",
    "balanced_weight",
    "g1_generator",
    "balanced_field",
    "is_balanced",
    "ChainPair",
    "verify_chain_pair",
    "chain_model",
    "SpecialFamily",
    "TubeCross",
    "HermitianSum",
    "recognize_special_family",
    "AnalysisReport",
    "analyze",
    "is_levi_degenerate",
    "residual_is_zero",
    "field_coords",
]
