import random
from fractions import Fraction as F

import pytest

from crsym.autalg import compute_algebra
from crsym.classify import (
    AnalysisReport,
    ChainPair,
    HermitianSum,
    Nondegeneracy,
    TubeCross,
    analyze,
    balanced_field,
    balanced_weight,
    chain_model,
    g1_generator,
    holomorphic_nondegeneracy,
    recognize_special_family,
    verify_chain_pair,
)
from crsym.errors import LengthMismatch, NotReal
from crsym.fields import VectorField, field_of, tangency_residual
from crsym.poly import I, CRat, HoloPoly, parse_model, pluriharmonic_split, substitute_holomorphic, swap_variables
from crsym.weights import Weight


def m(text):
    return parse_model(text)


# -- nondegeneracy --------------------------------------------------------

def test_degenerate_single_variable():
    v = holomorphic_nondegeneracy(m("|z1|^2"))
    assert v.status == Nondegeneracy.Degenerate
    assert v.witness.f1.is_zero() and not v.witness.f2.is_zero()


def test_degenerate_product():
    P = m("|z1|^2*|z2|^2")
    v = holomorphic_nondegeneracy(P)
    assert v.status == Nondegeneracy.Degenerate
    Y = v.witness
    # witness is proportional to z1 d/dz1 - z2 d/dz2
    c = Y.f1.coeff((1, 0, 0))
    assert Y.f1 == HoloPoly({(1, 0, 0): c}) and Y.f2 == HoloPoly({(0, 1, 0): -c})


def test_nondegenerate_and_unknown():
    P = m("|z1|^2 + |z2|^4")
    assert holomorphic_nondegeneracy(P).status == Nondegeneracy.Nondegenerate
    assert holomorphic_nondegeneracy(P, 1).status == Nondegeneracy.UnknownAtBound


# -- balanced -------------------------------------------------------------

@pytest.mark.parametrize(
    "text, weight",
    [
        ("|z1|^2 + |z2|^4", Weight(1, F(1, 2))),
        ("|z1|^2 + |z2|^6", Weight(1, F(1, 3))),
        ("Re(z1^2*conj(z2))", Weight(F(1, 2), 1)),
        ("|z1|^2 + |z2|^2", Weight(1, 1)),
    ],
)
def test_balanced_weight(text, weight):
    assert balanced_weight(m(text)) == weight


def test_not_balanced():
    assert balanced_weight(m("Re(z1^3*conj(z2)) + |z1|^2*|z2|^2")) is None
    assert balanced_weight(m("Re(z1*conj(z1)^3 + z2*conj(z2)^3)")) is None


@pytest.mark.parametrize("text", ["|z1|^2 + |z2|^4", "(|z1|^2 + |z2|^2)^2", "|z1|^4 + |z2|^4", "Re(z1*conj(z2)^3)"])
def test_g1_generator_is_tangent(text):
    P = m(text)
    assert tangency_residual(g1_generator(balanced_weight(P)), P).is_zero()


def test_g1_generator_shape():
    Y = g1_generator(Weight(F(1, 2), 1))
    assert Y.g == HoloPoly({(0, 0, 2): F(1, 2)})


def test_balanced_after_linear_change():
    # |z1|^2 Re(z2 + z1) is balanced in the coordinates (z1, z2 + z1) only
    P, _ = pluriharmonic_split(m("|z1|^2*Re(z2 + z1)"))
    assert balanced_weight(P) is None
    X = balanced_field(P)
    assert X is not None
    assert X.apply(HoloPoly({(1, 0, 0): 1})) is not None
    assert compute_algebra(P).g1_dim > 0


# -- chains ---------------------------------------------------------------

def z1():
    return HoloPoly({(1, 0, 0): 1})


def z2l(l):
    return HoloPoly({(0, l, 0): 1})


@pytest.mark.parametrize("l", [2, 3])
def test_chain_pair_and_model(l):
    pair = ChainPair([z1(), z2l(l)], [z1(), z2l(l)], [I], [I])
    Y = field_of(0, (0, l, 0), I)
    assert verify_chain_pair(pair, Y)
    P = chain_model([pair])
    assert P == m(f"2*Re(z1*conj(z2)^{l})")
    assert tangency_residual(Y, P).is_zero()


def test_chain_constants_must_be_antisymmetric():
    pair = ChainPair([z1(), z2l(2)], [z1(), z2l(2)], [1], [1])
    assert not verify_chain_pair(pair, field_of(0, (0, 2, 0), I))


def test_single_element_chains():
    pair = ChainPair([HoloPoly({(0, 1, 0): 1})], [HoloPoly({(0, 1, 0): 1})], [], [])
    assert verify_chain_pair(pair, field_of(0, (0, 2, 0), I))
    assert chain_model([ChainPair([z1()], [z1()], [], [])]) == m("|z1|^2")
    two = [ChainPair([z1()], [z1()], [], []), ChainPair([HoloPoly({(0, 1, 0): 1})], [HoloPoly({(0, 1, 0): 1})], [], [])]
    assert chain_model(two) == m("|z1|^2 + |z2|^2")


def test_chain_errors():
    with pytest.raises(LengthMismatch):
        ChainPair([z1()], [z1(), z1()], [], [])
    with pytest.raises(NotReal):
        chain_model([ChainPair([z1()], [z2l(1)], [], [])])


# -- special families -----------------------------------------------------

def test_family_examples():
    assert recognize_special_family(m("2*Re(z1*conj(z2)^3)")) == TubeCross(3)
    fam = recognize_special_family(m("|z1|^2 - 5*|z2|^4"))
    assert (fam.kind, fam.l, fam.sign) == ("HermitianSum", 2, -1)
    assert recognize_special_family(m("|z1|^4 + |z2|^4")) is None
    assert recognize_special_family(m("|z1|^2 + |z2|^2")) is None


def test_family_recognition_is_invariant_under_normalizations():
    rng = random.Random(3)
    for text in ["Re(z1*conj(z2)^2)", "Re(z1*conj(z2)^3)", "|z1|^2 + |z2|^4", "|z1|^2 - |z2|^6"]:
        P = m(text)
        base = recognize_special_family(P)
        for _ in range(5):
            c1 = CRat(rng.randint(1, 3), rng.randint(-2, 2))
            c2 = CRat(rng.randint(1, 3), rng.randint(-2, 2))
            Q = substitute_holomorphic(P, HoloPoly({(1, 0, 0): c1}), HoloPoly({(0, 1, 0): c2}))
            Q = Q.scale(F(rng.randint(1, 5), rng.randint(1, 5)))
            if rng.random() < 0.5:
                Q = swap_variables(Q)
            Q = Q + m("Re(z1^2) + 3*Im(z2^3)")
            fam = recognize_special_family(Q)
            assert (fam.kind, fam.l, fam.sign) == (base.kind, base.l, base.sign)


def test_family_after_shear():
    # |z1 + z2^2|^2 + |z2|^4 is HermitianSum(2, plus) after z1 -> z1 - z2^2
    P = m("|z1 + z2^2|^2 + |z2|^4")
    assert recognize_special_family(P) == HermitianSum(2, 1)


# -- analysis -------------------------------------------------------------

def test_analyze_tube_cross():
    r = analyze("Re(z1*conj(z2)^2)")
    assert r.mu == ["1/3", "1/3"] and r.total_dim == 10 and r.gn_dim > 0
    assert r.special_family == {"kind": "TubeCross", "l": 2}
    assert not r.one_jet_determined
    assert r.warnings == []


def test_analyze_one_jet_determined():
    r = analyze("Re(z1)^3 + Re(z2)^4")
    assert r.total_dim == 4 and r.one_jet_determined
    assert r.pluriharmonic_part != "0"


def test_analyze_quadric():
    r = analyze("|z1|^2 + |z2|^2")
    assert r.total_dim == 15 and r.balanced == ["1", "1"]


def test_report_round_trip():
    for text in ["|z1|^2 + |z2|^4", "|z1|^2*|z2|^2", "Re(z1*conj(z1)^3) + Re(z2)^3"]:
        r = analyze(text)
        assert AnalysisReport.from_json(r.to_json()) == r
        assert r.to_dict()["schema"] == "cr-symmetry-report/1"


def test_report_invariant_one_jet():
    for text in ["|z1|^2 + |z2|^4", "|z1|^4 + |z2|^4", "Re(z1*conj(z1)^3 + z2*conj(z2)^3)"]:
        r = analyze(text)
        assert r.one_jet_determined == (r.gc_dim == 0 and r.gn_dim == 0 and r.g1_dim == 0)


def test_markdown_report():
    md = analyze("|z1|^2 + |z2|^4").to_markdown()
    assert "dim aut = **9**" in md and "HermitianSum(2, plus)" in md
