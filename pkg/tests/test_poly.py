from fractions import Fraction

import pytest

from crsym.errors import HermitianViolation
from crsym.poly import (
    I,
    ONE,
    CRat,
    HoloPoly,
    Poly,
    RealPoly,
    add,
    conj_pair_check,
    hermitian,
    model_from_json,
    model_to_json,
    mul,
    parse_model,
    pluriharmonic_split,
    substitute_holomorphic,
    substitute_w,
    swap_variables,
    wirtinger_deriv,
    w,
    z,
)


def P(text):
    return parse_model(text)


def test_crat_arithmetic():
    a = CRat(1, 2)
    assert a * a.conj() == 5
    assert a / a == ONE
    assert I * I == -1
    assert str(CRat(Fraction(1, 2), Fraction(-1, 3))) == "(1/2-1/3*i)"
    assert CRat.coerce("1/2") == CRat(Fraction(1, 2))


def test_add_identity():
    p = P("|z1|^2 + |z2|^4")
    assert add(p, RealPoly.zero()) == p


def test_mul_single_monomials():
    assert mul(P("|z1|^2"), P("|z2|^2")) == RealPoly({(1, 1, 1, 1, 0): 1})


def test_add_rejects_non_hermitian():
    real = P("Re(z1*conj(z2))")
    bad = Poly({(1, 0, 0, 1, 0): Fraction(1, 2), (0, 1, 1, 0, 0): Fraction(-1, 2)})
    with pytest.raises(HermitianViolation):
        add(real, bad)


def test_real_poly_validates():
    with pytest.raises(HermitianViolation):
        RealPoly({(1, 0, 0, 1, 0): 1})


@pytest.mark.parametrize(
    "poly, expected",
    [
        (Poly({(1, 0, 0, 1, 0): Fraction(1, 2), (0, 1, 1, 0, 0): Fraction(1, 2)}), True),
        (Poly({(1, 0, 0, 1, 0): 1}), False),
        (P("|z1|^2 + |z2|^4"), True),
    ],
)
def test_conj_pair_check(poly, expected):
    assert conj_pair_check(poly) is expected


def test_closure_of_real_polys():
    p, q = P("Re(z1*conj(z2)^2)"), P("|z1|^2 - 3*|z2|^2")
    assert conj_pair_check(p + q) and conj_pair_check(p * q)


def test_wirtinger():
    assert wirtinger_deriv(P("|z1|^2"), "z1") == Poly({(0, 0, 1, 0, 0): 1})
    assert wirtinger_deriv(Poly({(1, 0, 0, 2, 0): Fraction(1, 2)}), "z2").is_zero()
    assert wirtinger_deriv(Poly({(1, 0, 0, 2, 0): Fraction(1, 2)}), "zb2") == Poly({(1, 0, 0, 1, 0): 1})


def test_pluriharmonic_split_re_z2_cubed():
    core, h = pluriharmonic_split(P("Re(z2)^3"))
    assert core == RealPoly({(0, 2, 0, 1, 0): Fraction(3, 8), (0, 1, 0, 2, 0): Fraction(3, 8)})
    # postcondition p = core + 2 Re h fixes h = z2^3 / 8
    assert h == HoloPoly({(0, 3, 0): Fraction(1, 8)})


def test_pluriharmonic_split_cases():
    core, h = pluriharmonic_split(P("|z1|^2"))
    assert core == P("|z1|^2") and h.is_zero()
    core, h = pluriharmonic_split(P("Re(z1^3)"))
    assert core.is_zero() and h == HoloPoly({(3, 0, 0): Fraction(1, 2)})


def test_pluriharmonic_split_reconstructs_and_is_idempotent():
    p = P("Re(z1)^3 + 2 + |z1|^2*Re(z2) + Im(z2^2)")
    core, h = pluriharmonic_split(p)
    hp = Poly({(a1, a2, 0, 0, 0): c for (a1, a2, _), c in h.items()})
    assert core + hp + hp.conj() == p
    core2, h2 = pluriharmonic_split(core)
    assert core2 == core and h2.is_zero()


def test_substitute_w_examples():
    x = P("|z1|^2")
    assert substitute_w(w(), x) == Poly({(0, 0, 0, 0, 1): 1, (1, 0, 1, 0, 0): I})
    sq = substitute_w(w() ** 2, x)
    assert sq == Poly({(0, 0, 0, 0, 2): 1, (1, 0, 1, 0, 1): CRat(0, 2), (2, 0, 2, 0, 0): -1})
    assert substitute_w(z(1), x) == Poly({(1, 0, 0, 0, 0): 1})


def test_substitute_w_agrees_with_evaluation():
    model = P("Re(z1*conj(z2)^2) + |z1|^2")
    q = HoloPoly({(1, 0, 2): CRat(1, -1), (0, 2, 1): 3, (0, 0, 3): Fraction(1, 2)})
    lifted = substitute_w(q, model)
    for z1, z2, u in [(CRat(1, 2), CRat(-1, 1), Fraction(1, 3)), (CRat(0, 1), CRat(2), Fraction(-2))]:
        wval = CRat(u) + I * model.evaluate(z1, z2)
        assert lifted.evaluate(z1, z2, u) == q.evaluate(z1, z2, wval)


def test_swap_and_holomorphic_substitution():
    p = P("|z1|^2 + |z2|^4")
    assert swap_variables(p) == P("|z2|^2 + |z1|^4")
    scaled = substitute_holomorphic(p, z(1).scale(2), z(2))
    assert scaled == P("4*|z1|^2 + |z2|^4")


def test_hermitian_helper():
    assert hermitian((1, 0), (0, 2), CRat(Fraction(1, 2))) == P("Re(z1*conj(z2)^2)")
    with pytest.raises(HermitianViolation):
        hermitian((1, 0), (1, 0), I)


def test_model_json_round_trip():
    p = P("(1/2+1/3*i)*z1*conj(z2)^2 + (1/2-1/3*i)*z2^2*conj(z1) - |z1|^2")
    data = model_to_json(p)
    assert all(isinstance(t["re"], str) for t in data["terms"])
    assert model_from_json(data) == p
