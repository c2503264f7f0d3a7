from fractions import Fraction as F

import pytest

from crsym.autalg import (
    compute_algebra,
    compute_algebra_bruteforce,
    default_bruteforce_bound,
    field_coords,
    g0_is_linear,
    solve_component,
    structure_constants,
    weight_profile,
)
from crsym.fields import field_of, field_weight, lie_bracket, tangency_residual
from crsym.poly import I, parse_model, pluriharmonic_split
from crsym.weights import Weight, variable_weights


def model(text):
    P, _ = pluriharmonic_split(parse_model(text))
    return P


def test_component_examples():
    P = model("|z1|^2 + |z2|^2")
    c = solve_component(P, Weight(F(1, 2), F(1, 2)), -1)
    assert c.dim == 1
    T = model("Re(z1*conj(z2)^2)")
    c = solve_component(T, Weight(F(1, 3), F(1, 3)), F(1, 3))
    assert c.dim == 1 and c.gc_dim == 1
    assert c.basis[0] == field_of(0, (0, 2, 0), I)
    for sign in ("+", "-"):
        H = model(f"|z1|^2 {sign} |z2|^4")
        assert solve_component(H, Weight(F(1, 2), F(1, 4)), 0).dim == 3


@pytest.mark.parametrize(
    "text, total",
    [("|z1|^2 + |z2|^2", 15), ("Re(z1*conj(z2)^2)", 10), ("Re(z1*conj(z1)^3 + z2*conj(z2)^3)", 2)],
)
def test_compute_algebra_totals(text, total):
    assert compute_algebra(model(text)).total_dim == total


def test_basis_is_tangent_and_homogeneous():
    P = model("|z1|^2 + Re(z2)^3")
    alg = compute_algebra(P)
    for comp in alg.components:
        for Y in comp.basis:
            assert tangency_residual(Y, P).is_zero()
            assert field_weight(Y, alg.weights) == comp.nu


@pytest.mark.parametrize(
    "text, bound, dim",
    [("|z1|^2 + |z2|^2", 3, 15), ("Re(z1*conj(z1)^3 + z2*conj(z2)^3)", 5, 2), ("|z1|^4 + |z2|^4", 5, 5)],
)
def test_bruteforce_examples(text, bound, dim):
    assert compute_algebra_bruteforce(model(text), bound)[0] == dim


def test_bruteforce_weight_profile_matches():
    P = model("|z1|^2 + |z2|^4")
    alg = compute_algebra(P)
    _, basis = compute_algebra_bruteforce(P)
    assert weight_profile(basis, alg.weights) == alg.graded_dims()


def test_default_bound():
    assert default_bruteforce_bound(Weight(F(1, 2), F(1, 4))) == 6
    assert default_bruteforce_bound(Weight(F(1, 3), F(1, 3))) == 5


def test_structure_constants_reproduce_brackets():
    P = model("Re(z1*conj(z2)^2)")
    alg = compute_algebra(P)
    basis = alg.basis()
    for (i, j), coeffs in alg.brackets.items():
        B = lie_bracket(basis[i], basis[j])
        rebuilt = {}
        for k, c in coeffs.items():
            for key, v in field_coords(basis[k]).items():
                rebuilt[key] = rebuilt.get(key, 0) + c * v
        assert {k: v for k, v in rebuilt.items() if v} == field_coords(B)


def test_gc_gn_split_for_tube():
    alg = compute_algebra(model("Re(z1*conj(z2)^3)"))
    assert (alg.gc_dim, alg.gn_dim, alg.g1_dim) == (1, 2, 1)
    assert g0_is_linear(alg)


def test_swapped_model_uses_swapped_weights():
    alg = compute_algebra(model("Re(z1*conj(z1)^3) + Re(z2)^3"))
    assert alg.swapped and alg.mu.mu1 == F(1, 3) and alg.total_dim == 3


def test_closure_violation_detection():
    from crsym.errors import ClosureViolation

    alg = compute_algebra(model("|z1|^4 + |z2|^4"), brackets=False)
    # drop g_0: [d/dw, g_1] then has nowhere to land
    alg.components = [c for c in alg.components if c.nu != 0]
    with pytest.raises(ClosureViolation):
        structure_constants(alg)
