from fractions import Fraction as F

import pytest

from crsym.classify import HermitianSum, TubeCross, balanced_weight
from crsym.errors import NotBalanced
from crsym.fields import VectorField, tangency_residual
from crsym.poly import I, ONE, HoloPoly, parse_model
from crsym.quadric import (
    HermitianQuadric,
    MonomialMap,
    ambient_tangency_residual,
    balanced_embedding,
    gn_embedding,
    gn_embeddings,
    verify_f_related,
    verify_maps_into,
)
from crsym.weights import Weight


def m(text):
    return parse_model(text)


@pytest.mark.parametrize(
    "text, K",
    [("|z1|^2 + |z2|^4", 2), ("Re(z1*conj(z2))", 1), ("(|z1|^2 + |z2|^2)^2", 3)],
)
def test_balanced_embedding(text, K):
    P = m(text)
    Q, fmap, Y, Z = balanced_embedding(P, balanced_weight(P))
    assert Q.K == K and Q.ambient_dim == 2 * K + 1
    assert verify_maps_into(fmap, P, Q)
    assert verify_f_related(fmap, Y, Z)
    assert tangency_residual(Y, P).is_zero()
    assert ambient_tangency_residual(Z, Q).is_zero()


def test_sphere_squared_coefficients():
    Q, _, _, _ = balanced_embedding(m("(|z1|^2 + |z2|^2)^2"), Weight(F(1, 2), F(1, 2)))
    assert sorted(c.re for c in Q.coefficients) == [1, 1, 2]


def test_balanced_embedding_requires_balance():
    with pytest.raises(NotBalanced):
        balanced_embedding(m("|z1|^2 + |z2|^4"), Weight(1, 1))


def test_identity_map_f_related():
    fmap = MonomialMap((HoloPoly({(1, 0, 0): 1}), HoloPoly({(0, 1, 0): 1})), HoloPoly({(0, 0, 1): 1}))
    Y = VectorField(None, None, HoloPoly({(0, 0, 0): 1}))
    from crsym.quadric import ambient_field, ambient_monomial

    Z = ambient_field(2, [None, None, ambient_monomial(2, (), 0)])
    assert verify_f_related(fmap, Y, Z)


@pytest.mark.parametrize("family", [TubeCross(2), TubeCross(3), HermitianSum(2, 1), HermitianSum(2, -1), HermitianSum(3, 1)])
def test_gn_embeddings(family):
    P = family.normal_form()
    for emb in gn_embeddings(family):
        assert verify_maps_into(emb.map, P, emb.quadric)
        assert verify_f_related(emb.map, emb.Y, emb.Z)
        assert tangency_residual(emb.Y, P).is_zero()
        assert ambient_tangency_residual(emb.Z, emb.quadric).is_zero()


def test_tube_cross_zeta2_component():
    emb = gn_embedding(TubeCross(2), ONE)
    # Y(z2^2) = i conj(a) z2^4 and the zeta2 slot of Z is i conj(a) zeta2^2
    assert emb.Y.apply(emb.map.zetas[1]) == HoloPoly({(0, 4, 0): I})


def test_perturbed_field_is_not_f_related():
    emb = gn_embedding(TubeCross(2), ONE)
    bad = VectorField(emb.Y.f1, emb.Y.f2.scale(-1), emb.Y.g)
    assert not verify_f_related(emb.map, bad, emb.Z)


def test_zeroed_component_breaks_maps_into():
    P = m("|z1|^2 + |z2|^4")
    Q, fmap, _, _ = balanced_embedding(P, balanced_weight(P))
    broken = fmap.with_component(0, HoloPoly.zero())
    assert not verify_maps_into(broken, P, Q)
    emb = gn_embedding(TubeCross(3))
    assert not verify_maps_into(emb.map.with_component(1, HoloPoly.zero()), TubeCross(3).normal_form(), emb.quadric)


def test_quadric_needs_nonzero_coefficient():
    with pytest.raises(ValueError):
        HermitianQuadric(2, [(0, 1, 0)])
