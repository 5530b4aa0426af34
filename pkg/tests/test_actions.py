import numpy as np
import pytest
from hypothesis import given, strategies as st

from twogroups import groups as gr
from twogroups.actions import (characteristic_iff_hol_normal, characteristic_witness,
                               compatibility_failure, conjugation_action, holomorph, hol_image,
                               identity_action, internal_semidirect, is_characteristic,
                               is_gpgd_xmod, make_action, semidirect_gpgd, split_extension,
                               trivial_action, verify_extension)
from twogroups.actor import actor_data, inner_phi
from twogroups.catalog import build_gpgd
from twogroups.config import ValidationError
from twogroups.gpgd import (commutator_subgpgd, discrete_gpgd, identity_morphism, is_isomorphic,
                            iter_morphisms, make_morphism, make_subgpgd, pair_gpgd,
                            trivial_subgpgd, whole_subgpgd, zero_gpgd, zero_morphism)
from oracles import brute_compatible


def complement_in_pair_s3(G):
    # arrows between 012 and 021, a copy of pair Z2
    return make_subgpgd(G, gr.generate(G.arrows, [6, 1]))


def test_identity_action_is_compatible(member):
    act = identity_action(member)
    assert compatibility_failure(act.actor_src, member, act.induced1, act.induced0) is None
    assert brute_compatible(act.actor_src, member, act.induced1, act.induced0)


@pytest.mark.parametrize("spec,which", [("pair-gpgd:s3", "derived"), ("pair-gpgd:s3", "whole"),
                                        ("discrete-gpgd:s3", "derived"),
                                        ("psi:normal-xmod:z4:2", "whole"),
                                        ("pair-gpgd:z3", "trivial")])
def test_conjugation_action_is_compatible(spec, which):
    G = build_gpgd(spec)
    N = {"derived": commutator_subgpgd, "whole": whole_subgpgd,
         "trivial": trivial_subgpgd}[which](G)
    act = conjugation_action(G, N)
    assert compatibility_failure(act.actor_src, act.target, act.induced1, act.induced0) is None
    assert brute_compatible(act.actor_src, act.target, act.induced1, act.induced0)
    # m.n = m + n - m on arrows
    for mi in range(G.arrows.order):
        for ni, n in enumerate(N.arrows.members):
            assert N.arrows.members[act.induced1[mi, ni]] == G.arrows.conj(mi, n)


def test_conjugation_needs_normal():
    G = pair_gpgd(gr.symmetric(3))
    with pytest.raises(ValidationError):
        conjugation_action(G, complement_in_pair_s3(G))


@given(st.sampled_from(["pair-gpgd:z2", "pair-gpgd:z3", "discrete-gpgd:z3", "psi:identity-xmod:z3"]),
       st.data())
def test_compatibility_matches_brute_force_on_perturbed_actions(spec, data):
    G = build_gpgd(spec)
    act = identity_action(G)
    ind1, ind0 = act.induced1.copy(), act.induced0.copy()
    if data.draw(st.booleans()):
        b = data.draw(st.integers(0, ind1.shape[0] - 1))
        a = data.draw(st.integers(0, ind1.shape[1] - 1))
        ind1[b, a] = data.draw(st.integers(0, G.arrows.order - 1))
    else:
        y = data.draw(st.integers(0, ind0.shape[0] - 1))
        x = data.draw(st.integers(0, ind0.shape[1] - 1))
        ind0[y, x] = data.draw(st.integers(0, G.objects.order - 1))
    ours = compatibility_failure(act.actor_src, G, ind1, ind0) is None
    assert ours == brute_compatible(act.actor_src, G, ind1, ind0)


def test_make_action_type_check():
    G = pair_gpgd(gr.cyclic(3))
    with pytest.raises(ValidationError):
        make_action(G, G, identity_morphism(G))


def test_trivial_action_gives_direct_product():
    G, H = pair_gpgd(gr.cyclic(3)), discrete_gpgd(gr.cyclic(2))
    S = semidirect_gpgd(trivial_action(H, G))
    assert S.arrows == gr.direct_product(G.arrows, H.arrows)
    assert S.objects == gr.direct_product(G.objects, H.objects)


def test_semidirect_with_zero_is_the_target(member):
    S = semidirect_gpgd(trivial_action(zero_gpgd(), member))
    assert is_isomorphic(S, member) is not None


def test_holomorph_examples():
    H = holomorph(discrete_gpgd(gr.cyclic(3)))
    assert H.arrows.order == 6
    assert gr.find_isomorphism(H.arrows, gr.symmetric(3)) is not None
    assert holomorph(pair_gpgd(gr.cyclic(2))).arrows.order == 4
    assert holomorph(zero_gpgd()).arrows.order == 1


def test_holomorph_orders(member):
    data = actor_data(member)
    H = holomorph(member)
    assert H.arrows.order == member.arrows.order * data.W.order
    assert H.objects.order == member.objects.order * data.Aut.order


def test_internal_semidirect_of_pair_s3():
    G = pair_gpgd(gr.symmetric(3))
    rep = internal_semidirect(G, commutator_subgpgd(G), complement_in_pair_s3(G))
    assert rep.passed, rep.diagnostics
    assert rep.witness.is_iso() and rep.witness.dst == G


def test_internal_semidirect_conditions_fail():
    G = pair_gpgd(gr.symmetric(3))
    W = whole_subgpgd(G)
    rep = internal_semidirect(G, W, W)
    assert not rep.passed
    assert any(m.startswith("(ii)") for m in rep.diagnostics)
    T = trivial_subgpgd(G)
    rep = internal_semidirect(G, T, T)
    assert any(m.startswith("(i)") for m in rep.diagnostics)
    with pytest.raises(ValidationError):
        internal_semidirect(G, complement_in_pair_s3(G), commutator_subgpgd(G))


@pytest.mark.parametrize("spec", ["discrete-gpgd:z3", "pair-gpgd:z2", "pair-gpgd:s3"])
def test_split_extension_and_ladder(spec):
    G = build_gpgd(spec)
    N, S, H, i, p, s = split_extension(identity_action(G))
    rep = verify_extension(N, S, H, i, p, s)
    assert rep.passed, rep.diagnostics
    # S acting on the image of N by conjugation gives the ladder
    act = conjugation_action(S, make_subgpgd(S, gr.image(i.f1), gr.image(i.f0)))
    assert act.actor_src == S
    i2 = make_morphism(act.target, S, i.f1.map, i.f0.map)
    rep = verify_extension(act.target, S, H, i2, p, s, act)
    assert rep.passed, rep.diagnostics


def test_trivial_extension():
    N = pair_gpgd(gr.symmetric(3))
    Z = zero_gpgd()
    rep = verify_extension(Z, N, N, zero_morphism(Z, N), identity_morphism(N), identity_morphism(N))
    assert rep.passed
    rep = verify_extension(N, N, Z, identity_morphism(N), zero_morphism(N, Z), zero_morphism(Z, N))
    assert rep.passed


def test_non_split_z2_in_z4():
    N, G, H = (discrete_gpgd(gr.cyclic(k)) for k in (2, 4, 2))
    i = make_morphism(N, G, [0, 2])
    p = make_morphism(G, H, [0, 1, 0, 1])
    sections = list(iter_morphisms(H, G))
    assert len(sections) == 2
    for s in sections:
        rep = verify_extension(N, G, H, i, p, s)
        assert rep.diagnostics == ["ps = 1_H fails"]


def test_extension_detects_bad_maps():
    N, G, H = (discrete_gpgd(gr.cyclic(k)) for k in (2, 4, 2))
    rep = verify_extension(N, G, H, zero_morphism(N, G), zero_morphism(G, H), zero_morphism(H, G))
    assert "i is not a monomorphism" in rep.diagnostics
    assert "p is not an epimorphism" in rep.diagnostics


def test_phi_is_a_crossed_module_over_group_groupoids(member):
    rep = is_gpgd_xmod(inner_phi(member), identity_action(member))
    assert rep.passed, rep.diagnostics
    assert rep.diagnostics == []


def test_zero_map_with_trivial_action_on_abelian():
    G, H = pair_gpgd(gr.cyclic(3)), discrete_gpgd(gr.cyclic(2))
    assert is_gpgd_xmod(zero_morphism(G, H), trivial_action(H, G)).passed
    # the same over a non-abelian G fails the Peiffer identity
    S = pair_gpgd(gr.symmetric(3))
    rep = is_gpgd_xmod(zero_morphism(S, H), trivial_action(H, S))
    assert not rep.passed and rep.witness[0] == "CM2"


def test_non_normal_inclusion_is_not_a_crossed_module():
    S3 = discrete_gpgd(gr.symmetric(3))
    Z2 = discrete_gpgd(gr.cyclic(2))
    inc = make_morphism(Z2, S3, [0, 1])
    rep = is_gpgd_xmod(inc, trivial_action(S3, Z2))
    assert not rep.passed
    axiom, (b, a) = rep.witness
    assert axiom == "CM1"
    assert S3.arrows.conj(b, inc.f1.map[a]) != inc.f1.map[a]


def test_is_gpgd_xmod_type_check():
    G = pair_gpgd(gr.cyclic(3))
    with pytest.raises(ValidationError):
        is_gpgd_xmod(identity_morphism(G), identity_action(G))


def test_characteristic_examples():
    G = pair_gpgd(gr.symmetric(3))
    rep = characteristic_iff_hol_normal(G, commutator_subgpgd(G))
    assert rep.passed and rep.witness == {"characteristic": True, "normal_in_hol": True}
    K = discrete_gpgd(gr.klein4())
    rep = characteristic_iff_hol_normal(K, make_subgpgd(K, [0, 1]))
    assert rep.passed and rep.witness == {"characteristic": False, "normal_in_hol": False}
    assert characteristic_witness(K, make_subgpgd(K, [0, 1]))[0] == "aut"


def test_pair_z3_diagonal_fails_through_a_transformation():
    # the identity arrows of pair Z3 are kept by both automorphisms, but the
    # transformation x -> (x, -x) has components off the diagonal
    G = pair_gpgd(gr.cyclic(3))
    D = make_subgpgd(G, [0, 4, 8])
    assert characteristic_witness(G, D) == ("W", 1)
    assert actor_data(G).transfs[1].comp == (0, 5, 7)
    rep = characteristic_iff_hol_normal(G, D)
    assert rep.passed and rep.witness["characteristic"] is False


def test_trivial_and_whole_are_characteristic(member):
    for H in (trivial_subgpgd(member), whole_subgpgd(member)):
        assert is_characteristic(member, H)
        assert characteristic_iff_hol_normal(member, H).passed


def test_centre_and_derived_agree_across_catalog(member):
    from twogroups.actor import center_gpgd
    for H in (commutator_subgpgd(member), center_gpgd(member)):
        assert characteristic_iff_hol_normal(member, H).passed


def test_hol_image_embedding():
    G = pair_gpgd(gr.symmetric(3))
    D = commutator_subgpgd(G)
    img = hol_image(G, D)
    kw = actor_data(G).W.order
    assert img.arrows.members == tuple(a * kw for a in D.arrows.members)
    assert np.all(np.diff(img.arrows.members) > 0)
