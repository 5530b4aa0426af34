"""The eleven acceptance criteria, one test each.

Each test prints ``criterion N <topic>: PASS`` or ``FAIL`` and records the
line for the terminal summary, so the verdicts show even without ``-s``.
"""
import itertools

import pytest

from twogroups import groups as gr
from twogroups.actions import (characteristic_iff_hol_normal, compatibility_failure,
                               conjugation_action, holomorph, identity_action,
                               internal_semidirect, is_gpgd_xmod)
from twogroups.actor import (W_group, actor_gpgd, actor_tower, center_gpgd, gpgd_aut_group,
                             inner_outer_actor, inner_phi, is_complete)
from twogroups.bridge import (phi_to_xmod, psi_to_gpgd, roundtrip_check, verify_actor_corollary,
                              verify_isoact)
from twogroups.catalog import CATALOG_SPECS, build_gpgd, build_group, build_xmod
from twogroups.config import ValidationError, config
from twogroups.gpgd import (abelianization, commutator_subgpgd, discrete_gpgd, interchange_failure,
                            is_isomorphic, make_morphism, make_subgpgd, pair_gpgd,
                            validate_gpgd, whole_subgpgd, _composable_pairs)
from twogroups.groups import GroupHom
from twogroups.xmod import (derivations, make_xmod_morphism, regular_derivations,
                            regularity_table, whitehead_mul)
from conftest import VERDICTS
from oracles import (brute_automorphisms, brute_compatible, brute_derivations,
                     brute_isomorphic_groups)

CATALOG = {s: build_gpgd(s) for s in CATALOG_SPECS}
Z2_IN_Z4 = "normal-xmod:z4:2"
Z3_ID = "identity-xmod:z3"  # (Z3, Z3, id, trivial): conjugation in Z3 is trivial


def catalog_xmods():
    xs = {Z2_IN_Z4: build_xmod(Z2_IN_Z4), Z3_ID: build_xmod(Z3_ID)}
    xs.update({f"phi:{s}": phi_to_xmod(G) for s, G in CATALOG.items()})
    return xs


def verdict(n: int, topic: str, check):
    try:
        check()
    except BaseException:
        line = f"criterion {n:2d} {topic}: FAIL"
        print(line)
        VERDICTS.append(line)
        raise
    line = f"criterion {n:2d} {topic}: PASS"
    print(line)
    VERDICTS.append(line)


# 1 ---------------------------------------------------------------------------

def check_validator():
    for spec, G in CATALOG.items():
        validate_gpgd(G.arrows, G.objects, G.d0, G.d1, G.eps, spec)
        P = len(_composable_pairs(G)[0])
        assert P * P <= config.interchange_limit, f"{spec} would skip the literal interchange scan"
        assert interchange_failure(G) is None, spec
    for spec, G in CATALOG.items():
        if G.arrows.order == 1:
            continue
        for which in ("d0", "d1", "eps"):
            h = getattr(G, which)
            for i in range(1, h.src.order):
                m = list(h.map)
                m[i] = (m[i] + 1) % h.dst.order
                maps = {"d0": G.d0, "d1": G.d1, "eps": G.eps}
                maps[which] = GroupHom(h.src, h.dst, tuple(m))
                with pytest.raises(ValidationError) as ei:
                    validate_gpgd(G.arrows, G.objects, maps["d0"], maps["d1"], maps["eps"])
                assert ei.value.witness is not None, (spec, which, i)
        n = G.arrows.order
        for i, j in itertools.product(range(1, n), repeat=2):
            t = G.arrows.table.copy()
            t[i, j] = (t[i, j] + 1) % n
            with pytest.raises(ValidationError) as ei:
                gr.FiniteGroup(t)
            assert ei.value.witness is not None


def test_criterion_01_validator_suite():
    verdict(1, "validator suite and mutation rejection", check_validator)


# 2 ---------------------------------------------------------------------------

def check_derivation_oracle():
    checked = 0
    for name, X in catalog_xmods().items():
        if X.top.order ** X.base.order > config.oracle_limit:
            continue
        assert [d.map for d in derivations(X)] == brute_derivations(X), name
        checked += 1
    assert checked >= 2
    assert len(brute_derivations(build_xmod(Z2_IN_Z4))) == 2
    assert len(brute_derivations(build_xmod(Z3_ID))) == 3
    assert len(derivations(build_xmod(Z2_IN_Z4))) == 2
    assert len(derivations(build_xmod(Z3_ID))) == 3


def test_criterion_02_derivation_oracle():
    verdict(2, "derivations equal brute force", check_derivation_oracle)


# 3 ---------------------------------------------------------------------------

def check_whitehead():
    for name, X in catalog_xmods().items():
        ds = derivations(X)
        maps = [d.map for d in ds]
        prod = {(a.map, b.map): whitehead_mul(a, b).map for a in ds for b in ds}
        zero = (0,) * X.base.order
        assert zero in maps
        for a in maps:
            assert prod[zero, a] == a == prod[a, zero]
            for b in maps:
                assert prod[a, b] in maps
                for c in maps:
                    assert prod[prod[a, b], c] == prod[a, prod[b, c]], name
        units = {a for a in maps if any(prod[a, b] == zero == prod[b, a] for b in maps)}
        for row in regularity_table(X):
            assert row.unit == row.theta_bijective == row.sigma_bijective, name
            assert row.unit == (row.derivation.map in units)
    assert regular_derivations(build_xmod(Z2_IN_Z4))[0].order == 2
    assert regular_derivations(build_xmod(Z3_ID))[0].order == 2


def test_criterion_03_whitehead_structure():
    verdict(3, "Whitehead monoid and regularity", check_whitehead)


# 4 ---------------------------------------------------------------------------

def check_counts():
    for spec in ("z2", "z3", "k4", "s3"):
        G = build_group(spec)
        n = len(brute_automorphisms(G.table))
        assert W_group(pair_gpgd(G))[0].order == n * n, spec
        assert gpgd_aut_group(pair_gpgd(G))[0].order == n, spec
        assert W_group(discrete_gpgd(G))[0].order == n, spec
    assert W_group(pair_gpgd(gr.symmetric(3)))[0].order == 36


def test_criterion_04_example_counts():
    verdict(4, "W and Aut counts for pair and discrete", check_counts)


# 5 ---------------------------------------------------------------------------

def check_round_trips():
    for spec, G in CATALOG.items():
        rep = roundtrip_check(G)
        assert rep.passed, (spec, rep.diagnostics)
        w = rep.witness
        assert w.src == psi_to_gpgd(phi_to_xmod(G)) and w.dst == G and w.is_iso()
        make_morphism(w.src, w.dst, w.f1.map, w.f0.map)
    for name, X in catalog_xmods().items():
        rep = roundtrip_check(X)
        assert rep.passed, (name, rep.diagnostics)
        w = rep.witness
        assert w.is_iso()
        make_xmod_morphism(w.src, w.dst, w.fA.map, w.fB.map)


def test_criterion_05_round_trips():
    verdict(5, "phi/psi round trips with witnesses", check_round_trips)


# 6 ---------------------------------------------------------------------------

def check_isoact():
    for spec, G in CATALOG.items():
        rep = verify_isoact(G)
        assert rep.passed, (spec, rep.diagnostics)
        cor = verify_actor_corollary(G)
        assert cor.passed, (spec, cor.diagnostics)


def test_criterion_06_isoact():
    verdict(6, "<xi, lambda> isomorphism and actor corollary", check_isoact)


# 7 ---------------------------------------------------------------------------

def check_centre():
    assert center_gpgd(discrete_gpgd(gr.symmetric(3))).is_trivial()
    assert center_gpgd(pair_gpgd(gr.cyclic(3))).is_whole()
    for spec, G in CATALOG.items():
        Z = center_gpgd(G)
        assert Z.normal
        T = G.arrows.table
        for z in Z.arrows.members:
            for a in range(G.arrows.order):
                assert T[a, z] == T[z, a], spec
        Q = abelianization(G)
        assert Q.arrows.is_abelian() and Q.objects.is_abelian(), spec
    assert is_isomorphic(abelianization(pair_gpgd(gr.symmetric(3))),
                         pair_gpgd(gr.cyclic(2))) is not None


def test_criterion_07_center_and_abelianization():
    verdict(7, "centre, commutation and abelianization", check_centre)


# 8 ---------------------------------------------------------------------------

def check_exact():
    for spec, G in CATALOG.items():
        IO = inner_outer_actor(G)
        assert IO.exact == {"Z(G)": True, "G": True, "A(G)": True, "O(G)": True}, spec


def test_criterion_08_exact_sequence():
    verdict(8, "0 -> Z(G) -> G -> A(G) -> O(G) -> 0 exact", check_exact)


# 9 ---------------------------------------------------------------------------

def check_completeness():
    for G in (pair_gpgd(gr.symmetric(3)), discrete_gpgd(gr.symmetric(3))):
        assert center_gpgd(G).is_trivial()
        assert center_gpgd(actor_gpgd(G)).is_trivial()
        assert is_complete(G)
        assert len(actor_tower(G, 3)) == 1
    D = discrete_gpgd(gr.cyclic(3))
    assert not is_complete(D)
    assert set(inner_phi(D).f0.map) == {0}
    assert not center_gpgd(D).is_trivial()
    with pytest.raises(ValidationError) as ei:
        actor_tower(D, 3)
    assert ei.value.axiom == "trivial centre"


def test_criterion_09_trivial_centre_and_completeness():
    verdict(9, "trivial centre, completeness and towers", check_completeness)


# 10 --------------------------------------------------------------------------

def check_actions():
    for spec, G in CATALOG.items():
        act = identity_action(G)
        assert compatibility_failure(act.actor_src, G, act.induced1, act.induced0) is None, spec
        assert brute_compatible(act.actor_src, G, act.induced1, act.induced0), spec
        for N in (whole_subgpgd(G), commutator_subgpgd(G)):
            c = conjugation_action(G, N)
            assert compatibility_failure(c.actor_src, c.target, c.induced1, c.induced0) is None
            assert brute_compatible(c.actor_src, c.target, c.induced1, c.induced0), spec
    P = pair_gpgd(gr.symmetric(3))
    M = make_subgpgd(P, gr.generate(P.arrows, [6, 1]))
    rep = internal_semidirect(P, commutator_subgpgd(P), M)
    assert rep.passed and rep.witness.is_iso(), rep.diagnostics
    rep = is_gpgd_xmod(inner_phi(P), identity_action(P))
    assert rep.passed and not rep.diagnostics


def test_criterion_10_actions_and_semidirect():
    verdict(10, "compatibility, internal semidirect, phi crossed module", check_actions)


# 11 --------------------------------------------------------------------------

def check_holomorph():
    H = holomorph(discrete_gpgd(gr.cyclic(3)))
    assert H.arrows.order == 6
    assert brute_isomorphic_groups(H.arrows.table, gr.symmetric(3).table)
    P = pair_gpgd(gr.symmetric(3))
    rep = characteristic_iff_hol_normal(P, commutator_subgpgd(P))
    assert rep.passed and rep.witness == {"characteristic": True, "normal_in_hol": True}
    K = discrete_gpgd(gr.klein4())
    rep = characteristic_iff_hol_normal(K, make_subgpgd(K, [0, 1]))
    assert rep.passed and rep.witness == {"characteristic": False, "normal_in_hol": False}


def test_criterion_11_holomorph_and_characteristic():
    verdict(11, "holomorph and characteristic iff normal in Hol", check_holomorph)
