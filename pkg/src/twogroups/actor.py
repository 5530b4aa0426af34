"""The actor group-groupoid ``A(G) = (W(G), Aut(G))`` and what hangs off it:
the canonical morphism ``phi: G -> A(G)``, centre, inner and outer actor,
completeness and the actor tower.
"""
from __future__ import annotations

import functools
import warnings
from dataclasses import dataclass

from . import groups as gr
from .config import InternalError, ValidationError, check_cap
from .gpgd import (GpGdMorphism, GroupGroupoid, NatTransf, SubGroupGroupoid, identity_morphism,
                   identity_transf, horizontal_comp, image_gpgd, iter_morphisms, kernel_gpgd,
                   make_morphism, make_subgpgd, nat_transfs_between, quotient_gpgd,
                   validate_gpgd, vertical_comp)
from .groups import FiniteGroup, GroupHom


@dataclass(frozen=True, eq=False)
class ActorData:
    """``A(G)`` together with the transformations and automorphisms its
    element indices stand for."""
    base: GroupGroupoid
    gpgd: GroupGroupoid
    auts: tuple[GpGdMorphism, ...]
    transfs: tuple[NatTransf, ...]
    aut_index: dict
    w_index: dict

    @property
    def W(self) -> FiniteGroup:
        return self.gpgd.arrows

    @property
    def Aut(self) -> FiniteGroup:
        return self.gpgd.objects

    def aut_of(self, f: GpGdMorphism) -> int:
        return self.aut_index[f.key()]

    def w_of(self, e: NatTransf) -> int:
        return self.w_index[e.key()]


def gpgd_aut_group(G: GroupGroupoid) -> tuple[FiniteGroup, list[GpGdMorphism]]:
    """Aut(G) under composition (``i + j`` is ``f_i . f_j``), identity first."""
    check_cap(G.arrows.order, f"Aut({G.name})")
    A, auts = _aut_group(G)
    return A, list(auts)


@functools.lru_cache(maxsize=None)
def _aut_group(G: GroupGroupoid):
    auts = sorted(iter_morphisms(G, G, iso=True), key=lambda f: f.f1.map)
    if auts[0] != identity_morphism(G):
        raise InternalError("identity functor is not first in Aut(G)")
    A = gr.group_from_elements(auts, lambda f: f.key(), lambda f, g: g.then(f),
                               f"Aut({G.name})")
    return A, tuple(auts)


def W_group(G: GroupGroupoid) -> tuple[FiniteGroup, list[NatTransf]]:
    """Regular natural transformations under horizontal composition.

    By the regularity criterion these are exactly the additive transformations
    between automorphisms.  Order: sorted by (components, f1, g1) with the
    identity ``x -> 1_x`` rotated to index 0.
    """
    check_cap(G.arrows.order, f"W({G.name})")
    W, ts = _w_group(G)
    return W, list(ts)


@functools.lru_cache(maxsize=None)
def _w_group(G: GroupGroupoid):
    _, auts = _aut_group(G)
    ts = []
    for f in auts:
        for g in auts:
            ts.extend(nat_transfs_between(f, g))
    ts.sort(key=lambda e: e.key())
    ident = identity_transf(identity_morphism(G))
    ts.remove(ident)
    ts.insert(0, ident)
    W = gr.group_from_elements(ts, lambda e: e.key(), horizontal_comp, f"W({G.name})")
    return W, tuple(ts)


def actor_data(G: GroupGroupoid) -> ActorData:
    check_cap(G.arrows.order, f"A({G.name})")
    return _actor(G)


@functools.lru_cache(maxsize=None)
def _actor(G: GroupGroupoid) -> ActorData:
    A, auts = _aut_group(G)
    W, ts = _w_group(G)
    aut_index = {f.key(): i for i, f in enumerate(auts)}
    w_index = {e.key(): i for i, e in enumerate(ts)}
    d0 = GroupHom(W, A, tuple(aut_index[e.f.key()] for e in ts))
    d1 = GroupHom(W, A, tuple(aut_index[e.g.key()] for e in ts))
    eps = GroupHom(A, W, tuple(w_index[identity_transf(f).key()] for f in auts))
    AG = validate_gpgd(W, A, d0, d1, eps, f"A({G.name})")
    # derived composition must be vertical composition
    for j, e in enumerate(ts):
        for i in range(W.order):
            if d0.map[i] == d1.map[j]:
                v = vertical_comp(ts[i], e)
                if w_index[v.key()] != AG.compose(i, j):
                    raise InternalError(f"A(G) composition differs from vertical at ({i}, {j})")
    return ActorData(G, AG, tuple(auts), tuple(ts), aut_index, w_index)


def actor_gpgd(G: GroupGroupoid) -> GroupGroupoid:
    return actor_data(G).gpgd


# inner morphism -----------------------------------------------------------

def inner_aut(G: GroupGroupoid, x: int) -> GpGdMorphism:
    """``f^x``: ``b -> 1_x + b - 1_x`` on arrows, ``z -> x + z - x`` on objects."""
    u = G.unit(x)
    f1 = GroupHom(G.arrows, G.arrows, tuple(G.arrows.conj(u, b) for b in range(G.arrows.order)))
    f0 = GroupHom(G.objects, G.objects,
                  tuple(G.objects.conj(x, z) for z in range(G.objects.order)))
    return GpGdMorphism(G, G, f1, f0)


def inner_transf(G: GroupGroupoid, a: int) -> NatTransf:
    """``eta^a: f^x => f^y`` with components ``z -> a + 1_z - a``."""
    comp = tuple(G.arrows.conj(a, G.unit(z)) for z in range(G.objects.order))
    return NatTransf(inner_aut(G, G.d0.map[a]), inner_aut(G, G.d1.map[a]), comp)


def inner_phi(G: GroupGroupoid) -> GpGdMorphism:
    """The canonical morphism ``phi: G -> A(G)``."""
    data = actor_data(G)
    try:
        m1 = [data.w_of(inner_transf(G, a)) for a in range(G.arrows.order)]
        m0 = [data.aut_of(inner_aut(G, x)) for x in range(G.objects.order)]
    except KeyError as exc:
        raise InternalError("inner transformation missing from the enumerated actor") from exc
    try:
        phi = make_morphism(G, data.gpgd, m1, m0)
    except ValidationError as exc:
        raise InternalError(f"phi is not a morphism: {exc}") from exc
    return phi


# centre -------------------------------------------------------------------

def _center_sets(G: GroupGroupoid):
    ident = identity_morphism(G)
    one = identity_transf(ident)
    ker0 = [x for x in range(G.objects.order) if inner_aut(G, x) == ident]
    ker1 = [a for a in range(G.arrows.order) if inner_transf(G, a) == one]
    T = G.arrows.table
    units = [G.unit(x) for x in range(G.objects.order)]
    disp1 = [a for a in range(G.arrows.order) if all(T[a, u] == T[u, a] for u in units)]
    disp0 = [x for x in range(G.objects.order)
             if all(T[a, G.unit(x)] == T[G.unit(x), a] for a in range(G.arrows.order))]
    return ker1, ker0, disp1, disp0


def center_divergence(G: GroupGroupoid) -> dict:
    """Differences between ``Ker phi`` and the elementwise centre conditions."""
    ker1, ker0, disp1, disp0 = _center_sets(G)
    out = {}
    if ker1 != disp1:
        out["arrows"] = (ker1, disp1)
    if ker0 != disp0:
        out["objects"] = (ker0, disp0)
    return out


def center_gpgd(G: GroupGroupoid) -> SubGroupGroupoid:
    """``Z(G) = Ker phi``, evaluated without materialising ``A(G)``."""
    ker1, ker0, disp1, disp0 = _center_sets(G)
    if ker1 != disp1 or ker0 != disp0:
        warnings.warn(f"centre of {G.name}: Ker phi differs from the elementwise condition "
                      f"(arrows {ker1} vs {disp1}, objects {ker0} vs {disp0})")
    Z = make_subgpgd(G, gr.Subgroup(G.arrows, tuple(ker1)), gr.Subgroup(G.objects, tuple(ker0)))
    if not Z.normal:
        raise InternalError("centre is not normal")
    return Z


def is_abelian(G: GroupGroupoid) -> bool:
    Z = center_gpgd(G)
    flag = Z.is_whole()
    if flag != G.arrows.is_abelian():
        raise InternalError("Z(G) = G disagrees with G1 abelian")
    return flag


# inner / outer actor ------------------------------------------------------

@dataclass(frozen=True)
class InnerOuter:
    inner: SubGroupGroupoid
    outer: GroupGroupoid
    projection: GpGdMorphism
    exact: dict


def exactness(G: GroupGroupoid, phi: GpGdMorphism, q: GpGdMorphism) -> dict:
    """Exactness of ``0 -> Z(G) -> G -> A(G) -> O(G) -> 0`` node by node."""
    Z = center_gpgd(G)
    _, inc = Z.as_gpgd(f"Z({G.name})")
    Zim = image_gpgd(inc)
    K = kernel_gpgd(phi)
    I = image_gpgd(phi)
    Kq = kernel_gpgd(q)
    return {
        "Z(G)": inc.f1.is_injective() and inc.f0.is_injective(),
        "G": Zim.arrows == K.arrows and Zim.objects == K.objects,
        "A(G)": I.arrows.members == Kq.arrows.members and I.objects.members == Kq.objects.members,
        "O(G)": q.f1.is_surjective() and q.f0.is_surjective(),
    }


def inner_outer_actor(G: GroupGroupoid) -> InnerOuter:
    data = actor_data(G)
    phi = inner_phi(G)
    I = image_gpgd(phi)
    if not I.normal:
        raise InternalError("I(G) is not normal in A(G)")
    O, q = quotient_gpgd(data.gpgd, I, f"O({G.name})")
    ex = exactness(G, phi, q)
    if not all(ex.values()):
        raise InternalError(f"four-term sequence not exact: {ex}")
    return InnerOuter(I, O, q, ex)


def is_complete(G: GroupGroupoid) -> bool:
    if not center_gpgd(G).is_trivial():
        return False
    phi = inner_phi(G)
    return phi.is_iso()


def actor_tower(G: GroupGroupoid, max_steps: int) -> list[GroupGroupoid]:
    """``G, A(G), A^2(G), ...`` up to the first complete stage or ``max_steps``."""
    if max_steps < 0:
        raise ValueError("max_steps must be non-negative")
    if not center_gpgd(G).is_trivial():
        raise ValidationError("trivial centre", None, f"Z({G.name}) is not trivial")
    stages = [G]
    while not is_complete(stages[-1]) and len(stages) - 1 < max_steps:
        nxt = actor_gpgd(stages[-1])
        if not center_gpgd(nxt).is_trivial():
            raise InternalError("Z(G) = 0 but Z(A(G)) != 0")
        stages.append(nxt)
    return stages
