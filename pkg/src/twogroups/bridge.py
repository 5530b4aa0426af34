"""Translation between group-groupoids and crossed modules, and the
comparison of the two actor constructions across it.

``phi_to_xmod`` sends G to ``(Ker d0, G0, d1|, x.a = 1_x + a - 1_x)``;
``psi_to_gpgd`` sends ``(A, B, alpha)`` to the group-groupoid on ``A x| B``
over ``B`` with ``d0(a, b) = b`` and ``d1(a, b) = alpha(a) + b``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from . import groups as gr
from .actor import actor_data, actor_gpgd
from .config import InternalError, ValidationError
from .gpgd import (GpGdMorphism, GroupGroupoid, NatTransf, horizontal_comp, identity_transf,
                   is_isomorphic, make_nat_transf, validate_gpgd)
from .groups import FiniteGroup, GroupHom
from .xmod import (CrossedModule, Derivation, XModMorphism, actor_xmod, actor_xmod_data,
                   make_derivation, make_xmod_morphism, theta_sigma, validate_xmod,
                   xmod_isomorphism)


@dataclass
class BridgeReport:
    direction: str
    passed: bool
    witness: Any = None
    diagnostics: list[str] = field(default_factory=list)

    def fail(self, msg: str) -> "BridgeReport":
        self.passed = False
        self.diagnostics.append(msg)
        return self


@dataclass(frozen=True, eq=False)
class PhiXMod:
    """``phi_to_xmod(G)`` with the embedding of the top group into ``G1``."""
    xmod: CrossedModule
    embed: GroupHom


def phi_to_xmod_data(G: GroupGroupoid) -> PhiXMod:
    K = gr.kernel(G.d0)
    A, emb = K.as_group(f"Ker d0({G.name})")
    pos = {x: i for i, x in enumerate(K.members)}
    alpha = GroupHom(A, G.objects, tuple(G.d1.map[a] for a in K.members))
    G1 = G.arrows
    action = np.array([[pos[G1.conj(G.unit(x), a)] for a in K.members]
                       for x in range(G.objects.order)], dtype=np.int64)
    X = validate_xmod(A, G.objects, alpha, action, f"phi({G.name})")
    return PhiXMod(X, emb)


def phi_to_xmod(G: GroupGroupoid) -> CrossedModule:
    return phi_to_xmod_data(G).xmod


def psi_to_gpgd(X: CrossedModule) -> GroupGroupoid:
    A, B = X.top, X.base
    P = gr.semidirect_product_groups(A, B, X.action, f"{A.name}:{B.name}")
    k = B.order
    d0 = GroupHom(P, B, tuple(i % k for i in range(P.order)))
    d1 = GroupHom(P, B, tuple(B.add(X.alpha.map[i // k], i % k) for i in range(P.order)))
    eps = GroupHom(B, P, tuple(range(k)))  # (0, b) has index b
    G = validate_gpgd(P, B, d0, d1, eps, f"psi({X.name})")
    # (a', b') o (a, b) = (a' + a, b) where b' = alpha(a) + b
    for i in range(P.order):
        a, b = divmod(i, k)
        bp = d1.map[i]
        for ap in range(A.order):
            j = ap * k + bp
            want = A.add(ap, a) * k + b
            if G.compose(j, i) != want:
                raise InternalError(f"psi composition differs at ({j}, {i})")
    return G


def roundtrip_check(value) -> BridgeReport:
    """``psi(phi(G)) ~ G`` or ``phi(psi(X)) ~ X``, with the isomorphism found."""
    if isinstance(value, GroupGroupoid):
        rep = BridgeReport("roundtrip_gpgd", True)
        back = psi_to_gpgd(phi_to_xmod(value))
        iso = is_isomorphic(back, value)
        if iso is None:
            return rep.fail("no isomorphism psi(phi(G)) -> G")
        rep.witness = iso
        return rep
    if isinstance(value, CrossedModule):
        rep = BridgeReport("roundtrip_xmod", True)
        back = phi_to_xmod(psi_to_gpgd(value))
        iso = xmod_isomorphism(back, value)
        if iso is None:
            return rep.fail("no isomorphism phi(psi(X)) -> X")
        rep.witness = iso
        return rep
    raise TypeError(f"cannot round-trip {type(value).__name__}")


# the actor comparison -----------------------------------------------------

@dataclass(frozen=True, eq=False)
class XiLambda:
    phi: PhiXMod
    kernel: tuple[int, ...]          # indices in W(G) with w_d0 = identity
    xi: dict                          # W index -> Derivation
    lam: dict                         # Aut(G) index -> XModMorphism


def xi_lambda(G: GroupGroupoid) -> XiLambda:
    """``xi(eta) = (x -> eta(x) - 1_x)`` on ``Ker w_d0`` and
    ``lambda(f) = <f1|_A, f0>`` on ``Aut(G)``, each value validated."""
    data = actor_data(G)
    P = phi_to_xmod_data(G)
    X = P.xmod
    pos = {a: i for i, a in enumerate(P.embed.map)}
    G1 = G.arrows
    ker = tuple(i for i in range(data.W.order) if data.gpgd.d0.map[i] == 0)
    xi = {}
    for i in ker:
        e = data.transfs[i]
        m = [pos[G1.add(e.comp[x], G1.neg(G.unit(x)))] for x in range(G.objects.order)]
        try:
            xi[i] = make_derivation(X, m)
        except ValidationError as exc:
            raise InternalError(f"xi({i}) is not a derivation: {exc}") from exc
    lam = {}
    for j, f in enumerate(data.auts):
        fA = [pos[f.f1.map[a]] for a in P.embed.map]
        try:
            lam[j] = make_xmod_morphism(X, X, fA, f.f0.map)
        except ValidationError as exc:
            raise InternalError(f"lambda({j}) is not a crossed module morphism: {exc}") from exc
    return XiLambda(P, ker, xi, lam)


def xi_inverse(G: GroupGroupoid, d: Derivation) -> NatTransf:
    """``eta_d(x) = d(x) + 1_x`` as a transformation ``1 => g``."""
    data = actor_data(G)
    P = phi_to_xmod_data(G)
    G1 = G.arrows
    comp = tuple(G1.add(P.embed.map[d.map[x]], G.unit(x)) for x in range(G.objects.order))
    for e in data.transfs:
        if e.comp == comp and data.aut_of(e.f) == 0:
            return make_nat_transf(e.f, e.g, comp)
    raise ValidationError("xi inverse", d.map, "no regular transformation has these components")


def kernel_w_xmod(G: GroupGroupoid) -> tuple[CrossedModule, tuple[int, ...]]:
    """``(Ker w_d0, Aut(G), w_d1|)`` with ``f.eta = 1_f o_h eta o_h 1_{f^-1}``."""
    data = actor_data(G)
    AG = data.gpgd
    K = gr.kernel(AG.d0)
    top, emb = K.as_group(f"Ker wd0({G.name})")
    pos = {x: i for i, x in enumerate(K.members)}
    alpha = GroupHom(top, AG.objects, tuple(AG.d1.map[i] for i in K.members))
    action = np.empty((AG.objects.order, top.order), dtype=np.int64)
    for fi, f in enumerate(data.auts):
        one_f = identity_transf(f)
        one_finv = identity_transf(f.inverse())
        for j, i in enumerate(K.members):
            v = horizontal_comp(horizontal_comp(one_f, data.transfs[i]), one_finv)
            action[fi, j] = pos[data.w_of(v)]
    return validate_xmod(top, AG.objects, alpha, action, f"KerW({G.name})"), K.members


def verify_isoact(G: GroupGroupoid) -> BridgeReport:
    """Check that ``<xi, lambda>`` is an isomorphism of crossed modules
    ``(Ker w_d0, Aut(G), w_d1|) -> (RD(B,A), Aut(A,B,alpha), Delta)``."""
    rep = BridgeReport("isoact", True)
    data = actor_data(G)
    XL = xi_lambda(G)
    KX, members = kernel_w_xmod(G)
    X = XL.phi.xmod
    act = actor_xmod_data(X)
    Y = act.xmod
    rd_index = {d.map: i for i, d in enumerate(act.rd)}
    aut_index = {f.key(): i for i, f in enumerate(act.auts)}
    try:
        xi_map = [rd_index[XL.xi[i].map] for i in members]
    except KeyError:
        return rep.fail("xi lands outside RD(B, A)")
    lam_map = [aut_index[XL.lam[j].key()] for j in range(data.Aut.order)]
    xi_h = GroupHom(KX.top, Y.top, tuple(xi_map))
    lam_h = GroupHom(KX.base, Y.base, tuple(lam_map))
    for nm, h in (("xi", xi_h), ("lambda", lam_h)):
        w = gr.hom_failure(h.src, h.dst, h.map)
        if w is not None:
            return rep.fail(f"{nm} is not a homomorphism at {w}")
        if not h.is_bijective():
            return rep.fail(f"{nm} is not bijective")
    # lambda . w_d1 = Delta . xi
    for j in range(KX.top.order):
        if lam_h.map[KX.alpha.map[j]] != Y.alpha.map[xi_h.map[j]]:
            return rep.fail(f"square fails at eta={members[j]}")
    # xi(f.eta) = lambda(f).xi(eta)
    for f in range(KX.base.order):
        for j in range(KX.top.order):
            if xi_h.map[KX.act(f, j)] != Y.act(lam_h.map[f], xi_h.map[j]):
                return rep.fail(f"equivariance fails at f={f}, eta={members[j]}")
    for i in members:
        d = XL.xi[i]
        if data.w_of(xi_inverse(G, d)) != i:
            return rep.fail(f"eta_d(x) = d(x) + 1_x does not invert xi at {i}")
    # Delta(d_eta) = <g1|_A, g0>
    for i in members:
        th, sg = theta_sigma(XL.xi[i])
        g = data.transfs[i].g
        if (th.map, sg.map) != XL.lam[data.aut_of(g)].key():
            return rep.fail(f"Delta(d_eta) != <g1|A, g0> at {i}")
    try:
        rep.witness = make_xmod_morphism(KX, Y, xi_h.map, lam_h.map)
    except ValidationError as exc:
        return rep.fail(f"witness does not revalidate: {exc}")
    return rep


def verify_actor_corollary(G: GroupGroupoid) -> BridgeReport:
    """``actor_xmod(phi(G)) ~ phi(A(G))``."""
    rep = BridgeReport("isoact", True)
    lhs = actor_xmod(phi_to_xmod(G))
    rhs = phi_to_xmod(actor_gpgd(G))
    iso = xmod_isomorphism(lhs, rhs)
    if iso is None:
        return rep.fail("actor crossed module not isomorphic to phi(A(G))")
    rep.witness = iso
    return rep
