"""Crossed modules over finite groups, derivations, the Whitehead monoid and
group, and the actor crossed module ``(RD(B,A), Aut(A,B,alpha), Delta)``.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

from . import groups as gr
from .config import InternalError, ValidationError, check_cap, config
from .groups import FiniteGroup, GroupHom, Subgroup


@dataclass(frozen=True, eq=False)
class CrossedModule:
    top: FiniteGroup
    base: FiniteGroup
    alpha: GroupHom
    action: np.ndarray  # action[b][a] = b.a
    name: str = "X"

    def act(self, b: int, a: int) -> int:
        return int(self.action[b, a])

    def __eq__(self, other):
        return (isinstance(other, CrossedModule) and self.top == other.top
                and self.base == other.base and self.alpha == other.alpha
                and np.array_equal(self.action, other.action))

    def __hash__(self):
        return hash((self.top, self.base, self.alpha.map, self.action.tobytes()))

    def __repr__(self):
        return f"CrossedModule({self.name!r}, |A|={self.top.order}, |B|={self.base.order})"


def xmod_failure(top: FiniteGroup, base: FiniteGroup, alpha, action) -> tuple[str, tuple] | None:
    action = np.asarray(action, dtype=np.int64)
    al = np.asarray(alpha.map if isinstance(alpha, GroupHom) else alpha, dtype=np.int64)
    w = gr.hom_failure(top, base, al)
    if w is not None:
        return "alpha homomorphism", w
    fail = gr.action_failure(top, base, action)
    if fail is not None:
        return fail
    B, A = base, top
    b = np.arange(B.order)[:, None]
    a = np.arange(A.order)[None, :]
    # CM1: alpha(b.a) = b + alpha(a) - b
    lhs = al[action]
    rhs = B.table[B.table[b, al[a]], B.inv[b]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        return "CM1", (int(bad[0][0]), int(bad[0][1]))
    # CM2: alpha(a).a1 = a + a1 - a
    a0 = np.arange(A.order)[:, None]
    lhs = action[al[a0], a]
    rhs = A.table[A.table[a0, a], A.inv[a0]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        return "CM2", (int(bad[0][0]), int(bad[0][1]))
    return None


def validate_xmod(top: FiniteGroup, base: FiniteGroup, alpha: GroupHom, action,
                  name: str = "X") -> CrossedModule:
    action = np.array(action, dtype=np.int64)
    if action.shape != (base.order, top.order):
        raise ValidationError("action shape", action.shape, f"expected {(base.order, top.order)}")
    fail = xmod_failure(top, base, alpha, action)
    if fail is not None:
        raise ValidationError(fail[0], fail[1])
    action.setflags(write=False)
    return CrossedModule(top, base, alpha, action, name)


def conjugation_table(G: FiniteGroup, members: tuple[int, ...]) -> np.ndarray:
    pos = {x: i for i, x in enumerate(members)}
    return np.array([[pos[G.conj(g, n)] for n in members] for g in range(G.order)], dtype=np.int64)


def xmod_from_normal_inclusion(G: FiniteGroup, N: Subgroup) -> CrossedModule:
    """Inclusion ``N -> G`` with ``G`` acting by conjugation."""
    w = N.normality_witness()
    if w is not None:
        raise ValidationError("normality", w)
    top, inc = N.as_group(f"{G.name}>{N.order}")
    return validate_xmod(top, G, inc, conjugation_table(G, N.members), f"{top.name}->{G.name}")


def identity_xmod(G: FiniteGroup) -> CrossedModule:
    return xmod_from_normal_inclusion(G, gr.whole(G))


def trivial_xmod(G: FiniteGroup) -> CrossedModule:
    """``0 -> G``."""
    top = gr.trivial_group()
    return validate_xmod(top, G, gr.zero_hom(top, G), np.zeros((G.order, 1), dtype=np.int64),
                         f"0->{G.name}")


def module_xmod(M: FiniteGroup, G: FiniteGroup, action) -> CrossedModule:
    """The zero map ``M -> G`` for a G-module ``M``."""
    return validate_xmod(M, G, gr.zero_hom(M, G), action, f"{M.name}-0->{G.name}")


def inner_xmod(G: FiniteGroup) -> CrossedModule:
    """``G -> Aut(G)`` sending g to conjugation, Aut(G) acting by evaluation."""
    A, auts = gr.automorphism_group(G)
    index = {f.map: i for i, f in enumerate(auts)}
    alpha = GroupHom(G, A, tuple(index[tuple(G.conj(g, x) for x in range(G.order))]
                                 for g in range(G.order)))
    action = np.array([f.map for f in auts], dtype=np.int64)
    return validate_xmod(G, A, alpha, action, f"{G.name}->Aut")


# morphisms ----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class XModMorphism:
    src: CrossedModule
    dst: CrossedModule
    fA: GroupHom
    fB: GroupHom

    def key(self) -> tuple:
        return (self.fA.map, self.fB.map)

    def __eq__(self, other):
        return isinstance(other, XModMorphism) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def then(self, other: "XModMorphism") -> "XModMorphism":
        return XModMorphism(self.src, other.dst, self.fA.then(other.fA), self.fB.then(other.fB))

    def is_iso(self) -> bool:
        return self.fA.is_bijective() and self.fB.is_bijective()

    def inverse(self) -> "XModMorphism":
        return XModMorphism(self.dst, self.src, self.fA.inverse(), self.fB.inverse())

    def __repr__(self):
        return f"XModMorphism(fA={list(self.fA.map)}, fB={list(self.fB.map)})"


def xmod_morphism_failure(X: CrossedModule, Y: CrossedModule, fA, fB) -> tuple[str, tuple] | None:
    fA = np.asarray(fA, dtype=np.int64)
    fB = np.asarray(fB, dtype=np.int64)
    w = gr.hom_failure(X.top, Y.top, fA)
    if w is not None:
        return "fA homomorphism", w
    w = gr.hom_failure(X.base, Y.base, fB)
    if w is not None:
        return "fB homomorphism", w
    bad = np.nonzero(fB[X.alpha.array] != Y.alpha.array[fA])[0]
    if len(bad):
        return "fB alpha = alpha' fA", (int(bad[0]),)
    # fA(b.a) = fB(b).fA(a)
    lhs = fA[X.action]
    rhs = Y.action[fB[:, None], fA[None, :]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        return "equivariance", (int(bad[0][0]), int(bad[0][1]))
    return None


def make_xmod_morphism(X: CrossedModule, Y: CrossedModule, fA, fB) -> XModMorphism:
    fA, fB = tuple(int(v) for v in fA), tuple(int(v) for v in fB)
    fail = xmod_morphism_failure(X, Y, fA, fB)
    if fail is not None:
        raise ValidationError(fail[0], fail[1])
    return XModMorphism(X, Y, GroupHom(X.top, Y.top, fA), GroupHom(X.base, Y.base, fB))


def identity_xmod_morphism(X: CrossedModule) -> XModMorphism:
    return XModMorphism(X, X, gr.identity_hom(X.top), gr.identity_hom(X.base))


def iter_xmod_isomorphisms(X: CrossedModule, Y: CrossedModule):
    for fB in gr.iter_homs(X.base, Y.base, bijective=True):
        for fA in gr.iter_homs(X.top, Y.top, bijective=True):
            if xmod_morphism_failure(X, Y, fA.map, fB.map) is None:
                yield XModMorphism(X, Y, fA, fB)


def xmod_isomorphism(X: CrossedModule, Y: CrossedModule) -> XModMorphism | None:
    check_cap(max(X.top.order, X.base.order), "crossed module isomorphism search")
    return next(iter_xmod_isomorphisms(X, Y), None)


# derivations --------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Derivation:
    parent: CrossedModule
    map: tuple[int, ...]

    def __call__(self, b: int) -> int:
        return self.map[b]

    def __eq__(self, other):
        return isinstance(other, Derivation) and self.map == other.map and self.parent == other.parent

    def __hash__(self):
        return hash(self.map)

    def __repr__(self):
        return f"Derivation({list(self.map)})"


def derivation_failure(X: CrossedModule, m) -> tuple[int, int] | None:
    """First ``(b, b1)`` with ``d(b + b1) != d(b) + b.d(b1)``, or None."""
    m = np.asarray(m, dtype=np.int64)
    B, A = X.base, X.top
    lhs = m[B.table]
    rhs = A.table[m[:, None], X.action[np.arange(B.order)[:, None], m[None, :]]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        return int(bad[0][0]), int(bad[0][1])
    return None


def make_derivation(X: CrossedModule, m) -> Derivation:
    m = tuple(int(v) for v in m)
    if len(m) != X.base.order:
        raise ValidationError("derivation totality", (len(m),))
    w = derivation_failure(X, m)
    if w is not None:
        raise ValidationError("derivation law", w)
    return Derivation(X, m)


def derivations(X: CrossedModule) -> list[Derivation]:
    """All derivations ``B -> A`` sorted by map; the zero map is first.

    Values on a generating set of ``B`` are chosen freely and propagated with
    ``d(b + g) = d(b) + b.d(g)``; survivors are re-verified on all pairs.
    """
    gens = gr.generating_set(X.base)
    check_cap(X.top.order ** len(gens), f"derivations of {X.name}", config.search_cap)
    return list(_derivations(X))


@functools.lru_cache(maxsize=None)
def _derivations(X: CrossedModule) -> tuple[Derivation, ...]:
    B, A = X.base, X.top
    gens = gr.generating_set(B)
    step = lambda b, vb, img: A.add(vb, X.act(b, img))
    out = []
    for imgs in itertools.product(range(A.order), repeat=len(gens)):
        vals = gr.extend_on_generators(B, gens, imgs, step)
        if vals is None:
            continue
        m = tuple(vals[b] for b in range(B.order))
        if derivation_failure(X, m) is not None:
            raise InternalError("propagated derivation fails the derivation law")
        out.append(Derivation(X, m))
    out.sort(key=lambda d: d.map)
    return tuple(out)


def theta_sigma(d: Derivation) -> tuple[GroupHom, GroupHom]:
    """``theta_d(a) = d(alpha a) + a`` on A and ``sigma_d(b) = alpha(d b) + b`` on B."""
    X = d.parent
    A, B, al = X.top, X.base, X.alpha.map
    th = [A.add(d.map[al[a]], a) for a in range(A.order)]
    sg = [B.add(al[d.map[b]], b) for b in range(B.order)]
    try:
        theta = gr.validate_hom(A, A, th)
        sigma = gr.validate_hom(B, B, sg)
    except ValidationError as exc:
        raise InternalError(f"theta/sigma of {d} not endomorphisms: {exc}") from exc
    fail = xmod_morphism_failure(X, X, theta.map, sigma.map)
    if fail is not None:
        raise InternalError(f"(theta, sigma) is not a crossed module morphism: {fail}")
    return theta, sigma


def whitehead_mul(d1: Derivation, d2: Derivation) -> Derivation:
    """``(d1 o d2)(b) = d1(sigma_{d2}(b)) + d2(b)``."""
    if d1.parent != d2.parent:
        raise ValidationError("same crossed module", None, "derivations have different parents")
    X = d1.parent
    A = X.top
    _, s2 = theta_sigma(d2)
    m = tuple(A.add(d1.map[s2.map[b]], d2.map[b]) for b in range(X.base.order))
    t1, _ = theta_sigma(d1)
    alt = tuple(A.add(t1.map[d2.map[b]], d1.map[b]) for b in range(X.base.order))
    if m != alt:
        raise InternalError("the two Whitehead product formulas disagree")
    return Derivation(X, m)


@dataclass(frozen=True)
class RegularityRow:
    derivation: Derivation
    unit: bool
    theta_bijective: bool
    sigma_bijective: bool


def regularity_table(X: CrossedModule) -> list[RegularityRow]:
    """For each derivation: is it a unit of the monoid, is theta_d bijective,
    is sigma_d bijective."""
    ders = derivations(X)
    zero = ders[0]
    index = {d.map: i for i, d in enumerate(ders)}
    n = len(ders)
    prod = [[index[whitehead_mul(ders[i], ders[j]).map] for j in range(n)] for i in range(n)]
    rows = []
    for i, d in enumerate(ders):
        unit = any(prod[i][j] == 0 and prod[j][i] == 0 for j in range(n))
        th, sg = theta_sigma(d)
        rows.append(RegularityRow(d, unit, th.is_bijective(), sg.is_bijective()))
    assert zero.map == (0,) * X.base.order
    return rows


def regular_derivations(X: CrossedModule) -> tuple[FiniteGroup, list[Derivation]]:
    """The Whitehead group RD(B, A): units of the derivation monoid.

    Membership is decided three ways (unit of the monoid, theta_d bijective,
    sigma_d bijective) and the three must agree.
    """
    derivations(X)  # enforces the search cap
    G, rd = _regular_derivations(X)
    return G, list(rd)


@functools.lru_cache(maxsize=None)
def _regular_derivations(X: CrossedModule):
    rows = regularity_table(X)
    for r in rows:
        if not (r.unit == r.theta_bijective == r.sigma_bijective):
            raise InternalError(f"regularity criteria disagree on {r.derivation}")
    rd = [r.derivation for r in rows if r.unit]
    G = gr.group_from_elements(rd, lambda d: d.map, whitehead_mul, f"RD({X.name})")
    return G, tuple(rd)


def xmod_aut_group(X: CrossedModule) -> tuple[FiniteGroup, list[XModMorphism]]:
    """Aut(A, B, alpha) filtered out of Aut(A) x Aut(B); ``i + j`` is ``f_i . f_j``."""
    check_cap(max(X.top.order, X.base.order), f"Aut({X.name})")
    G, auts = _xmod_aut_group(X)
    return G, list(auts)


@functools.lru_cache(maxsize=None)
def _xmod_aut_group(X: CrossedModule):
    _, autA = gr.automorphism_group(X.top)
    _, autB = gr.automorphism_group(X.base)
    out = []
    for fA in autA:
        for fB in autB:
            if xmod_morphism_failure(X, X, fA.map, fB.map) is None:
                out.append(XModMorphism(X, X, fA, fB))
    out.sort(key=lambda f: f.key())
    if out[0] != identity_xmod_morphism(X):
        raise InternalError("identity is not first in Aut(X)")
    G = gr.group_from_elements(out, lambda f: f.key(), lambda f, g: g.then(f), f"Aut({X.name})")
    return G, tuple(out)


@dataclass(frozen=True, eq=False)
class XModActor:
    """The actor crossed module plus the derivations and automorphisms that
    its element indices stand for."""
    xmod: CrossedModule
    rd: tuple[Derivation, ...]
    auts: tuple[XModMorphism, ...]


def actor_xmod_data(X: CrossedModule) -> XModActor:
    RD, _ = regular_derivations(X)
    AutX, _ = xmod_aut_group(X)
    return _actor_xmod(X, RD, AutX)


@functools.lru_cache(maxsize=None)
def _actor_xmod(X: CrossedModule, RD: FiniteGroup, AutX: FiniteGroup) -> XModActor:
    _, rd = _regular_derivations(X)
    _, auts = _xmod_aut_group(X)
    rd_index = {d.map: i for i, d in enumerate(rd)}
    aut_index = {f.key(): i for i, f in enumerate(auts)}
    delta = []
    for d in rd:
        th, sg = theta_sigma(d)
        delta.append(aut_index[(th.map, sg.map)])
    action = np.empty((AutX.order, RD.order), dtype=np.int64)
    for i, f in enumerate(auts):
        ginv = f.fB.inverse()
        for j, d in enumerate(rd):
            m = tuple(f.fA.map[d.map[ginv.map[b]]] for b in range(X.base.order))
            action[i, j] = rd_index[m]
    alpha = GroupHom(RD, AutX, tuple(delta))
    A = validate_xmod(RD, AutX, alpha, action, f"Act({X.name})")
    return XModActor(A, tuple(rd), tuple(auts))


def actor_xmod(X: CrossedModule) -> CrossedModule:
    """``(RD(B,A), Aut(A,B,alpha), Delta)`` with ``<f,g>.d = f d g^{-1}``."""
    return actor_xmod_data(X).xmod
