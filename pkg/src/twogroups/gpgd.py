"""Group-groupoids (internal categories in groups) and their morphisms.

A group-groupoid stores only the arrow group ``G1``, the object group ``G0``
and the structure homomorphisms ``d0`` (source), ``d1`` (target) and ``eps``
(identity arrows).  Composition is never stored: for ``a: x -> y`` and
``b: y -> z`` it is ``b o a = b - 1_y + a``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import groups as gr
from .config import InternalError, ValidationError, check_cap, config
from .groups import FiniteGroup, GroupHom, Subgroup


@dataclass(frozen=True, eq=False)
class GroupGroupoid:
    arrows: FiniteGroup
    objects: FiniteGroup
    d0: GroupHom
    d1: GroupHom
    eps: GroupHom
    name: str = "G"

    def __eq__(self, other):
        return (isinstance(other, GroupGroupoid) and self.arrows == other.arrows
                and self.objects == other.objects and self.d0 == other.d0
                and self.d1 == other.d1 and self.eps == other.eps)

    def __hash__(self):
        return hash((self.arrows, self.objects, self.d0.map, self.d1.map, self.eps.map))

    def __repr__(self):
        return f"GroupGroupoid({self.name!r}, |G1|={self.arrows.order}, |G0|={self.objects.order})"

    def unit(self, x: int) -> int:
        """The identity arrow ``1_x``."""
        return self.eps.map[x]

    def compose(self, b: int, a: int) -> int:
        """``b o a`` for ``a: x -> y``, ``b: y -> z``."""
        y = self.d1.map[a]
        if self.d0.map[b] != y:
            raise ValidationError("composable", (b, a),
                                  f"d0({b}) = {self.d0.map[b]} but d1({a}) = {y}")
        G1 = self.arrows
        return G1.sum(b, G1.neg(self.unit(y)), a)

    def compose_alt(self, b: int, a: int) -> int:
        """``a - 1_y + b``; agrees with :meth:`compose` in a group-groupoid."""
        y = self.d1.map[a]
        G1 = self.arrows
        return G1.sum(a, G1.neg(self.unit(y)), b)

    def arrow_inverse(self, a: int) -> int:
        """``1_x - a + 1_y`` for ``a: x -> y``."""
        G1 = self.arrows
        return G1.sum(self.unit(self.d0.map[a]), G1.neg(a), self.unit(self.d1.map[a]))

    def hom_set(self, x: int, y: int) -> list[int]:
        return [a for a in range(self.arrows.order)
                if self.d0.map[a] == x and self.d1.map[a] == y]

    def is_zero(self) -> bool:
        return self.arrows.order == 1


# composition as numpy arrays -----------------------------------------------

def _composable_pairs(G: GroupGroupoid) -> tuple[np.ndarray, np.ndarray]:
    """Arrays ``(B, A)`` listing every pair with ``d0(B) = d1(A)``."""
    d0 = G.d0.array
    d1 = G.d1.array
    order = np.argsort(d0, kind="stable")
    counts = np.bincount(d0, minlength=G.objects.order)
    if not np.all(counts == counts[0]):
        raise ValidationError("source-fibres", None, "d0 fibres have unequal sizes")
    fib = order.reshape(G.objects.order, counts[0])
    A = np.repeat(np.arange(G.arrows.order), counts[0])
    B = fib[d1].reshape(-1)
    return B, A


def _compose_arr(G: GroupGroupoid, B: np.ndarray, A: np.ndarray) -> np.ndarray:
    T, inv = G.arrows.table, G.arrows.inv
    units = G.eps.array
    return T[T[B, inv[units[G.d1.array[A]]]], A]


def validate_gpgd(arrows: FiniteGroup, objects: FiniteGroup, d0: GroupHom, d1: GroupHom,
                  eps: GroupHom, name: str = "G") -> GroupGroupoid:
    """Check every group-groupoid axiom exhaustively and return the value.

    Raises :class:`ValidationError` naming the first failing axiom.
    """
    for h, s, t, nm in ((d0, arrows, objects, "d0"), (d1, arrows, objects, "d1"),
                        (eps, objects, arrows, "eps")):
        if h.src != s or h.dst != t:
            raise ValidationError("structure-map-type", nm)
        w = gr.hom_failure(s, t, h.map)
        if w is not None:
            raise ValidationError(f"{nm}-homomorphism", w)
    G = GroupGroupoid(arrows, objects, d0, d1, eps, name)
    for x in range(objects.order):
        if d0.map[eps.map[x]] != x or d1.map[eps.map[x]] != x:
            raise ValidationError("(i) d0 eps = d1 eps = 1", (x,))
    T = arrows.table
    Bc, Ac = _composable_pairs(G)
    m1 = _compose_arr(G, Bc, Ac)
    # b - 1_y + a == a - 1_y + b
    m2 = T[T[Ac, arrows.inv[G.eps.array[G.d1.array[Ac]]]], Bc]
    bad = np.nonzero(m1 != m2)[0]
    if len(bad):
        k = bad[0]
        raise ValidationError("composition formulas agree", (int(Bc[k]), int(Ac[k])))
    d0a, d1a = d0.array, d1.array
    bad = np.nonzero((d0a[m1] != d0a[Ac]) | (d1a[m1] != d1a[Bc]))[0]
    if len(bad):
        k = bad[0]
        raise ValidationError("(ii) endpoints of composite", (int(Bc[k]), int(Ac[k])))
    units = eps.array
    ar = np.arange(arrows.order)
    left = _compose_arr(G, ar, units[d0a])
    right = _compose_arr(G, units[d1a], ar)
    bad = np.nonzero((left != ar) | (right != ar))[0]
    if len(bad):
        raise ValidationError("(iv) identity law", (int(bad[0]),))
    # associativity: (c o b) o a == c o (b o a) on composable triples
    k = len(Bc) // arrows.order
    fib_by_src = np.empty((objects.order, k), dtype=np.int64)
    order = np.argsort(d0a, kind="stable")
    fib_by_src[:] = order.reshape(objects.order, k)
    Cc = fib_by_src[d1a[Bc]].reshape(-1)
    Bt = np.repeat(Bc, k)
    At = np.repeat(Ac, k)
    lhs = _compose_arr(G, _compose_arr(G, Cc, Bt), At)
    rhs = _compose_arr(G, Cc, _compose_arr(G, Bt, At))
    bad = np.nonzero(lhs != rhs)[0]
    if len(bad):
        j = bad[0]
        raise ValidationError("(iii) associativity", (int(Cc[j]), int(Bt[j]), int(At[j])))
    inv_arr = T[T[units[d0a], arrows.inv], units[d1a]]
    bad = np.nonzero((_compose_arr(G, inv_arr, ar) != units[d0a])
                     | (_compose_arr(G, ar, inv_arr) != units[d1a]))[0]
    if len(bad):
        raise ValidationError("groupoid inverse", (int(bad[0]),))
    w = kernel_commutation_failure(G)
    if w is not None:
        raise ValidationError("Ker d0 commutes with Ker d1", w)
    w = interchange_failure(G)
    if w is not None:
        raise ValidationError("interchange law", w)
    return G


def kernel_commutation_failure(G: GroupGroupoid) -> tuple[int, int] | None:
    K0 = [a for a in range(G.arrows.order) if G.d0.map[a] == 0]
    K1 = [a for a in range(G.arrows.order) if G.d1.map[a] == 0]
    T = G.arrows.table
    for a in K0:
        for b in K1:
            if T[a, b] != T[b, a]:
                return a, b
    return None


def interchange_failure(G: GroupGroupoid) -> tuple | None:
    """First quadruple ``(b, a, d, c)`` breaking ``(b o a) + (d o c) = (b + d) o (a + c)``.

    Scans every pair of composable pairs when there are at most
    ``config.interchange_limit`` of them.  Above that it scans
    ``[Ker d0, Ker d1]``: with ``b o a = b - 1_y + a`` the law reduces exactly
    to ``(-1_y + a) + (d - 1_y') = (d - 1_y') + (-1_y + a)``, and those two
    terms range over all of ``Ker d1`` and ``Ker d0``.
    """
    Bc, Ac = _composable_pairs(G)
    P = len(Bc)
    T = G.arrows.table
    if P * P > config.interchange_limit:
        w = kernel_commutation_failure(G)
        if w is None:
            return None
        v, u = w  # u in Ker d1, v in Ker d0: take a = u, b = 1_0, c = 0, d = v
        return (G.unit(0), u, v, G.unit(0))
    m = _compose_arr(G, Bc, Ac)
    for i in range(P):
        lhs = T[m[i], m]
        rhs = _compose_arr(G, T[Bc[i], Bc], T[Ac[i], Ac])
        bad = np.nonzero(lhs != rhs)[0]
        if len(bad):
            j = bad[0]
            return int(Bc[i]), int(Ac[i]), int(Bc[j]), int(Ac[j])
    return None


# constructions ------------------------------------------------------------

def discrete_gpgd(G: FiniteGroup) -> GroupGroupoid:
    """``(G, G)`` with only identity arrows."""
    i = gr.identity_hom(G)
    return validate_gpgd(G, G, i, i, i, f"disc({G.name})")


def pair_gpgd(G: FiniteGroup) -> GroupGroupoid:
    """``(G x G, G)`` with exactly one arrow ``(x, y): x -> y`` for each pair."""
    n = G.order
    P = gr.direct_product(G, G, f"{G.name}x{G.name}")
    d0 = GroupHom(P, G, tuple(i // n for i in range(n * n)))
    d1 = GroupHom(P, G, tuple(i % n for i in range(n * n)))
    eps = GroupHom(G, P, tuple(x * n + x for x in range(n)))
    return validate_gpgd(P, G, d0, d1, eps, f"pair({G.name})")


def zero_gpgd() -> GroupGroupoid:
    return discrete_gpgd(gr.trivial_group("0"))


# morphisms ----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GpGdMorphism:
    src: GroupGroupoid
    dst: GroupGroupoid
    f1: GroupHom
    f0: GroupHom

    def __eq__(self, other):
        return (isinstance(other, GpGdMorphism) and self.f1 == other.f1
                and self.f0 == other.f0 and self.src == other.src and self.dst == other.dst)

    def __hash__(self):
        return hash((self.f1.map, self.f0.map))

    def key(self) -> tuple:
        return self.f1.map

    def then(self, other: "GpGdMorphism") -> "GpGdMorphism":
        """``other . self``."""
        return GpGdMorphism(self.src, other.dst, self.f1.then(other.f1), self.f0.then(other.f0))

    def is_iso(self) -> bool:
        return self.f1.is_bijective() and self.f0.is_bijective()

    def inverse(self) -> "GpGdMorphism":
        return GpGdMorphism(self.dst, self.src, self.f1.inverse(), self.f0.inverse())

    def __repr__(self):
        return f"GpGdMorphism({self.src.name}->{self.dst.name}, f1={list(self.f1.map)})"


def morphism_failure(G: GroupGroupoid, H: GroupGroupoid, f1, f0) -> tuple[str, tuple] | None:
    f1 = np.asarray(f1, dtype=np.int64)
    f0 = np.asarray(f0, dtype=np.int64)
    w = gr.hom_failure(G.arrows, H.arrows, f1)
    if w is not None:
        return "f1 homomorphism", w
    w = gr.hom_failure(G.objects, H.objects, f0)
    if w is not None:
        return "f0 homomorphism", w
    for nm, s, t in (("d0 f1 = f0 d0", G.d0.array, H.d0.array), ("d1 f1 = f0 d1", G.d1.array, H.d1.array)):
        bad = np.nonzero(t[f1] != f0[s])[0]
        if len(bad):
            return nm, (int(bad[0]),)
    bad = np.nonzero(f1[G.eps.array] != H.eps.array[f0])[0]
    if len(bad):
        return "f1 eps = eps f0", (int(bad[0]),)
    return None


def make_morphism(G: GroupGroupoid, H: GroupGroupoid, f1, f0=None) -> GpGdMorphism:
    """Validate a functor; ``f0`` defaults to ``x -> d0(f1(1_x))``."""
    f1 = tuple(int(v) for v in f1)
    if f0 is None:
        f0 = tuple(H.d0.map[f1[G.unit(x)]] for x in range(G.objects.order))
    f0 = tuple(int(v) for v in f0)
    if len(f1) != G.arrows.order or len(f0) != G.objects.order:
        raise ValidationError("morphism totality", (len(f1), len(f0)))
    fail = morphism_failure(G, H, f1, f0)
    if fail is not None:
        raise ValidationError(fail[0], fail[1])
    return GpGdMorphism(G, H, GroupHom(G.arrows, H.arrows, f1), GroupHom(G.objects, H.objects, f0))


def identity_morphism(G: GroupGroupoid) -> GpGdMorphism:
    return GpGdMorphism(G, G, gr.identity_hom(G.arrows), gr.identity_hom(G.objects))


def zero_morphism(G: GroupGroupoid, H: GroupGroupoid) -> GpGdMorphism:
    return GpGdMorphism(G, H, gr.zero_hom(G.arrows, H.arrows), gr.zero_hom(G.objects, H.objects))


def iter_morphisms(G: GroupGroupoid, H: GroupGroupoid, *, iso: bool = False
                   ) -> Iterator[GpGdMorphism]:
    """Group-groupoid morphisms ``G -> H`` by generator-image backtracking on ``f1``.

    ``f0`` is induced via ``f0(x) = d0(f1(1_x))``.  Candidates for a generator
    must match its element order and, for isomorphisms, the orders of its
    endpoints and whether it is an identity arrow.
    """
    if iso:
        if (G.arrows.order != H.arrows.order or G.objects.order != H.objects.order):
            return
        if _profile(G) != _profile(H):
            return
    pg, ph = _arrow_profiles(G), _arrow_profiles(H)

    def cands(g):
        if not iso:
            return range(H.arrows.order)
        return [c for c in range(H.arrows.order) if ph[c] == pg[g]]

    for f1 in gr.iter_homs(G.arrows, H.arrows, bijective=iso, candidates=cands):
        f0 = tuple(H.d0.map[f1.map[G.unit(x)]] for x in range(G.objects.order))
        if morphism_failure(G, H, f1.map, f0) is not None:
            continue
        if iso and len(set(f0)) != len(f0):
            continue
        yield GpGdMorphism(G, H, f1, GroupHom(G.objects, H.objects, f0))


def _arrow_profiles(G: GroupGroupoid) -> list[tuple]:
    o1 = G.arrows.element_orders()
    o0 = G.objects.element_orders()
    units = set(G.eps.map)
    return [(o1[a], o0[G.d0.map[a]], o0[G.d1.map[a]], a in units) for a in range(G.arrows.order)]


def _profile(G: GroupGroupoid) -> tuple:
    return tuple(sorted(_arrow_profiles(G))), tuple(sorted(G.objects.element_orders()))


def is_isomorphic(G: GroupGroupoid, H: GroupGroupoid) -> GpGdMorphism | None:
    """An isomorphism ``G -> H`` if one exists, else None."""
    check_cap(G.arrows.order, f"isomorphism search {G.name}")
    return next(iter_morphisms(G, H, iso=True), None)


# subgroup-groupoids -------------------------------------------------------

@dataclass(frozen=True)
class SubGroupGroupoid:
    parent: GroupGroupoid
    arrows: Subgroup
    objects: Subgroup
    normal: bool

    def is_trivial(self) -> bool:
        return self.arrows.is_trivial()

    def is_whole(self) -> bool:
        return self.arrows.is_whole() and self.objects.is_whole()

    def as_gpgd(self, name: str | None = None) -> tuple[GroupGroupoid, GpGdMorphism]:
        """Standalone group-groupoid on the members, with its inclusion."""
        G = self.parent
        H1, e1 = self.arrows.as_group()
        H0, e0 = self.objects.as_group()
        p1 = {x: i for i, x in enumerate(self.arrows.members)}
        p0 = {x: i for i, x in enumerate(self.objects.members)}
        d0 = GroupHom(H1, H0, tuple(p0[G.d0.map[a]] for a in self.arrows.members))
        d1 = GroupHom(H1, H0, tuple(p0[G.d1.map[a]] for a in self.arrows.members))
        eps = GroupHom(H0, H1, tuple(p1[G.unit(x)] for x in self.objects.members))
        H = validate_gpgd(H1, H0, d0, d1, eps, name or f"sub({G.name})")
        return H, GpGdMorphism(H, G, e1, e0)


def make_subgpgd(G: GroupGroupoid, arrows, objects=None) -> SubGroupGroupoid:
    """Validate a subgroup-groupoid; ``objects`` defaults to ``d0(arrows)``."""
    A = arrows if isinstance(arrows, Subgroup) else gr.make_subgroup(G.arrows, arrows)
    if objects is None:
        objects = sorted({G.d0.map[a] for a in A.members})
    O = objects if isinstance(objects, Subgroup) else gr.make_subgroup(G.objects, objects)
    for a in A.members:
        for nm, d in (("d0", G.d0), ("d1", G.d1)):
            if d.map[a] not in O:
                raise ValidationError(f"closed under {nm}", (a,))
    for x in O.members:
        if G.unit(x) not in A:
            raise ValidationError("closed under eps", (x,))
    # composition b - 1_y + a and inverse 1_x - a + 1_y stay inside a subgroup
    # containing the identities, so no further closure check is needed
    return SubGroupGroupoid(G, A, O, A.is_normal() and O.is_normal())


def kernel_gpgd(f: GpGdMorphism) -> SubGroupGroupoid:
    return make_subgpgd(f.src, gr.kernel(f.f1), gr.kernel(f.f0))


def image_gpgd(f: GpGdMorphism) -> SubGroupGroupoid:
    return make_subgpgd(f.dst, gr.image(f.f1), gr.image(f.f0))


def whole_subgpgd(G: GroupGroupoid) -> SubGroupGroupoid:
    return make_subgpgd(G, gr.whole(G.arrows), gr.whole(G.objects))


def trivial_subgpgd(G: GroupGroupoid) -> SubGroupGroupoid:
    return make_subgpgd(G, gr.trivial_subgroup(G.arrows), gr.trivial_subgroup(G.objects))


def commutator_subgpgd(G: GroupGroupoid, H: SubGroupGroupoid | None = None,
                       K: SubGroupGroupoid | None = None) -> SubGroupGroupoid:
    """``[H, K] = ([H1, K1], [H0, K0])``; defaults give the derived subgroup-groupoid."""
    H = H or whole_subgpgd(G)
    K = K or whole_subgpgd(G)
    c1 = gr.commutator_subgroup(G.arrows, H.arrows, K.arrows)
    c0 = gr.commutator_subgroup(G.objects, H.objects, K.objects)
    return make_subgpgd(G, c1, c0)


def quotient_gpgd(G: GroupGroupoid, N: SubGroupGroupoid, name: str | None = None
                  ) -> tuple[GroupGroupoid, GpGdMorphism]:
    """``G/N`` with the induced structure maps, plus the projection."""
    Q1, p1 = gr.quotient(G.arrows, N.arrows)
    Q0, p0 = gr.quotient(G.objects, N.objects)

    def induced(nm, src_proj, dst_proj, h, src_group):
        out = [-1] * src_proj.dst.order
        for a in range(src_group.order):
            c, v = src_proj.map[a], dst_proj.map[h.map[a]]
            if out[c] == -1:
                out[c] = v
            elif out[c] != v:
                raise ValidationError(f"induced {nm} well-defined", (a,),
                                      f"coset {c} maps to both {out[c]} and {v}")
        return GroupHom(src_proj.dst, dst_proj.dst, tuple(out))

    d0 = induced("d0", p1, p0, G.d0, G.arrows)
    d1 = induced("d1", p1, p0, G.d1, G.arrows)
    eps = induced("eps", p0, p1, G.eps, G.objects)
    Q = validate_gpgd(Q1, Q0, d0, d1, eps, name or f"{G.name}/N")
    return Q, GpGdMorphism(G, Q, p1, p0)


def abelianization(G: GroupGroupoid) -> GroupGroupoid:
    Q, _ = quotient_gpgd(G, commutator_subgpgd(G), f"{G.name}^ab")
    if not (Q.arrows.is_abelian() and Q.objects.is_abelian()):
        raise InternalError("abelianization is not abelian")
    return Q


# natural transformations --------------------------------------------------

@dataclass(frozen=True, eq=False)
class NatTransf:
    """Additive natural transformation ``f => g``; ``comp[x]`` is an arrow of
    the codomain from ``f0(x)`` to ``g0(x)``."""
    f: GpGdMorphism
    g: GpGdMorphism
    comp: tuple[int, ...]

    @property
    def src(self) -> GroupGroupoid:
        return self.f.src

    @property
    def dst(self) -> GroupGroupoid:
        return self.f.dst

    def __call__(self, x: int) -> int:
        return self.comp[x]

    def key(self) -> tuple:
        return (self.comp, self.f.f1.map, self.g.f1.map)

    def __eq__(self, other):
        return isinstance(other, NatTransf) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"NatTransf(comp={list(self.comp)})"


def nat_transf_failure(f: GpGdMorphism, g: GpGdMorphism, comp) -> tuple[str, tuple] | None:
    G, H = f.src, f.dst
    if g.src != G or g.dst != H:
        return "parallel functors", ()
    comp = np.asarray(comp, dtype=np.int64)
    if len(comp) != G.objects.order:
        return "totality", (len(comp),)
    bad = np.nonzero((H.d0.array[comp] != f.f0.array) | (H.d1.array[comp] != g.f0.array))[0]
    if len(bad):
        return "endpoints", (int(bad[0]),)
    w = gr.hom_failure(G.objects, H.arrows, comp)
    if w is not None:
        return "additivity", w
    ar = np.arange(G.arrows.order)
    # comp[d1 a] o f1(a) == g1(a) o comp[d0 a]
    lhs = _compose_arr(H, comp[G.d1.array[ar]], f.f1.array[ar])
    rhs = _compose_arr(H, g.f1.array[ar], comp[G.d0.array[ar]])
    bad = np.nonzero(lhs != rhs)[0]
    if len(bad):
        return "naturality", (int(bad[0]),)
    return None


def make_nat_transf(f: GpGdMorphism, g: GpGdMorphism, comp) -> NatTransf:
    comp = tuple(int(v) for v in comp)
    fail = nat_transf_failure(f, g, comp)
    if fail is not None:
        raise ValidationError(fail[0], fail[1])
    return NatTransf(f, g, comp)


def identity_transf(f: GpGdMorphism) -> NatTransf:
    """``1_f``: components ``x -> 1_{f0(x)}``."""
    H = f.dst
    return NatTransf(f, f, tuple(H.unit(f.f0.map[x]) for x in range(f.src.objects.order)))


def nat_transfs_between(f: GpGdMorphism, g: GpGdMorphism) -> list[NatTransf]:
    """All additive natural transformations ``f => g``, sorted by components.

    Components are chosen on a generating set of ``G0`` among arrows with the
    right endpoints, extended additively, then checked for naturality.
    """
    G, H = f.src, f.dst
    gens = gr.generating_set(G.objects)
    opts = [H.hom_set(f.f0.map[x], g.f0.map[x]) for x in gens]
    space = 1
    for o in opts:
        space *= max(1, len(o))
    check_cap(space, "natural transformation search", config.search_cap)
    step = lambda x, vx, img: H.arrows.add(vx, img)
    out = []

    def rec(k, imgs):
        vals = gr.extend_on_generators(G.objects, gens[:k], imgs, step)
        if vals is None:
            return
        if k == len(gens):
            comp = tuple(vals[x] for x in range(G.objects.order))
            if nat_transf_failure(f, g, comp) is None:
                out.append(NatTransf(f, g, comp))
            return
        for c in opts[k]:
            rec(k + 1, imgs + [c])

    rec(0, [])
    return sorted(out, key=lambda e: e.comp)


def vertical_comp(z: NatTransf, e: NatTransf) -> NatTransf:
    """``(z o_v e)(x) = z(x) o e(x)`` for ``e: f => g``, ``z: g => h``."""
    if z.f != e.g:
        raise ValidationError("vertical composability", None, "target of e is not source of z")
    H = e.dst
    comp = tuple(H.compose(z.comp[x], e.comp[x]) for x in range(e.src.objects.order))
    return NatTransf(e.f, z.g, comp)


def horizontal_comp(e2: NatTransf, e1: NatTransf) -> NatTransf:
    """``(e2 o_h e1)(x) = e2(g(x)) o f'(e1(x))`` for ``e1: f => g``, ``e2: f' => g'``."""
    if e1.dst != e2.src:
        raise ValidationError("horizontal composability", None, "codomain of e1 is not domain of e2")
    E = e2.dst
    comp = tuple(E.compose(e2.comp[e1.g.f0.map[x]], e2.f.f1.map[e1.comp[x]])
                 for x in range(e1.src.objects.order))
    return NatTransf(e1.f.then(e2.f), e1.g.then(e2.g), comp)


def horizontal_inverse(e: NatTransf) -> NatTransf:
    """``e^{-h}(x) = [f^{-1}(e(g^{-1}(x)))]^{-1}`` for ``e: f => g`` between automorphisms."""
    if not (e.f.is_iso() and e.g.is_iso() and e.src == e.dst):
        raise ValidationError("regularity", None, "endpoint functors must be automorphisms")
    fi, gi = e.f.inverse(), e.g.inverse()
    G = e.src
    comp = tuple(G.arrow_inverse(fi.f1.map[e.comp[gi.f0.map[x]]]) for x in range(G.objects.order))
    return make_nat_transf(fi, gi, comp)


def F_eta(e: NatTransf) -> GroupHom:
    """The arrow automorphism ``a -> g(a) o e(d0 a) = e(d1 a) o f(a)``."""
    G = e.src
    if e.dst != G or not (e.f.is_iso() and e.g.is_iso()):
        raise ValidationError("regularity", None, "F needs e between automorphisms")
    m1 = [G.compose(e.g.f1.map[a], e.comp[G.d0.map[a]]) for a in range(G.arrows.order)]
    m2 = [G.compose(e.comp[G.d1.map[a]], e.f.f1.map[a]) for a in range(G.arrows.order)]
    if m1 != m2:
        k = next(i for i in range(len(m1)) if m1[i] != m2[i])
        raise InternalError(f"the two expressions for F disagree at arrow {k}")
    h = gr.validate_hom(G.arrows, G.arrows, m1)
    if not h.is_bijective():
        raise InternalError("F is not bijective")
    for x in range(G.objects.order):
        if h.map[G.unit(x)] != e.comp[x]:
            raise InternalError(f"F(1_x) != e(x) at x={x}")
    return h


# export -------------------------------------------------------------------

def to_dot(G: GroupGroupoid, include_identities: bool = False) -> str:
    lines = [f'digraph "{G.name}" {{']
    for x in range(G.objects.order):
        lines.append(f'  {x} [label="{G.objects.label(x)}"];')
    units = set(G.eps.map)
    for a in range(G.arrows.order):
        if a in units and not include_identities:
            continue
        lines.append(f'  {G.d0.map[a]} -> {G.d1.map[a]} [label="{a}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(G: GroupGroupoid, path, include_identities: bool = False) -> None:
    with open(path, "w") as fh:
        fh.write(to_dot(G, include_identities))
