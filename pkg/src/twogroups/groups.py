"""Finite groups as Cayley tables over element indices ``0..n-1``.

Notation is additive throughout: ``G.add(a, b)`` is ``a + b`` and index 0 is
always the identity.  Homomorphisms are total index maps; subgroups are
sorted tuples of member indices.
"""
from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .config import InternalError, ValidationError, check_cap, config


class FiniteGroup:
    """A validated finite group.

    ``table[i][j]`` is the index of ``i + j``.  Construction checks all group
    axioms unless ``check=False`` (reserved for constructions whose axioms were
    established some other way, e.g. a semidirect product of a validated
    action).
    """

    __slots__ = ("table", "name", "labels", "inv", "_hash")

    def __init__(self, table, name: str = "G", labels: Sequence[str] | None = None,
                 *, check: bool = True):
        t = np.array(table, dtype=np.int64)
        if t.ndim == 1 and t.size == 1:
            t = t.reshape(1, 1)
        if check:
            _check_group_table(t)
        t.setflags(write=False)
        self.table = t
        self.name = name
        self.labels = tuple(labels) if labels is not None else None
        n = t.shape[0]
        inv = np.empty(n, dtype=np.int64)
        rows, cols = np.nonzero(t == 0)
        inv[rows] = cols
        inv.setflags(write=False)
        self.inv = inv
        self._hash = hash((n, t.tobytes()))

    # arithmetic -----------------------------------------------------------
    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __len__(self):
        return self.order

    def add(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def neg(self, a: int) -> int:
        return int(self.inv[a])

    def sum(self, *xs: int) -> int:
        acc = 0
        for x in xs:
            acc = int(self.table[acc, x])
        return acc

    def conj(self, a: int, b: int) -> int:
        """``a + b - a``."""
        return int(self.table[self.table[a, b], self.inv[a]])

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = int(self.table[x, a])
            k += 1
        return k

    def element_orders(self) -> list[int]:
        return [self.element_order(a) for a in range(self.order)]

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def commuting_witness(self) -> tuple[int, int] | None:
        """First pair ``(a, b)`` with ``a + b != b + a``, or None."""
        bad = np.argwhere(self.table != self.table.T)
        if len(bad) == 0:
            return None
        a, b = bad[0]
        return int(a), int(b)

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    def __eq__(self, other):
        return (isinstance(other, FiniteGroup) and self._hash == other._hash
                and np.array_equal(self.table, other.table))

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order})"


def _check_group_table(t: np.ndarray) -> None:
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise ValidationError("shape", t.shape, "table must be a non-empty square")
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        raise ValidationError("closure", None, "entry outside 0..n-1")
    ar = np.arange(n)
    if not np.array_equal(t[0, :], ar) or not np.array_equal(t[:, 0], ar):
        j = int(np.argmax((t[0, :] != ar) | (t[:, 0] != ar)))
        raise ValidationError("identity", (0, j), "index 0 is not a two-sided identity")
    for i in range(n):
        if len(np.unique(t[i])) != n:
            raise ValidationError("latin-row", (i,), "row is not a permutation")
        if len(np.unique(t[:, i])) != n:
            raise ValidationError("latin-column", (i,), "column is not a permutation")
    # Latin square with identity: right inverses exist; two-sidedness is checked
    rows, cols = np.nonzero(t == 0)
    inv = np.empty(n, dtype=np.int64)
    inv[rows] = cols
    bad = np.nonzero(t[inv, ar] != 0)[0]
    if len(bad):
        a = int(bad[0])
        raise ValidationError("inverse", (a, int(inv[a])), "right inverse is not a left inverse")
    _check_associative(t)


def _check_associative(t: np.ndarray) -> None:
    n = t.shape[0]
    if n <= config.assoc_limit:
        lhs = t[t[:, :, None], np.arange(n)[None, None, :]]  # (a+b)+c
        rhs = t[np.arange(n)[:, None, None], t[None, :, :]]  # a+(b+c)
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            raise ValidationError("associativity", tuple(int(v) for v in bad[0]))
        return
    # Light's test: the elements g with (x+g)+y = x+(g+y) for all x, y form a
    # submagma, so checking a set that generates the magma under + suffices.
    for g in _magma_generators(t):
        lhs = t[t[:, g][:, None], np.arange(n)[None, :]]
        rhs = t[np.arange(n)[:, None], t[g, :][None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            x, y = bad[0]
            raise ValidationError("associativity", (int(x), g, int(y)))


def _magma_generators(t: np.ndarray) -> list[int]:
    n = t.shape[0]
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    gens: list[int] = []
    for x in range(n):
        if seen[x]:
            continue
        gens.append(x)
        seen[x] = True
        while True:
            S = np.nonzero(seen)[0]
            prods = np.unique(t[np.ix_(S, S)])
            if seen[prods].all():
                break
            seen[prods] = True
    return gens


# builtin groups -----------------------------------------------------------

def trivial_group(name: str = "1") -> FiniteGroup:
    return FiniteGroup([[0]], name)


def cyclic(n: int) -> FiniteGroup:
    """Z_n with element i the residue i."""
    if n < 1:
        raise ValueError("cyclic order must be positive")
    ar = np.arange(n)
    return FiniteGroup((ar[:, None] + ar[None, :]) % n, f"Z{n}")


def symmetric(n: int) -> FiniteGroup:
    """S_n on permutations of ``range(n)`` in lexicographic rank order.

    ``p + q`` is the composite ``p . q`` (apply ``q`` first).
    """
    if n < 1:
        raise ValueError("symmetric degree must be positive")
    check_cap(math.factorial(n), f"symmetric({n})", config.search_cap)
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    labels = ["".join(str(v) for v in p) for p in perms]
    return FiniteGroup(table, f"S{n}", labels)


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n; index ``e*n + k`` is ``r^k s^e``."""
    if n < 1:
        raise ValueError("dihedral parameter must be positive")
    m = 2 * n
    table = np.empty((m, m), dtype=np.int64)
    for i in range(m):
        e, k = divmod(i, n)
        for j in range(m):
            e2, k2 = divmod(j, n)
            k3 = (k + (k2 if e == 0 else -k2)) % n
            table[i, j] = ((e + e2) % 2) * n + k3
    labels = [f"r{i % n}" + ("s" if i >= n else "") for i in range(m)]
    return FiniteGroup(table, f"D{n}", labels)


def direct_product(G: FiniteGroup, H: FiniteGroup, name: str | None = None) -> FiniteGroup:
    """``G x H`` with index ``g*|H| + h``."""
    act = np.tile(np.arange(G.order), (H.order, 1))
    P = semidirect_product_groups(G, H, act, name or f"{G.name}x{H.name}")
    return P


def klein4() -> FiniteGroup:
    K = direct_product(cyclic(2), cyclic(2), "K4")
    return K


# homomorphisms ------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GroupHom:
    src: FiniteGroup
    dst: FiniteGroup
    map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.map, dtype=np.int64)

    def is_injective(self) -> bool:
        return len(set(self.map)) == self.src.order

    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.dst.order

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def then(self, other: "GroupHom") -> "GroupHom":
        """``other . self``."""
        if other.src != self.dst:
            raise ValueError("homomorphisms are not composable")
        return GroupHom(self.src, other.dst, tuple(other.map[x] for x in self.map))

    def inverse(self) -> "GroupHom":
        if not self.is_bijective():
            raise ValueError("homomorphism is not bijective")
        inv = [0] * self.src.order
        for x, y in enumerate(self.map):
            inv[y] = x
        return GroupHom(self.dst, self.src, tuple(inv))

    def __eq__(self, other):
        return (isinstance(other, GroupHom) and self.map == other.map
                and self.src == other.src and self.dst == other.dst)

    def __hash__(self):
        return hash((self.map, self.src, self.dst))

    def __repr__(self):
        return f"GroupHom({self.src.name}->{self.dst.name}, {list(self.map)})"


def hom_failure(src: FiniteGroup, dst: FiniteGroup, m) -> tuple[int, int] | None:
    """First pair ``(x, y)`` with ``m[x+y] != m[x]+m[y]``, or None."""
    m = np.asarray(m, dtype=np.int64)
    lhs = m[src.table]
    rhs = dst.table[m[:, None], m[None, :]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        return int(bad[0][0]), int(bad[0][1])
    return None


def validate_hom(src: FiniteGroup, dst: FiniteGroup, m: Sequence[int]) -> GroupHom:
    m = tuple(int(v) for v in m)
    if len(m) != src.order:
        raise ValidationError("totality", len(m), f"map must have {src.order} entries")
    if any(v < 0 or v >= dst.order for v in m):
        raise ValidationError("range", None, "image index outside target group")
    w = hom_failure(src, dst, m)
    if w is not None:
        raise ValidationError("homomorphism", w,
                              f"map[{w[0]}+{w[1]}] != map[{w[0]}]+map[{w[1]}]")
    return GroupHom(src, dst, m)


def identity_hom(G: FiniteGroup) -> GroupHom:
    return GroupHom(G, G, tuple(range(G.order)))


def zero_hom(G: FiniteGroup, H: FiniteGroup) -> GroupHom:
    return GroupHom(G, H, (0,) * G.order)


# subgroups ----------------------------------------------------------------

@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    members: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self._set

    @property
    def _set(self) -> frozenset:
        return frozenset(self.members)

    def is_trivial(self) -> bool:
        return self.members == (0,)

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def normality_witness(self) -> tuple[int, int] | None:
        """First ``(g, n)`` with ``g + n - g`` outside the subgroup, or None."""
        G, s = self.parent, self._set
        for g in range(G.order):
            for n in self.members:
                if G.conj(g, n) not in s:
                    return g, n
        return None

    def is_normal(self) -> bool:
        return self.normality_witness() is None

    def as_group(self, name: str | None = None) -> tuple[FiniteGroup, GroupHom]:
        """Re-index the subgroup as a standalone group plus its embedding."""
        pos = {x: i for i, x in enumerate(self.members)}
        G = self.parent
        table = [[pos[G.add(a, b)] for b in self.members] for a in self.members]
        labels = [G.label(x) for x in self.members] if G.labels else None
        H = FiniteGroup(table, name or f"{G.name}<{self.order}>", labels, check=False)
        return H, GroupHom(H, G, self.members)


def make_subgroup(G: FiniteGroup, members: Iterable[int]) -> Subgroup:
    ms = tuple(sorted(set(int(m) for m in members)))
    s = set(ms)
    if 0 not in s:
        raise ValidationError("subgroup-identity", None, "0 is not a member")
    for a in ms:
        if G.neg(a) not in s:
            raise ValidationError("subgroup-inverse", (a,))
        for b in ms:
            if G.add(a, b) not in s:
                raise ValidationError("subgroup-closure", (a, b))
    return Subgroup(G, ms)


def generate(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    """Subgroup generated by ``gens`` (closure under + suffices in a finite group)."""
    seen = {0}
    gens = [int(g) for g in gens]
    frontier = deque([0])
    while frontier:
        x = frontier.popleft()
        for g in gens:
            y = G.add(x, g)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return Subgroup(G, tuple(sorted(seen)))


def whole(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, tuple(range(G.order)))


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, (0,))


def kernel(h: GroupHom) -> Subgroup:
    return Subgroup(h.src, tuple(x for x, y in enumerate(h.map) if y == 0))


def image(h: GroupHom) -> Subgroup:
    return Subgroup(h.dst, tuple(sorted(set(h.map))))


def center(G: FiniteGroup) -> Subgroup:
    t = G.table
    return Subgroup(G, tuple(int(z) for z in range(G.order) if np.array_equal(t[z], t[:, z])))


def commutator_subgroup(G: FiniteGroup, H: Subgroup | None = None,
                        K: Subgroup | None = None) -> Subgroup:
    H = H or whole(G)
    K = K or whole(G)
    comms = {G.sum(h, k, G.neg(h), G.neg(k)) for h in H.members for k in K.members}
    return generate(G, sorted(comms))


def quotient(G: FiniteGroup, N: Subgroup, name: str | None = None) -> tuple[FiniteGroup, GroupHom]:
    """``G/N`` with cosets ordered by minimal representative, plus the projection."""
    w = N.normality_witness()
    if w is not None:
        g, n = w
        raise ValidationError("normality", w, f"{g}+{n}-{g} = {G.conj(g, n)} not in N")
    coset_of = [-1] * G.order
    reps: list[int] = []
    for x in range(G.order):
        if coset_of[x] >= 0:
            continue
        k = len(reps)
        reps.append(x)
        for n in N.members:
            coset_of[G.add(x, n)] = k
    table = [[coset_of[G.add(a, b)] for b in reps] for a in reps]
    Q = FiniteGroup(table, name or f"{G.name}/{N.order}", check=False)
    return Q, GroupHom(G, Q, tuple(coset_of))


# actions and semidirect products -----------------------------------------

def action_failure(N: FiniteGroup, M: FiniteGroup, act) -> tuple[str, tuple] | None:
    """Check that ``act`` (|M| x |N|) is a homomorphism M -> Aut(N)."""
    act = np.asarray(act, dtype=np.int64)
    if act.shape != (M.order, N.order):
        return "action-shape", act.shape
    if not np.array_equal(act[0], np.arange(N.order)):
        return "action-identity", (0,)
    for m in range(M.order):
        row = act[m]
        if len(set(row.tolist())) != N.order:
            return "action-bijective", (m,)
        w = hom_failure(N, N, row)
        if w is not None:
            return "action-automorphism", (m,) + w
    # act[m + m'][n] == act[m][act[m'][n]]
    lhs = act[M.table]                       # (m, m', n)
    rhs = act[np.arange(M.order)[:, None, None], act[None, :, :]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        return "action-homomorphism", tuple(int(v) for v in bad[0])
    return None


def semidirect_product_groups(N: FiniteGroup, M: FiniteGroup, act, name: str | None = None
                              ) -> FiniteGroup:
    """``N x| M`` on pairs ``(n, m)`` with index ``n*|M| + m`` and
    ``(n, m) + (n', m') = (n + m.n', m + m')``."""
    fail = action_failure(N, M, act)
    if fail is not None:
        raise ValidationError(fail[0], fail[1], "not an action by automorphisms")
    act = np.asarray(act, dtype=np.int64)
    k = M.order
    idx = np.arange(N.order * k)
    nn, mm = np.divmod(idx, k)
    new_n = N.table[nn[:, None], act[mm[:, None], nn[None, :]]]
    new_m = M.table[mm[:, None], mm[None, :]]
    table = new_n * k + new_m
    labels = None
    if N.labels or M.labels:
        labels = [f"({N.label(a)},{M.label(b)})" for a in range(N.order) for b in range(k)]
    return FiniteGroup(table, name or f"{N.name}:{M.name}", labels, check=False)


# generator-image search ---------------------------------------------------

def generating_set(G: FiniteGroup) -> list[int]:
    """Greedy generating set, preferring elements of large order."""
    orders = G.element_orders()
    cand = sorted(range(1, G.order), key=lambda x: (-orders[x], x))
    gens: list[int] = []
    span = {0}
    for x in cand:
        if x not in span:
            gens.append(x)
            span = set(generate(G, gens).members)
            if len(span) == G.order:
                break
    return gens


def extend_on_generators(G: FiniteGroup, gens: Sequence[int], images: Sequence[int],
                         step: Callable[[int, int, int], int], zero: int = 0,
                         known: dict | None = None) -> dict[int, int] | None:
    """Propagate values along the Cayley graph of ``<gens>``.

    ``step(x, value_at_x, image_of_g)`` gives the value at ``x + g``.  Returns
    the value map on the generated subgroup, or None if some edge disagrees.
    """
    vals = {0: zero}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        vx = vals[x]
        for g, img in zip(gens, images):
            y = G.add(x, g)
            v = step(x, vx, img)
            old = vals.get(y)
            if old is None:
                vals[y] = v
                queue.append(y)
            elif old != v:
                return None
    return vals


def iter_homs(src: FiniteGroup, dst: FiniteGroup, *, bijective: bool = False,
              candidates: Callable[[int], Iterable[int]] | None = None) -> Iterator[GroupHom]:
    """All homomorphisms ``src -> dst`` by backtracking over generator images.

    Results come out lexicographically sorted by map array.
    """
    if bijective and src.order != dst.order:
        return
    gens = generating_set(src)
    s_orders = src.element_orders()
    d_orders = dst.element_orders()
    if bijective and sorted(s_orders) != sorted(d_orders):
        return

    def cands(g):
        base = candidates(g) if candidates else range(dst.order)
        o = s_orders[g]
        if bijective:
            return [c for c in base if d_orders[c] == o]
        return [c for c in base if o % d_orders[c] == 0]

    options = [cands(g) for g in gens]
    space = 1
    for o in options:
        space *= max(1, len(o))
    check_cap(space, f"hom search {src.name}->{dst.name}", config.search_cap)

    step = lambda x, vx, img: dst.add(vx, img)
    found: list[tuple[int, ...]] = []

    def rec(k: int, imgs: list[int]):
        vals = extend_on_generators(src, gens[:k], imgs, step)
        if vals is None:
            return
        if bijective and len(set(vals.values())) != len(vals):
            return
        if k == len(gens):
            m = tuple(vals[x] for x in range(src.order))
            if hom_failure(src, dst, m) is not None:
                raise InternalError("generator extension produced a non-homomorphism")
            found.append(m)
            return
        for c in options[k]:
            rec(k + 1, imgs + [c])

    rec(0, [])
    for m in sorted(found):
        yield GroupHom(src, dst, m)


def find_isomorphism(G: FiniteGroup, H: FiniteGroup) -> GroupHom | None:
    return next(iter_homs(G, H, bijective=True), None)


def group_from_elements(elements: Sequence, key_of, compose, name: str) -> FiniteGroup:
    """Materialise a Cayley table for a closed list of elements.

    ``elements[0]`` must be the identity; ``compose(x, y)`` returns an element
    whose ``key_of`` is looked up among the keys of ``elements``.
    """
    index = {key_of(e): i for i, e in enumerate(elements)}
    if len(index) != len(elements):
        raise InternalError(f"{name}: duplicate elements")
    n = len(elements)
    table = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            k = index.get(key_of(compose(a, b)))
            if k is None:
                raise InternalError(f"{name}: product of {i} and {j} not in the list")
            table[i, j] = k
    return FiniteGroup(table, name)


def automorphism_group(G: FiniteGroup) -> tuple[FiniteGroup, list[GroupHom]]:
    """Aut(G) as a Cayley table (``i + j`` is ``f_i . f_j``) plus its elements.

    Elements are sorted by map array, which puts the identity first.
    """
    check_cap(G.order, f"Aut({G.name})")
    auts = list(iter_homs(G, G, bijective=True))
    if auts[0].map != tuple(range(G.order)):
        raise InternalError("identity automorphism is not first")
    A = group_from_elements(auts, lambda f: f.map, lambda f, g: g.then(f), f"Aut({G.name})")
    return A, auts
