"""Plain-text object files.

Blocks::

    begin group Z3            begin hom f : Z4 -> Z2
    order 3                   map 0->0 1->1 2->0 3->1
    table                     end
    0 1 2
    1 2 0                     begin xmod X
    2 0 1                     top A
    end                       base B
                              alpha f
    begin gpgd G              action
    arrows G1                 <|B| rows of |A| indices>
    objects G0                end
    d0 s
    d1 t                      begin sub H : G
    eps e                     arrows 0 3
    end                       objects 0     (optional, defaults to d0 of arrows)
                              end
    begin action T
    acting H                  builtin P pair-gpgd:s3
    on G
    theta1 0->0 1->4 ...
    theta0 0->0 ...
    end

Group references accept a block name or builtin shorthand.  Lines whose first
non-blank character is ``#`` are comments.  ``theta1``/``theta0`` index into
``W(G)`` and ``Aut(G)`` in their canonical order.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import groups as gr
from .catalog import build
from .config import AlgebraError, CapExceeded, InternalError, ValidationError
from .gpgd import (GpGdMorphism, GroupGroupoid, SubGroupGroupoid, make_morphism, make_subgpgd,
                   validate_gpgd)
from .groups import FiniteGroup, GroupHom
from .xmod import CrossedModule, validate_xmod

KINDS = ("group", "hom", "xmod", "gpgd", "sub", "action")


class WorkspaceError(AlgebraError):
    """A load-time problem, located by file and line."""

    def __init__(self, file, line: int, msg: str, cause: Exception | None = None):
        self.file = str(file)
        self.line = line
        self.cause = cause
        super().__init__(f"{self.file}:{line}: {msg}")


@dataclass
class Workspace:
    groups: dict = field(default_factory=dict)
    homs: dict = field(default_factory=dict)
    xmods: dict = field(default_factory=dict)
    gpgds: dict = field(default_factory=dict)
    subs: dict = field(default_factory=dict)
    actions: dict = field(default_factory=dict)

    def _tables(self):
        return {"group": self.groups, "hom": self.homs, "xmod": self.xmods,
                "gpgd": self.gpgds, "sub": self.subs, "action": self.actions}

    def kind_of(self, name: str) -> str | None:
        for k, t in self._tables().items():
            if name in t:
                return k
        return None

    def get(self, name: str):
        k = self.kind_of(name)
        if k is None:
            raise KeyError(name)
        return self._tables()[k][name]

    def add(self, kind: str, name: str, obj) -> None:
        if self.kind_of(name) is not None:
            raise KeyError(f"duplicate name {name!r}")
        self._tables()[kind][name] = obj

    def names(self) -> list[str]:
        return [n for t in self._tables().values() for n in t]


_MAP_ITEM = re.compile(r"^(\d+)->(\d+)$")


class _Reader:
    def __init__(self, ws: Workspace, path, text: str):
        self.ws = ws
        self.path = path
        self.lines = []
        for no, raw in enumerate(text.splitlines(), 1):
            s = raw.strip()
            if s and not s.startswith("#"):
                self.lines.append((no, s))
        self.pos = 0

    def err(self, line, msg, cause=None):
        return WorkspaceError(self.path, line, msg, cause)

    def next(self):
        if self.pos >= len(self.lines):
            line = self.lines[-1][0] if self.lines else 0
            raise self.err(line, "unexpected end of file (missing 'end')")
        item = self.lines[self.pos]
        self.pos += 1
        return item

    def ints(self, line, toks):
        try:
            return [int(t) for t in toks]
        except ValueError:
            raise self.err(line, f"expected integers, got {' '.join(toks)!r}") from None

    def maps(self, line, toks, m: dict):
        for t in toks:
            mt = _MAP_ITEM.match(t)
            if not mt:
                raise self.err(line, f"bad map entry {t!r} (want i->j)")
            i, j = int(mt[1]), int(mt[2])
            if i in m and m[i] != j:
                raise self.err(line, f"map entry for {i} given twice")
            m[i] = j

    def total(self, line, m: dict, n: int, what: str) -> list[int]:
        missing = [i for i in range(n) if i not in m]
        extra = [i for i in m if not 0 <= i < n]
        if missing or extra:
            raise self.err(line, f"{what} must be total on 0..{n - 1} "
                                 f"(missing {missing[:5]}, out of range {extra[:5]})")
        return [m[i] for i in range(n)]

    # references -------------------------------------------------------

    def group(self, line, ref: str) -> FiniteGroup:
        if ref in self.ws.groups:
            return self.ws.groups[ref]
        if self.ws.kind_of(ref) is not None:
            raise self.err(line, f"{ref!r} is a {self.ws.kind_of(ref)}, not a group")
        try:
            G = build(ref)
        except ValidationError:
            raise self.err(line, f"undefined group {ref!r}") from None
        if not isinstance(G, FiniteGroup):
            raise self.err(line, f"{ref!r} is not a group")
        return G

    def named(self, line, ref: str, kind: str):
        k = self.ws.kind_of(ref)
        if k is None:
            if kind == "gpgd":
                try:
                    obj = build(ref)
                except ValidationError:
                    obj = None
                if isinstance(obj, GroupGroupoid):
                    return obj
            raise self.err(line, f"undefined {kind} {ref!r}")
        if k != kind:
            raise self.err(line, f"{ref!r} is a {k}, not a {kind}")
        return self.ws.get(ref)

    # blocks -----------------------------------------------------------

    def run(self):
        while self.pos < len(self.lines):
            line, s = self.next()
            toks = s.split()
            if toks[0] == "builtin":
                if len(toks) != 3:
                    raise self.err(line, "usage: builtin <name> <spec>")
                try:
                    obj = build(toks[2])
                except (CapExceeded, InternalError):
                    raise
                except AlgebraError as exc:
                    raise self.err(line, str(exc), exc) from exc
                kind = {FiniteGroup: "group", GroupGroupoid: "gpgd",
                        CrossedModule: "xmod"}[type(obj)]
                self.define(line, kind, toks[1], obj)
                continue
            if toks[0] != "begin" or len(toks) < 3 or toks[1] not in KINDS:
                raise self.err(line, f"expected 'begin <{'|'.join(KINDS)}> <name>', got {s!r}")
            kind, name = toks[1], toks[2]
            try:
                obj = getattr(self, f"block_{kind}")(line, name, toks[3:])
            except (WorkspaceError, CapExceeded, InternalError):
                raise
            except AlgebraError as exc:
                raise self.err(line, f"{kind} {name}: {exc}", exc) from exc
            self.define(line, kind, name, obj)

    def define(self, line, kind, name, obj):
        try:
            self.ws.add(kind, name, obj)
        except KeyError:
            raise self.err(line, f"duplicate name {name!r}") from None

    def body(self):
        """Lines up to ``end`` as (line, tokens)."""
        out = []
        while True:
            line, s = self.next()
            if s == "end":
                return out
            if s.split()[0] == "begin":
                raise self.err(line, "nested 'begin' (missing 'end')")
            out.append((line, s.split()))

    def block_group(self, line, name, rest):
        body = self.body()
        n = None
        rows = []
        i = 0
        while i < len(body):
            ln, toks = body[i]
            if toks[0] == "order" and len(toks) == 2:
                n = self.ints(ln, toks[1:])[0]
            elif toks[0] == "table":
                if n is None:
                    raise self.err(ln, "'order' must precede 'table'")
                rows = [self.ints(l2, t2) for l2, t2 in body[i + 1:i + 1 + n]]
                if len(rows) != n or any(len(r) != n for r in rows):
                    raise self.err(ln, f"table must have {n} rows of {n} entries")
                i += n
            else:
                raise self.err(ln, f"unexpected {' '.join(toks)!r} in group block")
            i += 1
        if n is None or not rows:
            raise self.err(line, "group block needs 'order' and 'table'")
        return FiniteGroup(np.array(rows, dtype=np.int64), name)

    def block_hom(self, line, name, rest):
        if len(rest) != 4 or rest[0] != ":" or rest[2] != "->":
            raise self.err(line, "usage: begin hom <name> : <src> -> <dst>")
        src, dst = self.group(line, rest[1]), self.group(line, rest[3])
        m: dict = {}
        for ln, toks in self.body():
            if toks[0] != "map":
                raise self.err(ln, f"unexpected {toks[0]!r} in hom block")
            self.maps(ln, toks[1:], m)
        return gr.validate_hom(src, dst, self.total(line, m, src.order, "map"))

    def _fields(self, body, keys):
        vals = {}
        for ln, toks in body:
            if toks[0] in keys and len(toks) == 2:
                vals[toks[0]] = (ln, toks[1])
        return vals

    def block_xmod(self, line, name, rest):
        body = self.body()
        vals = self._fields(body, ("top", "base", "alpha"))
        for k in ("top", "base", "alpha"):
            if k not in vals:
                raise self.err(line, f"xmod block needs '{k}'")
        top = self.group(*vals["top"])
        base = self.group(*vals["base"])
        alpha = self.named(*vals["alpha"], "hom")
        if alpha.src != top or alpha.dst != base:
            raise self.err(vals["alpha"][0], "alpha must be a hom top -> base")
        start = [i for i, (_, t) in enumerate(body) if t[0] == "action"]
        if not start:
            raise self.err(line, "xmod block needs 'action'")
        rows = body[start[0] + 1:start[0] + 1 + base.order]
        table = [self.ints(ln, t) for ln, t in rows]
        if len(table) != base.order or any(len(r) != top.order for r in table):
            raise self.err(body[start[0]][0], f"action needs {base.order} rows of {top.order}")
        for ln, toks in body:
            if toks[0] not in ("top", "base", "alpha", "action") and (ln, toks) not in rows:
                raise self.err(ln, f"unexpected {toks[0]!r} in xmod block")
        return validate_xmod(top, base, alpha, np.array(table, dtype=np.int64), name)

    def block_gpgd(self, line, name, rest):
        body = self.body()
        keys = ("arrows", "objects", "d0", "d1", "eps")
        for ln, toks in body:
            if toks[0] not in keys or len(toks) != 2:
                raise self.err(ln, f"unexpected {' '.join(toks)!r} in gpgd block")
        vals = self._fields(body, keys)
        for k in keys:
            if k not in vals:
                raise self.err(line, f"gpgd block needs '{k}'")
        G1, G0 = self.group(*vals["arrows"]), self.group(*vals["objects"])
        hs = {}
        for k, (s, d) in (("d0", (G1, G0)), ("d1", (G1, G0)), ("eps", (G0, G1))):
            h = self.named(*vals[k], "hom")
            if h.src != s or h.dst != d:
                raise self.err(vals[k][0], f"{k} has the wrong source or target")
            hs[k] = h
        return validate_gpgd(G1, G0, hs["d0"], hs["d1"], hs["eps"], name)

    def block_sub(self, line, name, rest):
        if len(rest) != 2 or rest[0] != ":":
            raise self.err(line, "usage: begin sub <name> : <gpgd>")
        G = self.named(line, rest[1], "gpgd")
        arrows = objects = None
        for ln, toks in self.body():
            if toks[0] == "arrows":
                arrows = self.ints(ln, toks[1:])
            elif toks[0] == "objects":
                objects = self.ints(ln, toks[1:])
            else:
                raise self.err(ln, f"unexpected {toks[0]!r} in sub block")
        if arrows is None:
            raise self.err(line, "sub block needs 'arrows'")
        for xs, n in ((arrows, G.arrows.order), (objects or [], G.objects.order)):
            if any(not 0 <= x < n for x in xs):
                raise self.err(line, "index out of range in sub block")
        return make_subgpgd(G, arrows, objects)

    def block_action(self, line, name, rest):
        from .actions import make_action
        from .actor import actor_data
        body = self.body()
        vals = self._fields(body, ("acting", "on"))
        if "acting" not in vals or "on" not in vals:
            raise self.err(line, "action block needs 'acting' and 'on'")
        H = self.named(*vals["acting"], "gpgd")
        G = self.named(*vals["on"], "gpgd")
        m1: dict = {}
        m0: dict = {}
        for ln, toks in body:
            if toks[0] == "theta1":
                self.maps(ln, toks[1:], m1)
            elif toks[0] == "theta0":
                self.maps(ln, toks[1:], m0)
            elif toks[0] not in ("acting", "on"):
                raise self.err(ln, f"unexpected {toks[0]!r} in action block")
        AG = actor_data(G).gpgd
        t1 = self.total(line, m1, H.arrows.order, "theta1")
        t0 = self.total(line, m0, H.objects.order, "theta0")
        if any(not 0 <= v < AG.arrows.order for v in t1) or \
                any(not 0 <= v < AG.objects.order for v in t0):
            raise self.err(line, "theta value out of range for A(G)")
        return make_action(H, G, make_morphism(H, AG, t1, t0))


def parse_text(text: str, path="<string>", ws: Workspace | None = None) -> Workspace:
    ws = ws if ws is not None else Workspace()
    _Reader(ws, path, text).run()
    return ws


def parse_workspace(files, config: dict | None = None) -> Workspace:
    """Load every file in order into one workspace; names share one namespace.

    ``config`` holds overrides for the global enumeration limits during loading.
    """
    from .config import using
    ws = Workspace()
    with using(**(config or {})):
        for f in files:
            p = Path(f)
            try:
                text = p.read_text()
            except OSError as exc:
                raise WorkspaceError(p, 0, f"cannot read: {exc.strerror}", exc) from exc
            parse_text(text, p, ws)
    return ws


# writer -------------------------------------------------------------------

def format_group(name: str, G: FiniteGroup) -> str:
    rows = "\n".join(" ".join(str(int(v)) for v in r) for r in G.table)
    return f"begin group {name}\norder {G.order}\ntable\n{rows}\nend\n"


def format_hom(name: str, h: GroupHom, src: str, dst: str) -> str:
    items = " ".join(f"{i}->{j}" for i, j in enumerate(h.map))
    return f"begin hom {name} : {src} -> {dst}\nmap {items}\nend\n"


def format_gpgd(name: str, G: GroupGroupoid) -> str:
    """Self-contained blocks (groups, structure maps, gpgd) that parse back to ``G``."""
    a, o = f"{name}_1", f"{name}_0"
    parts = [format_group(a, G.arrows), format_group(o, G.objects),
             format_hom(f"{name}_d0", G.d0, a, o), format_hom(f"{name}_d1", G.d1, a, o),
             format_hom(f"{name}_eps", G.eps, o, a),
             f"begin gpgd {name}\narrows {a}\nobjects {o}\nd0 {name}_d0\nd1 {name}_d1\n"
             f"eps {name}_eps\nend\n"]
    return "\n".join(parts)


def format_xmod(name: str, X: CrossedModule) -> str:
    a, b = f"{name}_top", f"{name}_base"
    rows = "\n".join(" ".join(str(int(v)) for v in r) for r in X.action)
    parts = [format_group(a, X.top), format_group(b, X.base),
             format_hom(f"{name}_alpha", X.alpha, a, b),
             f"begin xmod {name}\ntop {a}\nbase {b}\nalpha {name}_alpha\naction\n{rows}\nend\n"]
    return "\n".join(parts)
