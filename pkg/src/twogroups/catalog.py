"""Builtin shorthand for groups, group-groupoids and crossed modules.

Groups: ``trivial``, ``cyclic:n`` / ``zn``, ``dihedral:n`` / ``dn``,
``symmetric:n`` / ``sn``, ``klein4`` / ``k4``, and direct products joined
with ``*`` (``z2*z2``).

Group-groupoids: ``zero-gpgd``, ``discrete-gpgd:<group>``,
``pair-gpgd:<group>``, ``psi:<xmod>``, ``actor:<gpgd>``, ``holomorph:<gpgd>``.

Crossed modules: ``normal-xmod:<group>:<gens>`` (inclusion of the normal
subgroup generated by the comma-separated ``gens``), ``identity-xmod:<group>``,
``inner-xmod:<group>``, ``trivial-xmod:<group>``, ``phi:<gpgd>``.
"""
from __future__ import annotations

import re

import numpy as np

from . import groups as gr
from .config import ValidationError
from .gpgd import GroupGroupoid, discrete_gpgd, pair_gpgd, zero_gpgd
from .groups import FiniteGroup
from .xmod import (CrossedModule, identity_xmod, inner_xmod, trivial_xmod,
                   xmod_from_normal_inclusion)

GPGD_KINDS = ("zero-gpgd", "discrete-gpgd", "pair-gpgd", "psi", "actor", "holomorph")
XMOD_KINDS = ("normal-xmod", "identity-xmod", "inner-xmod", "trivial-xmod", "phi")

_SHORT = re.compile(r"^([zds])(\d+)$")


def _int(s: str, spec: str) -> int:
    try:
        n = int(s)
    except ValueError:
        raise ValidationError("builtin syntax", None, f"bad integer in {spec!r}") from None
    if n < 1:
        raise ValidationError("builtin syntax", None, f"parameter must be positive in {spec!r}")
    return n


def _factor(spec: str) -> FiniteGroup:
    s = spec.strip().lower()
    if s in ("trivial", "1", "z1"):
        return gr.trivial_group()
    if s in ("klein4", "k4"):
        return gr.klein4()
    if ":" in s:
        kind, arg = s.split(":", 1)
    else:
        m = _SHORT.match(s)
        if not m:
            raise ValidationError("builtin syntax", None, f"unknown group {spec!r}")
        kind, arg = {"z": "cyclic", "d": "dihedral", "s": "symmetric"}[m[1]], m[2]
    n = _int(arg, spec)
    if kind == "cyclic":
        return gr.cyclic(n)
    if kind == "dihedral":
        return gr.dihedral(n)
    if kind == "symmetric":
        if n > 5:
            raise ValidationError("builtin syntax", None, "symmetric groups above S5 are not offered")
        return gr.symmetric(n)
    raise ValidationError("builtin syntax", None, f"unknown group {spec!r}")


def build_group(spec) -> FiniteGroup:
    """A group from builtin shorthand, or from a full Cayley table."""
    if not isinstance(spec, str):
        return FiniteGroup(np.asarray(spec), "G")
    parts = spec.split("*")
    G = _factor(parts[0])
    for p in parts[1:]:
        G = gr.direct_product(G, _factor(p))
    return G


def build_gpgd(spec: str) -> GroupGroupoid:
    from .actions import holomorph
    from .actor import actor_gpgd
    from .bridge import psi_to_gpgd
    s = spec.strip()
    kind, _, arg = s.partition(":")
    kind = kind.lower()
    if kind == "zero-gpgd":
        return zero_gpgd()
    if kind == "discrete-gpgd":
        return discrete_gpgd(build_group(arg))
    if kind == "pair-gpgd":
        return pair_gpgd(build_group(arg))
    if kind == "psi":
        return psi_to_gpgd(build_xmod(arg))
    if kind == "actor":
        return actor_gpgd(build_gpgd(arg))
    if kind == "holomorph":
        return holomorph(build_gpgd(arg))
    raise ValidationError("builtin syntax", None, f"unknown group-groupoid {spec!r}")


def build_xmod(spec: str) -> CrossedModule:
    from .bridge import phi_to_xmod
    s = spec.strip()
    kind, _, arg = s.partition(":")
    kind = kind.lower()
    if kind == "normal-xmod":
        gspec, sep, gens = arg.rpartition(":")
        if not sep:
            raise ValidationError("builtin syntax", None, "normal-xmod needs <group>:<gens>")
        G = build_group(gspec)
        try:
            gl = [int(g) for g in gens.split(",") if g.strip()]
        except ValueError:
            raise ValidationError("builtin syntax", None, f"bad generators {gens!r}") from None
        if any(not 0 <= g < G.order for g in gl):
            raise ValidationError("builtin syntax", None, f"generator out of range in {spec!r}")
        return xmod_from_normal_inclusion(G, gr.generate(G, gl))
    if kind == "identity-xmod":
        return identity_xmod(build_group(arg))
    if kind == "inner-xmod":
        return inner_xmod(build_group(arg))
    if kind == "trivial-xmod":
        return trivial_xmod(build_group(arg))
    if kind == "phi":
        return phi_to_xmod(build_gpgd(arg))
    raise ValidationError("builtin syntax", None, f"unknown crossed module {spec!r}")


def build(spec: str):
    """Dispatch on the leading keyword: a gpgd, an xmod or a group."""
    kind = spec.strip().partition(":")[0].lower()
    if kind in GPGD_KINDS:
        return build_gpgd(spec)
    if kind in XMOD_KINDS:
        return build_xmod(spec)
    return build_group(spec)


CATALOG_SPECS = (
    "zero-gpgd",
    "discrete-gpgd:z3",
    "discrete-gpgd:s3",
    "discrete-gpgd:k4",
    "pair-gpgd:z2",
    "pair-gpgd:z3",
    "pair-gpgd:s3",
    "psi:normal-xmod:z4:2",
    "psi:identity-xmod:z3",
)

CATALOG_XMOD_SPECS = (
    "normal-xmod:z4:2",
    "identity-xmod:z3",
)


def catalog() -> list[tuple[str, GroupGroupoid]]:
    """The standard test group-groupoids, in a fixed order."""
    return [(s, build_gpgd(s)) for s in CATALOG_SPECS]
