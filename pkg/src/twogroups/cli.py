"""Command line front end: ``python -m twogroups [options] <command> ...``.

Exit status: 0 pass, 1 fail (an axiom or check failed), 2 usage or load
error, 3 enumeration cap exceeded, 4 internal consistency failure.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import groups as gr
from .actions import (characteristic_iff_hol_normal, characteristic_witness, compatibility_failure,
                      conjugation_action, holomorph, identity_action, semidirect_gpgd,
                      trivial_action)
from .actor import (actor_data, actor_tower, center_divergence, center_gpgd, inner_outer_actor,
                    is_complete)
from .bridge import (phi_to_xmod, psi_to_gpgd, roundtrip_check, verify_actor_corollary,
                     verify_isoact)
from .catalog import build
from .config import AlgebraError, CapExceeded, InternalError, ValidationError, using
from .gpgd import (GroupGroupoid, SubGroupGroupoid, abelianization, commutator_subgpgd,
                   export_dot, trivial_subgpgd, validate_gpgd, whole_subgpgd)
from .groups import FiniteGroup, GroupHom
from .textio import Workspace, WorkspaceError, format_gpgd, format_group, format_xmod, parse_workspace
from .xmod import (CrossedModule, actor_xmod_data, derivations, regularity_table, validate_xmod)

EXIT_PASS, EXIT_FAIL, EXIT_ERROR, EXIT_CAP, EXIT_BUG = 0, 1, 2, 3, 4


class UsageError(AlgebraError):
    pass


class Out:
    """Human lines or JSON records, one per line, in emission order."""

    def __init__(self, as_json: bool, stream=None):
        self.as_json = as_json
        self.stream = stream or sys.stdout

    def emit(self, record: str, text: str, /, **fields):
        if self.as_json:
            print(json.dumps({"record": record, **fields}, sort_keys=True), file=self.stream)
        else:
            print(text, file=self.stream)


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _verdict(out: Out, command: str, passed: bool, diagnostics=()) -> int:
    for d in diagnostics:
        out.emit("diagnostic", f"  {d}", message=str(d))
    out.emit("verdict", f"{command}: {'PASS' if passed else 'FAIL'}", command=command,
             passed=bool(passed))
    return EXIT_PASS if passed else EXIT_FAIL


# name resolution ----------------------------------------------------------

def resolve(ws: Workspace, ref: str, *kinds):
    """A workspace name, or failing that builtin shorthand."""
    k = ws.kind_of(ref)
    if k is not None:
        if kinds and k not in kinds:
            raise UsageError(f"{ref!r} is a {k}, expected {' or '.join(kinds)}")
        return ws.get(ref)
    try:
        obj = build(ref)
    except ValidationError as exc:
        if exc.axiom == "builtin syntax":
            raise UsageError(f"unknown name {ref!r}") from None
        raise
    kind = {FiniteGroup: "group", GroupGroupoid: "gpgd", CrossedModule: "xmod"}[type(obj)]
    if kinds and kind not in kinds:
        raise UsageError(f"{ref!r} is a {kind}, expected {' or '.join(kinds)}")
    return obj


def _gpgd(ws, ref) -> GroupGroupoid:
    return resolve(ws, ref, "gpgd")


def _xmod(ws, ref) -> CrossedModule:
    return resolve(ws, ref, "xmod")


def _orders(G: GroupGroupoid) -> dict:
    return {"arrows": G.arrows.order, "objects": G.objects.order}


# commands -----------------------------------------------------------------

def cmd_verify(ws, args, out):
    obj = resolve(ws, args.name)
    if isinstance(obj, FiniteGroup):
        FiniteGroup(obj.table, obj.name)
        out.emit("group", f"group {obj.name}: order {obj.order}, abelian: {_yn(obj.is_abelian())}",
                 name=obj.name, order=obj.order, abelian=obj.is_abelian())
    elif isinstance(obj, GroupHom):
        w = gr.hom_failure(obj.src, obj.dst, obj.map)
        if w is not None:
            return _verdict(out, "verify", False, [f"homomorphism fails at {w}"])
        out.emit("hom", f"hom {obj.src.name} -> {obj.dst.name}", map=list(obj.map))
    elif isinstance(obj, CrossedModule):
        validate_xmod(obj.top, obj.base, obj.alpha, obj.action, obj.name)
        out.emit("xmod", f"xmod {obj.name}: |A| = {obj.top.order}, |B| = {obj.base.order}",
                 name=obj.name, top=obj.top.order, base=obj.base.order)
    elif isinstance(obj, GroupGroupoid):
        validate_gpgd(obj.arrows, obj.objects, obj.d0, obj.d1, obj.eps, obj.name)
        out.emit("gpgd", f"gpgd {obj.name}: |G1| = {obj.arrows.order}, |G0| = {obj.objects.order}",
                 name=obj.name, **_orders(obj))
    elif isinstance(obj, SubGroupGroupoid):
        out.emit("sub", f"sub of {obj.parent.name}: arrows {list(obj.arrows.members)}, "
                        f"objects {list(obj.objects.members)}, normal: {_yn(obj.normal)}",
                 arrows=list(obj.arrows.members), objects=list(obj.objects.members),
                 normal=obj.normal)
    else:
        fail = compatibility_failure(obj.actor_src, obj.target, obj.induced1, obj.induced0)
        if fail is not None:
            return _verdict(out, "verify", False, [f"{fail[0]} fails at {fail[1]}"])
        out.emit("action", f"action of {obj.actor_src.name} on {obj.target.name}",
                 acting=obj.actor_src.name, on=obj.target.name)
    return _verdict(out, "verify", True)


def cmd_derivations(ws, args, out):
    X = _xmod(ws, args.xmod)
    ds = derivations(X)
    rows = regularity_table(X)
    out.emit("count", f"Der({X.base.name}, {X.top.name}) has {len(ds)} derivations",
             derivations=len(ds))
    agree = True
    for i, r in enumerate(rows):
        agree &= r.unit == r.theta_bijective == r.sigma_bijective
        out.emit("derivation", f"  d{i} = {list(r.derivation.map)}  regular: {_yn(r.unit)}  "
                               f"theta bijective: {_yn(r.theta_bijective)}  "
                               f"sigma bijective: {_yn(r.sigma_bijective)}",
                 index=i, map=list(r.derivation.map), unit=r.unit,
                 theta_bijective=r.theta_bijective, sigma_bijective=r.sigma_bijective)
    nreg = sum(r.unit for r in rows)
    out.emit("rd", f"RD order {nreg}", rd=nreg)
    return _verdict(out, "derivations", agree,
                    [] if agree else ["regularity criteria disagree"])


def cmd_actor(ws, args, out):
    obj = resolve(ws, args.name, "xmod", "gpgd")
    if isinstance(obj, CrossedModule):
        act = actor_xmod_data(obj)
        Y = act.xmod
        inj = Y.alpha.is_injective()
        out.emit("actor", f"RD order {Y.top.order}, Aut order {Y.base.order}, "
                          f"Δ injective: {_yn(inj)}",
                 rd=Y.top.order, aut=Y.base.order, delta_injective=inj)
        return _verdict(out, "actor", True)
    data = actor_data(obj)
    out.emit("actor", f"W order {data.W.order}, Aut order {data.Aut.order}",
             w=data.W.order, aut=data.Aut.order)
    for i, f in enumerate(data.auts):
        out.emit("aut", f"  f{i}: f1 = {list(f.f1.map)}, f0 = {list(f.f0.map)}",
                 index=i, f1=list(f.f1.map), f0=list(f.f0.map))
    for i, e in enumerate(data.transfs):
        out.emit("transf", f"  w{i}: {data.aut_of(e.f)} => {data.aut_of(e.g)}, "
                           f"components {list(e.comp)}",
                 index=i, src=data.aut_of(e.f), dst=data.aut_of(e.g), components=list(e.comp))
    IO = inner_outer_actor(obj)
    out.emit("inner_outer", f"I order {IO.inner.arrows.order}/{IO.inner.objects.order}, "
                            f"O order {IO.outer.arrows.order}/{IO.outer.objects.order}",
             inner=[IO.inner.arrows.order, IO.inner.objects.order],
             outer=[IO.outer.arrows.order, IO.outer.objects.order])
    for node, ok in IO.exact.items():
        out.emit("exact", f"  exact at {node}: {_yn(ok)}", node=node, exact=ok)
    return _verdict(out, "actor", all(IO.exact.values()))


def cmd_center(ws, args, out):
    G = _gpgd(ws, args.gpgd)
    Z = center_gpgd(G)
    div = center_divergence(G)
    ab = Z.is_whole()
    out.emit("center", f"Z({G.name}): arrows {list(Z.arrows.members)}, objects "
                       f"{list(Z.objects.members)}",
             arrows=list(Z.arrows.members), objects=list(Z.objects.members))
    out.emit("abelian", f"abelian: {_yn(ab)}, trivial centre: {_yn(Z.is_trivial())}",
             abelian=ab, trivial=Z.is_trivial())
    notes = [f"Ker phi and elementwise centre differ on {k}: {v}" for k, v in div.items()]
    for n in notes:
        out.emit("divergence", f"  {n}", message=n)
    return _verdict(out, "center", True)


def cmd_abelianization(ws, args, out):
    G = _gpgd(ws, args.gpgd)
    D = commutator_subgpgd(G)
    Q = abelianization(G)
    out.emit("derived", f"G' arrows {list(D.arrows.members)}, objects {list(D.objects.members)}",
             arrows=list(D.arrows.members), objects=list(D.objects.members))
    ab = Q.arrows.is_abelian() and Q.objects.is_abelian()
    out.emit("quotient", f"G/G': |G1| = {Q.arrows.order}, |G0| = {Q.objects.order}, "
                         f"abelian: {_yn(ab)}", abelian=ab, **_orders(Q))
    return _verdict(out, "abelianization", ab)


def cmd_bs(ws, args, out):
    if args.direction == "to-xmod":
        X = phi_to_xmod(_gpgd(ws, args.name))
        out.emit("xmod", f"phi: |A| = {X.top.order}, |B| = {X.base.order}, "
                         f"alpha = {list(X.alpha.map)}",
                 top=X.top.order, base=X.base.order, alpha=list(X.alpha.map))
        return _verdict(out, "bs to-xmod", True)
    if args.direction == "to-gpgd":
        G = psi_to_gpgd(_xmod(ws, args.name))
        out.emit("gpgd", f"psi: |G1| = {G.arrows.order}, |G0| = {G.objects.order}", **_orders(G))
        return _verdict(out, "bs to-gpgd", True)
    rep = roundtrip_check(resolve(ws, args.name, "gpgd", "xmod"))
    if rep.passed:
        w = rep.witness
        out.emit("witness", f"witness: {w!r}", witness=repr(w))
    return _verdict(out, "bs roundtrip", rep.passed, rep.diagnostics)


def cmd_isoact(ws, args, out):
    G = _gpgd(ws, args.gpgd)
    rep = verify_isoact(G)
    out.emit("isoact", f"<xi, lambda>: {'isomorphism' if rep.passed else 'not an isomorphism'}",
             passed=rep.passed)
    if rep.passed:
        w = rep.witness
        out.emit("witness", f"  xi = {list(w.fA.map)}, lambda = {list(w.fB.map)}",
                 xi=list(w.fA.map), lam=list(w.fB.map))
    cor = verify_actor_corollary(G)
    out.emit("corollary", f"actor(phi(G)) ~ phi(A(G)): {_yn(cor.passed)}", passed=cor.passed)
    return _verdict(out, "isoact", rep.passed and cor.passed, rep.diagnostics + cor.diagnostics)


def cmd_holomorph(ws, args, out):
    G = _gpgd(ws, args.gpgd)
    H = holomorph(G)
    out.emit("holomorph", f"Hol({G.name}): |G1| = {H.arrows.order}, |G0| = {H.objects.order}, "
                          f"arrows abelian: {_yn(H.arrows.is_abelian())}",
             abelian=H.arrows.is_abelian(), **_orders(H))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(format_gpgd("Hol", H))
        out.emit("written", f"written to {args.out}", path=args.out)
    return _verdict(out, "holomorph", True)


def cmd_tower(ws, args, out):
    G = _gpgd(ws, args.gpgd)
    stages = actor_tower(G, args.max)
    for i, S in enumerate(stages):
        out.emit("stage", f"stage {i}: |G1| = {S.arrows.order}, |G0| = {S.objects.order}",
                 stage=i, **_orders(S))
    done = is_complete(stages[-1])
    if done:
        out.emit("tower", f"complete at stage {len(stages) - 1}", complete_at=len(stages) - 1)
    else:
        out.emit("tower", f"not complete after {args.max} steps", complete_at=None)
    return _verdict(out, "tower", done)


def _sub(ws, G: GroupGroupoid, ref: str) -> SubGroupGroupoid:
    fixed = {"derived": commutator_subgpgd, "center": center_gpgd, "centre": center_gpgd,
             "zero": trivial_subgpgd, "whole": whole_subgpgd}
    if ref in fixed and ws.kind_of(ref) is None:
        return fixed[ref](G)
    H = resolve(ws, ref, "sub")
    if H.parent != G:
        raise UsageError(f"{ref!r} is not a subgroup-groupoid of {G.name}")
    return H


def cmd_characteristic(ws, args, out):
    G = _gpgd(ws, args.gpgd)
    H = _sub(ws, G, args.sub)
    rep = characteristic_iff_hol_normal(G, H)
    w = rep.witness
    out.emit("characteristic", f"characteristic: {_yn(w['characteristic'])}, "
                               f"normal in Hol: {_yn(w['normal_in_hol'])}", **w)
    if not w["characteristic"]:
        kind, idx = characteristic_witness(G, H)
        out.emit("witness", f"  moved by {kind} element {idx}", kind=kind, index=idx)
    return _verdict(out, "characteristic", rep.passed, rep.diagnostics)


def _action(ws, spec: str):
    if ws.kind_of(spec) == "action":
        return ws.get(spec)
    kind, sep, arg = spec.partition(":")
    if kind == "identity" and sep:
        return identity_action(_gpgd(ws, arg))
    if kind == "conjugation" and sep:
        G = _gpgd(ws, arg)
        return conjugation_action(G, whole_subgpgd(G))
    if kind == "trivial" and sep and "," in arg:
        h, g = arg.split(",", 1)
        return trivial_action(_gpgd(ws, h), _gpgd(ws, g))
    raise UsageError(f"bad action spec {spec!r}: use a named action, identity:<gpgd>, "
                     "conjugation:<gpgd> or trivial:<H>,<G>")


def cmd_semidirect(ws, args, out):
    act = _action(ws, args.action)
    S = semidirect_gpgd(act)
    out.emit("semidirect", f"{S.name}: |G1| = {S.arrows.order}, |G0| = {S.objects.order}",
             name=S.name, **_orders(S))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(format_gpgd("S", S))
        out.emit("written", f"written to {args.out}", path=args.out)
    return _verdict(out, "semidirect", True)


def cmd_export_dot(ws, args, out):
    G = _gpgd(ws, args.gpgd)
    export_dot(G, args.path, include_identities=args.include_identities)
    out.emit("written", f"written {args.path}", path=args.path)
    return _verdict(out, "export-dot", True)


def cmd_builtin(ws, args, out):
    obj = build(args.spec)
    if isinstance(obj, FiniteGroup):
        text = format_group("G", obj)
    elif isinstance(obj, GroupGroupoid):
        text = format_gpgd("G", obj)
    else:
        text = format_xmod("X", obj)
    if args.as_json:
        out.emit("builtin", "", spec=args.spec, text=text)
    else:
        out.stream.write(text)
    return EXIT_PASS


# parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-f", "--file", action="append", dest="files", default=argparse.SUPPRESS,
                        help="object file to load (repeatable)")
    common.add_argument("--json", action="store_true", dest="as_json", default=argparse.SUPPRESS,
                        help="one JSON record per line")
    common.add_argument("--cap", type=int, default=argparse.SUPPRESS,
                        help="largest group order to enumerate automorphisms of")

    p = argparse.ArgumentParser(prog="twogroups", parents=[common],
                                description="Finite group-groupoids and crossed modules.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    add("verify", cmd_verify, "re-run every axiom check on a named object").add_argument("name")
    add("derivations", cmd_derivations, "list derivations and regularity").add_argument("xmod")
    add("actor", cmd_actor, "actor of a crossed module or group-groupoid").add_argument("name")
    add("center", cmd_center, "centre of a group-groupoid").add_argument("gpgd")
    add("abelianization", cmd_abelianization, "G/G'").add_argument("gpgd")
    sp = add("bs", cmd_bs, "Brown-Spencer translation")
    sp.add_argument("direction", choices=["to-xmod", "to-gpgd", "roundtrip"])
    sp.add_argument("name")
    add("isoact", cmd_isoact, "compare the two actors across phi").add_argument("gpgd")
    sp = add("holomorph", cmd_holomorph, "G x| A(G)")
    sp.add_argument("gpgd")
    sp.add_argument("--out", help="write the result in the text format")
    sp = add("tower", cmd_tower, "actor tower up to a complete stage")
    sp.add_argument("gpgd")
    sp.add_argument("--max", type=int, default=3)
    sp = add("characteristic", cmd_characteristic, "characteristic vs normal in Hol")
    sp.add_argument("gpgd")
    sp.add_argument("sub", help="derived, center, zero, whole or a named sub block")
    sp = add("semidirect", cmd_semidirect, "semidirect product of an action")
    sp.add_argument("action")
    sp.add_argument("--out", help="write the result in the text format")
    sp = add("export-dot", cmd_export_dot, "write a DOT diagram")
    sp.add_argument("gpgd")
    sp.add_argument("path")
    sp.add_argument("--include-identities", action="store_true")
    add("builtin", cmd_builtin, "print a builtin object in the text format").add_argument("spec")
    return p


def main(argv=None, stream=None) -> int:
    args = build_parser().parse_args(argv)
    files = getattr(args, "files", [])
    args.as_json = getattr(args, "as_json", False)
    overrides = {"cap": args.cap} if getattr(args, "cap", None) is not None else {}
    out = Out(args.as_json, stream)
    err = sys.stderr
    try:
        with using(**overrides):
            ws = parse_workspace(files)
            code = args.fn(ws, args, out)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=err)
        return EXIT_CAP
    except InternalError as exc:
        print(f"internal error (bug): {exc}", file=err)
        return EXIT_BUG
    except WorkspaceError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_FAIL if isinstance(exc.cause, ValidationError) else EXIT_ERROR
    except ValidationError as exc:
        out.emit("failure", f"FAIL: {exc}", axiom=exc.axiom, witness=repr(exc.witness),
                 detail=exc.detail)
        return EXIT_FAIL
    except (UsageError, AlgebraError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ERROR
    return code


if __name__ == "__main__":
    sys.exit(main())
