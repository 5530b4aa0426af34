import pytest

from twogroups import groups as gr
from twogroups.catalog import CATALOG_XMOD_SPECS, build_xmod
from twogroups.config import CapExceeded, ValidationError
from twogroups.gpgd import pair_gpgd
from twogroups.textio import (Workspace, WorkspaceError, format_gpgd, format_group, format_hom,
                              format_xmod, parse_text, parse_workspace)

Z3_TEXT = """\
# the cyclic group of order 3
begin group Z3
order 3
table
0 1 2
1 2 0
2 0 1
end
"""

Z2_IN_Z4 = """\
begin group Z2
order 2
table
0 1
1 0
end
begin hom inc : Z2 -> cyclic:4
map 0->0 1->2
end
begin xmod X
top Z2
base cyclic:4
alpha inc
action
0 1
0 1
0 1
0 1
end
"""


def test_one_group():
    ws = parse_text(Z3_TEXT)
    assert ws.names() == ["Z3"]
    assert ws.groups["Z3"] == gr.cyclic(3)


def test_hom_and_xmod_blocks():
    ws = parse_text(Z2_IN_Z4)
    assert ws.kind_of("inc") == "hom" and ws.homs["inc"].map == (0, 2)
    X = ws.xmods["X"]
    assert X.top.order == 2 and X.base.order == 4
    assert X.alpha.map == (0, 2)


def test_gpgd_sub_and_action_blocks():
    text = """
builtin P pair-gpgd:z3
begin sub D : P
arrows 0 4 8
end
begin sub K : P
arrows 0
objects 0
end
begin action T
acting P
on P
theta1 0->0 1->0 2->0 3->0 4->0 5->0 6->0 7->0 8->0
theta0 0->0 1->0 2->0
end
"""
    ws = parse_text(text)
    assert ws.subs["D"].objects.members == (0, 1, 2)
    assert ws.subs["K"].arrows.members == (0,) and ws.subs["K"].objects.members == (0,)
    act = ws.actions["T"]
    assert act.actor_src == act.target == pair_gpgd(gr.cyclic(3))
    assert (act.induced1 == list(range(9))).all()


def test_gpgd_block_with_builtin_groups():
    text = """
begin hom s : z2*z2 -> z2
map 0->0 1->1 2->0 3->1
end
begin hom t : z2*z2 -> z2
map 0->0 1->0 2->1 3->1
end
begin hom e : z2 -> z2*z2
map 0->0 1->3
end
begin gpgd P
arrows z2*z2
objects z2
d0 t
d1 s
eps e
end
"""
    ws = parse_text(text)
    assert ws.gpgds["P"] == pair_gpgd(gr.cyclic(2))


def test_gpgd_round_trip(member):
    ws = parse_text(format_gpgd("G", member))
    assert ws.gpgds["G"] == member
    assert set(ws.names()) == {"G", "G_1", "G_0", "G_d0", "G_d1", "G_eps"}


@pytest.mark.parametrize("spec", CATALOG_XMOD_SPECS)
def test_xmod_round_trip(spec):
    X = build_xmod(spec)
    Y = parse_text(format_xmod("X", X)).xmods["X"]
    assert Y.top == X.top and Y.base == X.base and Y.alpha == X.alpha
    assert (Y.action == X.action).all()


def test_writers_are_stable():
    G = pair_gpgd(gr.symmetric(3))
    assert format_gpgd("G", G) == format_gpgd("G", pair_gpgd(gr.symmetric(3)))
    assert format_group("A", gr.cyclic(2)) == "begin group A\norder 2\ntable\n0 1\n1 0\nend\n"
    h = gr.validate_hom(gr.cyclic(2), gr.cyclic(4), [0, 2])
    assert format_hom("h", h, "A", "B") == "begin hom h : A -> B\nmap 0->0 1->2\nend\n"


def load_error(text) -> WorkspaceError:
    with pytest.raises(WorkspaceError) as ei:
        parse_text(text, "f.txt")
    return ei.value


def test_dangling_reference_names_it():
    e = load_error("begin hom f : Cube -> Cube\nmap 0->0 1->1 2->2\nend\n")
    assert "undefined group 'Cube'" in str(e)
    assert e.file == "f.txt" and e.line == 1
    e = load_error("builtin P pair-gpgd:z2\nbegin sub H : Q\narrows 0\nend\n")
    assert "undefined gpgd 'Q'" in str(e) and e.line == 2
    e = load_error("builtin P pair-gpgd:z3\nbegin sub K : P\narrows 0 1 2\nend\n")
    assert "closed under d1" in str(e)


def test_duplicate_name():
    e = load_error(Z3_TEXT + "\n" + Z3_TEXT)
    assert "duplicate name 'Z3'" in str(e) and e.line == 11


def test_cm2_violation_rejected_at_load_time():
    # S3 -> 1 with the trivial action fails the Peiffer identity
    rows = "\n".join(" ".join(map(str, range(6))) for _ in range(1))
    text = f"""
begin hom z : s3 -> trivial
map 0->0 1->0 2->0 3->0 4->0 5->0
end
begin xmod X
top s3
base trivial
alpha z
action
{rows}
end
"""
    e = load_error(text)
    assert isinstance(e.cause, ValidationError) and e.cause.axiom == "CM2"
    assert e.cause.witness is not None
    assert e.line == 5


def test_syntax_errors_have_lines():
    assert load_error("begin group A\norder 2\ntable\n0 1\nend\n").line == 3
    assert load_error("begin group A\norder 2\n").line == 2
    assert "expected 'begin" in str(load_error("hello\n"))
    e = load_error("begin hom f : z2 -> z2\nmap 0->0 1->x\nend\n")
    assert e.line == 2 and "bad map entry" in str(e)
    e = load_error("begin hom f : z2 -> z2\nmap 0->0\nend\n")
    assert "must be total" in str(e)
    e = load_error("begin group A\norder 2\ntable\n0 1\n1 1\nend\n")
    assert isinstance(e.cause, ValidationError) and e.line == 1


def test_not_a_homomorphism_is_rejected():
    e = load_error("begin hom f : z4 -> z2\nmap 0->0 1->1 2->1 3->0\nend\n")
    assert isinstance(e.cause, ValidationError)
    assert e.cause.witness is not None


def test_kind_mismatch():
    e = load_error(Z3_TEXT + "begin gpgd G\narrows Z3\nobjects Z3\nd0 Z3\nd1 Z3\neps Z3\nend\n")
    assert "is a group, not a hom" in str(e)


def test_files_share_a_namespace(tmp_path):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    a.write_text(Z3_TEXT)
    b.write_text("begin hom n : Z3 -> Z3\nmap 0->0 1->2 2->1\nend\n")
    ws = parse_workspace([a, b])
    assert ws.homs["n"].is_bijective()
    with pytest.raises(WorkspaceError) as ei:
        parse_workspace([a, a])
    assert ei.value.file == str(a)
    with pytest.raises(WorkspaceError) as ei:
        parse_workspace([tmp_path / "missing.txt"])
    assert "cannot read" in str(ei.value)


def test_parse_workspace_config_applies_caps(tmp_path):
    f = tmp_path / "a.txt"
    f.write_text("builtin P pair-gpgd:z3\nbegin action T\nacting P\non P\n"
                 "theta1 " + " ".join(f"{i}->0" for i in range(9)) + "\ntheta0 0->0 1->0 2->0\nend\n")
    assert "T" in parse_workspace([f]).actions
    with pytest.raises(CapExceeded):
        parse_workspace([f], {"cap": 4})


def test_workspace_add_and_get():
    ws = Workspace()
    ws.add("group", "A", gr.cyclic(2))
    with pytest.raises(KeyError):
        ws.add("gpgd", "A", pair_gpgd(gr.cyclic(2)))
    with pytest.raises(KeyError):
        ws.get("B")
