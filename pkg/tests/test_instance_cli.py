import json

import pytest

from auslander import modules as md
from auslander.cli import catalog_names, load, main
from auslander.instance import InstanceError, parse_field, parse_instance_text
from auslander.linalg import GF, QQ

A3_TEXT = """\
[name]
a3
[quiver]
vertices 1 2 3
arrow a 1 2
arrow b 2 3
[relations]
a*b
[module M]
dims 1:1 2:1
arrow a : 1
[subcategory]
P1 P2 S3 S1
[task]
n 2
"""


def test_catalog():
    assert catalog_names() == ["a2", "a3rad2", "field", "kx2"]
    inst = load("a2")
    assert inst.algebra.dim == 3 and inst.generators == ["P1", "S1", "S2"] and inst.n == 1


def test_parse_quiver_instance():
    inst = parse_instance_text(A3_TEXT)
    assert inst.algebra.dim == 5 and inst.n == 2
    assert md.is_isomorphic(inst.resolve("M"), inst.resolve("P1"))
    assert inst.resolve("I2").dim == 2


def test_structure_constants_section():
    text = "[algebra]\ndim 2\nunit 1 1\nidempotents 1 0\nidempotents 0 1\n" \
           "product 0 0 : 1 0\nproduct 1 1 : 0 1\n[module A]\naction 0 : 1\naction 1 : 0\n"
    inst = parse_instance_text(text)
    assert inst.algebra.dim == 2 and inst.algebra.is_associative()
    assert inst.resolve("A").dim == 1


def test_relation_with_coefficients():
    text = "[quiver]\nvertices 1\narrow x 1 1\narrow y 1 1\nmax_path_length 3\n" \
           "[relations]\nx*x\ny*y\nx*y - 1/2 y*x\n"
    inst = parse_instance_text(text)
    assert inst.algebra.dim == 4       # 1, x, y, xy


@pytest.mark.parametrize("text,line,col", [
    ("[quiver]\nvertices 1\narrow a 1\n", 3, 1),
    ("[quiver]\nvertices 1\n[bogus]\n", 3, 1),
    ("vertices 1\n", 1, 1),
    ("[field]\nQQ\n[field]\nQQ\n", 3, 1),
    ("[quiver]\nvertices 1 2\narrow a 1 2\n[module X]\ndims 1:1 3:1\n", 5, 1),
    ("[quiver]\nvertices 1\n[task]\nn zero\n", 4, 1),
])
def test_errors_carry_position(text, line, col):
    with pytest.raises(InstanceError) as ei:
        parse_instance_text(text, "inst.alg")
    assert ei.value.line == line
    assert str(ei.value).startswith(f"inst.alg:{line}:")


def test_field_parsing():
    assert parse_field("QQ") == QQ
    assert parse_field("GF(5)") == GF(5)
    with pytest.raises(Exception):
        parse_field("GF(4)")
    with pytest.raises(InstanceError) as ei:
        parse_instance_text("[field]\nGF(4)\n[quiver]\nvertices 1\n", "x.alg")
    assert ei.value.line == 2


def test_module_failing_relation():
    text = A3_TEXT.replace("[module M]\ndims 1:1 2:1\narrow a : 1\n",
                           "[module M]\ndims 1:1 2:1 3:1\narrow a : 1\narrow b : 1\n")
    with pytest.raises(InstanceError):
        parse_instance_text(text)


@pytest.mark.parametrize("cmd,inst", [(c, i) for c in ("algebra-check", "indecs") for i in
                                      ("field", "kx2", "a2", "a3rad2")] +
                         [("recollement-verify", "a2"), ("recollement-verify", "kx2"),
                          ("ab-compare", "a2"), ("ab-compare", "kx2"), ("nct-check", "a3rad2"),
                          ("ar-duality-table", "a3rad2"), ("ar-duality-table", "kx2"),
                          ("defect", "a3rad2"), ("defect", "a2")])
def test_commands_pass(cmd, inst, capsys):
    assert main([cmd, inst]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out and "time:" in out


def test_failure_exit_code(capsys):
    assert main(["nct-check", "a3rad2", "--generators", "P1,P2,S3"]) == 1
    assert "S1" in capsys.readouterr().out


def test_error_exit_code(tmp_path, capsys):
    p = tmp_path / "bad.alg"
    p.write_text("[field]\nGF(6)\n[quiver]\nvertices 1\n")
    assert main(["algebra-check", str(p)]) == 2
    assert f"{p}:2:" in capsys.readouterr().err
    assert main(["ab-compare", "a3rad2", "--generators", "P1", "P2", "S3"]) == 2
    assert main(["defect", "a2", "--n", "0"]) == 2


def test_structured_output_is_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["defect", "a3rad2", "--format", "structured", "--out", str(a)]) == 0
    assert main(["defect", "a3rad2", "--format", "structured", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    data = json.loads(a.read_text())
    assert data["passed"] is True


def test_field_override(capsys):
    assert main(["indecs", "a3rad2", "--field", "GF(7)"]) == 0
    assert main(["recollement-verify", "a3rad2", "--idempotent", "P1", "P2", "S3"]) == 0
