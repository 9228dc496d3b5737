import json
import subprocess
import sys

import pytest

from endvertex.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_info_cyclic(capsys):
    code, out, _ = run(capsys, "info", "Cyclic(6)")
    assert code == 0
    assert "order:        6" in out and "rad(|G|):     6" in out


def test_info_json(capsys):
    code, out, _ = run(capsys, "info", "--json", "Dihedral(12)")
    doc = json.loads(out)
    assert code == 0 and doc["order"] == 12 and doc["order_multiset"]["6"] == 2
    assert doc["p_group"] is None


def test_info_presented(capsys):
    code, out, _ = run(capsys, "info", 'Presented("< a | a^5=e >")')
    assert code == 0 and "order:        5" in out and "p = 5" in out


def test_info_from_file(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text('Presented("< a,b | a^5 = b^8 = e, bab^-1 = a^2 >")\n')
    code, out, _ = run(capsys, "info", "-f", str(path))
    assert code == 0 and "order:        40" in out


def test_parse_error_exit_2(capsys):
    code, out, err = run(capsys, "info", "Cyclic(")
    assert code == 2 and out == "" and "position" in err
    assert run(capsys, "info")[0] == 2


def test_realization_error_exit_3(capsys):
    code, _, err = run(capsys, "analyze", "Dihedral(7)")
    assert code == 3 and "Dihedral" in err
    assert run(capsys, "graph", 'Presented("< a, b | a^2 >")')[0] == 3


def test_graph_dot_z4(capsys):
    code, out, err = run(capsys, "graph", "Cyclic(4)", "--format", "dot")
    assert code == 0
    assert out.count("doublecircle") == 3 and out.count("--") == 3
    assert "|E_G| = 3" in err


def test_graph_json_z6(capsys):
    code, out, err = run(capsys, "graph", "Cyclic(6)", "--format", "json")
    assert code == 0 and "|E_G| = 2" in err
    assert len(json.loads(out)["edges"]) == 7


def test_graph_trivial(capsys):
    code, out, _ = run(capsys, "graph", "Cyclic(1)")
    assert code == 0 and json.loads(out)["edges"] == []


def test_graph_output_file_is_stable(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "graph", "Dicyclic(20)", "-o", str(a))
    run(capsys, "graph", "Dicyclic(20)", "-o", str(b))
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize("spec, needle", [
    ("Dicyclic(12)", "sharp=True"),
    ("Symmetric(3)", "|E_G| = 0"),
    ("Cyclic(8)", "two_group=True"),
])
def test_analyze(capsys, spec, needle):
    code, out, _ = run(capsys, "analyze", spec)
    assert code == 0 and needle in out
    assert "FAILS" not in out


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "--json", "Cyclic(8)")
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    parity = next(c for c in doc["checks"] if c["name"] == "parity")
    assert parity["details"] == {"end_vertex_count": 7, "two_group": True}


def test_classify_three(capsys):
    code, out, _ = run(capsys, "classify", "3", "--json")
    doc = json.loads(out)
    assert code == 0
    assert {m["label"] for m in doc["matches"]} == {"Z4", "Z2xZ2"}


def test_classify_five(capsys):
    code, out, _ = run(capsys, "classify", "5")
    assert code == 0 and "odd, 6 not a power of 2" in out


def test_classify_json_is_byte_stable(capsys):
    _, a, _ = run(capsys, "classify", "6", "--json")
    _, b, _ = run(capsys, "classify", "6", "--json", "--jobs", "2")
    assert a == b


def test_verify_subcommand(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0 and out.strip().endswith("verify-paper: PASS")


def test_catalog_listing(capsys):
    code, out, _ = run(capsys, "catalog", "--json")
    doc = json.loads(out)
    assert code == 0 and len(doc["entries"]) > 100
    assert all(e["end_vertices"] == e["expect"] for e in doc["entries"] if e["expect"] is not None)


def test_bad_catalog_exit_2(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("Z2 | Cyclic(2)\n")
    code, _, err = run(capsys, "classify", "1", "--catalog", str(path))
    assert code == 2 and "line 1" in err
    assert run(capsys, "verify-paper", "--catalog", str(tmp_path / "missing.txt"))[0] == 2


def test_catalog_env_var(capsys, tmp_path, monkeypatch):
    path = tmp_path / "mini.txt"
    path.write_text("Z2 | Cyclic(2) | order=2 | expect=1\n")
    monkeypatch.setenv("ENDVERTEX_CATALOG", str(path))
    code, out, _ = run(capsys, "classify", "1", "--json")
    assert code == 0 and [m["label"] for m in json.loads(out)["matches"]] == ["Z2"]


def test_failing_classification_exit_1(capsys, tmp_path):
    path = tmp_path / "wrong.txt"
    path.write_text("@complete 6\nZ6 | Cyclic(6) | order=6\nExtra | Cyclic(6) | order=6\n")
    assert run(capsys, "classify", "2", "--catalog", str(path))[0] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "endvertex", "info", "Cyclic(6)"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "order:        6" in proc.stdout
