import json
import subprocess
import sys

import pytest

from skewpbw.cli import main

from conftest import DEMO_RINGS


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def ring(name):
    return str(DEMO_RINGS / f"{name}.json")


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0
    names = [line.split()[0] for line in out.splitlines()]
    assert set(names) == {"quantum-plane", "quantum-torus", "multiplicative-weyl",
                          "skew-3dim", "diffusion", "dqsq"}


def test_catalog_show(capsys):
    code, out, _ = run(capsys, "catalog", "show", "quantum-plane")
    assert code == 0 and "x2*x1 = q*x1*x2" in out
    code, out, _ = run(capsys, "catalog", "show", "--json", "dqsq")
    assert code == 0 and json.loads(out)["name"] == "dqsq"
    with pytest.raises(SystemExit) as info:
        main(["catalog", "show"])
    assert info.value.code == 2
    assert "usage:" in capsys.readouterr().err
    code, _, err = run(capsys, "catalog", "show", "nosuch")
    assert code == 2 and err.startswith("error:")


def test_multiply_example(capsys):
    code, out, _ = run(capsys, "multiply", "--ring", "dqsq", "d1", "x1^2")
    assert code == 0 and out.strip() == "q^2*x1^2*d1 + (q+1)*x1"
    code, out, _ = run(capsys, "multiply", "--json", "--ring", "quantum-plane", "x2", "x1", "x2")
    assert json.loads(out)["product"] == "q*x1*x2^2"


def test_classify_example(capsys):
    code, out, _ = run(capsys, "classify", "--ring", ring("o3"), "--endo", "diag")
    assert code == 0
    assert out.splitlines()[0] == "Diagonal ε=+1, λ=(2,3,q12)"


def test_classify_methods(capsys):
    code, out, _ = run(capsys, "classify", "--ring", ring("shifted-space"), "--endo", "affine")
    assert code == 0 and out.splitlines()[0] == "Affine ε=+1, λ=(2,7,1/3), a0=(0,6,0)"
    assert "  x2 -> 7*x2 + 6" in out.splitlines()
    code, out, _ = run(capsys, "classify", "--ring", ring("torus3"), "--endo", "invert")
    assert code == 0 and out.startswith("Diagonal ε=-1")
    code, out, _ = run(capsys, "classify", "--ring", ring("o3"), "--endo", "diag", "--method", "ore")
    assert code == 0 and out.startswith("Diagonal ε=+1")
    code, out, _ = run(capsys, "classify", "--ring", "quantum-plane", "--endo", "diag")
    assert code == 0 and out.startswith("HypothesesNotMet")


def test_classify_json_schema(capsys):
    code, out, _ = run(capsys, "classify", "--json", "--ring", ring("o3"), "--endo", "mixed")
    assert code == 1
    data = json.loads(out)
    assert {"verdict", "scalars", "epsilon", "reasons"} <= set(data)
    assert data["verdict"] == "NotEndomorphism" and data["reasons"]
    code, out, _ = run(capsys, "classify", "--json", "--ring", ring("o3"), "--endo", "diag")
    data = json.loads(out)
    assert data["verdict"] == "Diagonal" and data["scalars"] == ["2", "3", "q12"] and data["epsilon"] == 1


def test_validate(capsys):
    code, out, _ = run(capsys, "validate", "--ring", "dqsq")
    assert code == 0 and "valid" in out
    code, out, _ = run(capsys, "validate", "--json", "--ring", "dqsq", "--endo", "shift")
    data = json.loads(out)
    assert code == 1 and not data["valid"] and data["violations"][0]["kind"] == "endomorphism"
    code, out, _ = run(capsys, "validate", "--ring", ring("o3"), "--max-degree", "2")
    assert code == 0


def test_gr(capsys):
    code, out, _ = run(capsys, "gr", "--json", "--ring", "skew-3dim")
    data = json.loads(out)
    assert code == 0 and data["bijective"] and len(data["relations"]) == 3
    assert all("+" not in rel for rel in data["relations"])


def test_localize(capsys):
    code, out, _ = run(capsys, "localize", "--ring", ring("ore-derivations"), "d1*t1", "d2")
    assert code == 0
    assert "psi(d1*t1) = 2*t1*d1 + 1" in out
    assert "multiplicative on the given elements: yes" in out


def test_laurent(capsys):
    code, out, _ = run(capsys, "laurent", "--json", "--ring", "quantum-plane", "--r", "2")
    data = json.loads(out)
    assert code == 0 and data["r"] == 2
    row = next(x for x in data["commutation"] if x["t"] == 1 and x["s"] == -1)
    assert row["scalar"] == "q^-1"
    code, _, err = run(capsys, "laurent", "--ring", "dqsq", "--r", "1")
    assert code == 2 and "quasi-commutative" in err


def test_independence(capsys):
    code, out, _ = run(capsys, "independence", "--ring", ring("o3"))
    assert code == 0 and out.startswith("independent")
    code, out, _ = run(capsys, "independence", "--json", "--ring", "skew-3dim", "2", "3", "6")
    data = json.loads(out)
    assert not data["independent"] and data["replays"]
    code, _, err = run(capsys, "independence", "--ring", "skew-3dim", "--prime-bound", "3", "14")
    assert code == 2 and err.startswith("error:")


@pytest.mark.parametrize("argv, message", [
    (("validate", "--ring", "nosuch"), "no such ring"),
    (("multiply", "--ring", "dqsq", "x1 +* 2"), "column 5"),
    (("classify", "--ring", "dqsq", "--endo", "nosuch"), "no endomorphism"),
    (("multiply", "--ring", "dqsq", "x1^-1"), "negative exponent"),
])
def test_errors_exit_two(capsys, argv, message):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    assert err.startswith("error:") and message in err


def test_bad_document(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"name": "x",\n "variables": }')
    code, _, err = run(capsys, "validate", "--ring", str(path))
    assert code == 2 and "line 2" in err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "skewpbw", "multiply", "--ring", "quantum-plane", "x2", "x1"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout.strip() == "q*x1*x2"
