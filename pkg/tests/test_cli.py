from __future__ import annotations

import json

import pytest

from modres.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_resonance_nonfano(capsys):
    code, out, _ = call(capsys, "resonance", "nonfano", "--field", "2", "--stratum", "2")
    assert code == 0 and out.split() == ["0011110"]


def test_schubert(capsys):
    code, out, _ = call(capsys, "schubert", "--k", "5", "--expr", "s(1)^4")
    assert code == 0 and out.strip() == "3*W(3,1) + 2*W(2,2)"
    code, out, _ = call(capsys, "schubert", "--k", "5", "--degree", "1,1,1,1", "1", "--json")
    assert code == 0 and json.loads(out)["degree"]["degree"] == 3
    code, out, _ = call(capsys, "schubert", "--k", "5", "--degree", "[]", "4")
    assert code == 0 and "degree = 1" in out


def test_verify(capsys):
    code, out, _ = call(capsys, "verify", "braid", "--field", "3", "--k", "1")
    assert code == 0 and out.strip().endswith("OK")


def test_zmap(capsys):
    code, out, _ = call(capsys, "zmap", "deletedB3", "--field", "2", "--weight", "01100101", "--json")
    data = json.loads(out)
    assert code == 0 and data["dim"] == 3 and data["gamma"] == "145|2|3|6|8 cones=7"
    code, out, _ = call(capsys, "zmap", "braid", "--field", "5", "--weight", "1,0,0,0,0,0")
    assert code == 0 and "not resonant" in out


def test_constituents_json_is_stable(capsys):
    _, a, _ = call(capsys, "constituents", "braid", "--field", "5", "--json")
    _, b, _ = call(capsys, "constituents", "braid", "--field", "5", "--json")
    assert a == b
    data = json.loads(a)
    assert len(data["constituents"]) == 5


def test_carrier(capsys):
    code, out, _ = call(capsys, "carrier", "hessian", "--field", "3", "--gamma", "123|456|789|abc", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["ambient_dim"] == 4 and data["hypersurface"]["degree"] == 3
    assert len(data["directrices"]) == 4 and data["complex_size"] == 22
    code, _, err = call(capsys, "carrier", "braid", "--field", "3", "--gamma", "13|24|56")
    assert code == 2 and "not neighborly" in err


def test_catalog(capsys):
    code, out, _ = call(capsys, "catalog", "--json")
    names = [m["name"] for m in json.loads(out)["matroids"]]
    assert code == 0 and names[:4] == ["braid", "nonfano", "deletedB3", "hessian"]


@pytest.mark.parametrize("argv", [
    ["resonance", "nosuch"],
    ["resonance", "braid", "--field", "6"],
    ["zmap", "braid", "--field", "3", "--weight", "110000"],
    ["schubert", "--k", "5", "--expr", "q(1)"],
    ["schubert", "--k", "5"],
    ["frobnicate"],
    [],
])
def test_usage_errors(capsys, argv):
    assert call(capsys, *argv)[0] == 2


def test_cap_refusal(capsys):
    code, _, err = call(capsys, "resonance", "hessian", "--field", "5", "--cap-points", "1000")
    assert code == 3 and "61035156" in err


def test_file_input(capsys, tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"name": "mine", "n": 6, "lines": [[1, 3, 6], [1, 4, 5], [2, 3, 5], [2, 4, 6]]}))
    code, out, _ = call(capsys, "verify", str(path), "--field", "2", "--k", "1")
    assert code == 0
