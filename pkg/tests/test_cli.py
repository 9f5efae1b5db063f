import io
import json
import subprocess
import sys

import pytest

from superweyl.cli import run
from superweyl.rootdata import parse_family, root_system
from superweyl.serialize import CharacterReport, character_from_json, character_json


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def call_json(*argv):
    code, text = call(*argv, "--json")
    return code, json.loads(text)


def test_roots_gl12():
    code, rep = call_json("roots", "gl:1,2")
    assert code == 0
    assert rep["counts"] == {"even": 2, "odd": 4}
    assert rep["system"] == [[1, -1, 0], [0, 1, -1]]
    assert [rep["roots"][i]["root"] for i in rep["base"]] == rep["system"]
    # isotropic row unnormalized: (a,a) = 0, (a,b) = 1; even row: 2(b,a)/(b,b) = -1
    assert rep["cartan"] == [["0", "1"], ["-1", "2"]]


def test_check_system_remark_case():
    code, rep = call_json("check-system", "gl:1,2", "--system", "distinguished")
    assert code == 0 and rep["holds"] is False
    code, rep = call_json("check-system", "gl:1,2", "--system", "reflect:0")
    assert code == 0 and rep["holds"] is True


def test_weyl_sl2():
    code, rep = call_json("weyl", "sl:2", "--psi", "0:1")
    assert code == 0 and rep["dimension"] == 2
    assert list(rep)[:6] == ["algebra", "system", "psi", "truncation", "dimension", "character"]
    assert rep["psi"] == [{"point": "0", "weight": ["1", "0"]}]


def test_json_is_byte_stable():
    a = call("weyl", "osp:1,2", "--psi", "0:1;1:1", "--json")
    b = call("weyl", "osp:1,2", "--psi", "0:1;1:1", "--json")
    assert a == b


def test_character_report_round_trip():
    code, text = call("weyl", "sl:1,2", "--psi", "0:1,1", "--json")
    data = json.loads(text)
    rep = CharacterReport.from_json(data)
    assert rep.to_json() == {k: v for k, v in data.items() if k != "seed"}
    assert rep.dimension == sum(rep.character.values()) == 4
    assert rep.system_object().roots == rep.system
    ch = rep.character
    assert character_from_json(character_json(ch)) == ch


def test_kac_and_reflect():
    code, rep = call_json("kac", "sl:1,2", "--weight", "0,0")
    assert code == 0 and rep["dimension"] == 4 and rep["psi"] is None
    code, rep = call_json("kac", "sl:1,2", "--weight", "0,0", "--system", "reflect:0")
    assert rep["dimension"] == 1
    code, rep = call_json("reflect", "gl:2,2", "1")
    fam = parse_family("gl:2,2")
    assert rep["system"] == [[1, 0, -1, 0], [0, -1, 1, 0], [0, 1, 0, -1]]
    assert rep["steps"][0] == [list(r) for r in root_system(fam)[1].roots]


def test_tensor_and_garland():
    code, rep = call_json("tensor-check", "sl:2", "--psi1", "0:1", "--psi2", "1:1")
    assert code == 0 and rep["holds"] and rep["dimensions"] == [2, 2, 4]
    code, rep = call_json("garland", "sl:2", "--psi", "0:2", "--m", "3")
    assert code == 0 and rep["holds"]
    assert all(not r["residual"] for r in rep["residuals"])


@pytest.mark.parametrize("argv,code,reason", [
    (["weyl", "sl:2", "--psi", "0:1;0:1"], 2, "invalid-input"),
    (["tensor-check", "sl:2", "--psi1", "0:1", "--psi2", "0:1"], 2, "invalid-input"),
    (["weyl", "sl:2", "--psi", "0:-1"], 2, "invalid-input"),
    (["weyl", "sl:2", "--psi", "0:1.5"], 2, "invalid-input"),
    (["roots", "gl:x"], 2, "invalid-input"),
    (["frobnicate"], 2, "invalid-input"),
    ([], 2, "invalid-input"),
    (["weyl", "sl:2"], 2, "invalid-input"),
    (["weyl", "F4", "--psi", "0:1"], 3, "unsupported"),
    (["weyl", "gl:1,2", "--system", "distinguished", "--psi", ""], 3, "unsupported"),
    (["weyl", "gl:1,1", "--psi", ""], 3, "unsupported"),
    (["reflect", "osp:1,2", "0"], 2, "invalid-input"),
])
def test_errors(argv, code, reason):
    got, text = call(*argv)
    assert got == code
    assert json.loads(text)["error"] == reason


def test_dimension_limit_env(monkeypatch):
    monkeypatch.setenv("SUPERWEYL_MAX_DIM", "3")
    code, text = call("weyl", "sl:2", "--psi", "0:2")
    assert code == 3 and json.loads(text)["error"] == "dimension-limit"


def test_selftest_and_table():
    code, text = call("selftest")
    assert code == 0 and "holds: True" in text
    code, text = call("weyl", "sl:2", "--psi", "0:1", "--table")
    assert code == 0 and "dimension: 2" in text


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "superweyl", "roots", "osp:1,2", "--json"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["counts"] == {"even": 2, "odd": 2}
