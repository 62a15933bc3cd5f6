import json
import subprocess
import sys

import pytest

from ncktheory.charring import Character, RationalCharacter, SuperChar, schur_super
from ncktheory.cli import main
from ncktheory.freealg import FiltrationReport, GradedGenSet
from ncktheory.quiver import p2_point_rep, p2_presentation


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def trivial_ot():
    e = SuperChar.zero(0)
    return {"e": e.to_json(), "ovir": RationalCharacter.from_character(Character.constant(1, 0)).to_json()}


def test_example_xn(capsys):
    code, out, _ = run(capsys, "example", "xn", "--n", "3")
    data = json.loads(out)
    assert code == 0 and data["match"] is True and data["euler_characteristic"] == 3
    assert set(data["ncvir"].values()) == {"3"}


def test_example_c3(capsys):
    code, out, _ = run(capsys, "example", "c3", "--d", "1")
    data = json.loads(out)
    assert code == 0 and data["match"] is True
    assert data["alternative"]["match"] is False
    assert data["engine_bracket"] == data["target_bracket"]


def test_example_p2_table(capsys):
    code, out, _ = run(capsys, "example", "p2", "--format", "table")
    assert code == 0
    assert any(line.split() == ["match", "true"] for line in out.splitlines())


@pytest.mark.parametrize("d", [0, 1, 4])
def test_ncvir_trivial(capsys, tmp_path, d):
    path = write(tmp_path, "ot.json", trivial_ot())
    code, out, _ = run(capsys, "ncvir", "--input", path, "--d", str(d))
    assert code == 0
    r = RationalCharacter.from_json(json.loads(out)["ncvir"])
    assert r == RationalCharacter.from_character(Character.constant(1, 0))


def test_schur_and_roundtrip(capsys, tmp_path):
    x = Character.variable(0, 1)
    g = SuperChar(x + x * x, Character.constant(1, 1))
    path = write(tmp_path, "s.json", {"lambda": [2, 1], "g": g.to_json()})
    code, out, _ = run(capsys, "schur", "--input", path)
    data = json.loads(out)
    assert code == 0
    assert SuperChar.from_json(data["superchar"]) == schur_super((2, 1), g)
    assert Character.from_json(data["k_class"]) == schur_super((2, 1), g).k_class()


def test_lie_with_oracle(capsys, tmp_path):
    g = SuperChar(Character.constant(2, 0), Character.zero(0))
    path = write(tmp_path, "g.json", {"g": g.to_json()})
    code, out, _ = run(capsys, "lie", "--input", path, "--max-n", "5", "--oracle")
    rows = json.loads(out)["lie"]
    assert code == 0
    assert [r["dimension"] for r in rows] == [r["oracle"] for r in rows] == [2, 1, 2, 3, 6]


def test_grfilt(capsys, tmp_path):
    path = write(tmp_path, "gens.json", GradedGenSet.mixed(2, 1).to_json())
    code, out, _ = run(capsys, "grfilt", "--input", path, "--n", "4")
    data = json.loads(out)
    assert code == 0 and data["match"] is True
    assert FiltrationReport.from_json(data["filtration"]) == FiltrationReport.from_json(data["envelope"])


def test_qsq_and_quiver_presets(capsys):
    code, out, _ = run(capsys, "qsq", "--preset", "p2", "--show-q")
    data = json.loads(out)
    assert code == 0 and data["ok"] is True and len(data["h0_relations"]) == 9
    code, out, _ = run(capsys, "quiver", "--preset", "p2")
    data = json.loads(out)
    assert code == 0 and len(data["quiver"]["relations"]) == 9


def test_quiver_with_rep(capsys, tmp_path):
    rep = p2_point_rep()
    path = write(tmp_path, "q.json", {"presentation": p2_presentation().to_json(), "rep": rep.to_json()})
    code, out, _ = run(capsys, "quiver", "--input", path)
    data = json.loads(out)
    assert code == 0 and data["rep"]["stability"] == "stable" and data["rep"]["mc_residual_zero"]


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--seed", "2")
    data = json.loads(out)
    assert code == 0 and data["ok"] is True and len(data["checks"]) == 10


def test_determinism(capsys, tmp_path):
    outs = [run(capsys, "selftest", "--seed", "7")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    path = write(tmp_path, "gens.json", GradedGenSet.mixed(1, 2).to_json())
    outs = [run(capsys, "grfilt", "--input", path, "--n", "3")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_schema_errors(capsys, tmp_path):
    code, _, err = run(capsys, "ncvir", "--input", write(tmp_path, "bad.json", {"e": 1}))
    assert code == 2 and "$" in err
    code, _, err = run(capsys, "ncvir")
    assert code == 2
    (tmp_path / "broken.json").write_text("{not json")
    code, _, err = run(capsys, "schur", "--input", str(tmp_path / "broken.json"))
    assert code == 2 and "invalid JSON" in err
    code, _, _ = run(capsys, "schur", "--input", write(tmp_path, "l.json", {"lambda": [1, 2], "g": {}}))
    assert code == 2
    code, _, _ = run(capsys, "example", "xn", "--n", "0")
    assert code == 2


def test_budget_errors(capsys, tmp_path):
    path = write(tmp_path, "gens.json", GradedGenSet.mixed(2, 0).to_json())
    code, _, err = run(capsys, "grfilt", "--input", path, "--n", "5", "--budget", "3")
    assert code == 3 and "budget" in err
    x = Character.variable(0, 1)
    spath = write(tmp_path, "s.json", {"lambda": [3], "g": SuperChar(x, x).to_json()})
    code, _, _ = run(capsys, "schur", "--input", spath, "--exp-budget", "2")
    assert code == 3


def test_stdin_and_module_entry(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "ncktheory", "ncvir", "--input", "-"],
                          input=json.dumps(trivial_ot()), capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["d"] == 1
