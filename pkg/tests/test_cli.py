import json
import subprocess
import sys
from pathlib import Path

import pytest

from darbouxcert import cli, darboux

SPECS = Path(__file__).resolve().parent.parent / "demos" / "specs"
REF = str(SPECS / "reference.json")


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_wd_text_and_json(capsys):
    assert run(capsys, "wd", "-i", REF)[:2] == (0, "w_d = 0, normal = false\n")
    code, out, _ = run(capsys, "wd", "-i", str(SPECS / "jouanolou2.json"), "--format", "json")
    assert code == 0 and json.loads(out) == {"w_d": 7, "normal": True}


def test_beta_and_images_forms_agree(capsys):
    a = run(capsys, "symmetry", "-i", REF, "--format", "json")
    b = run(capsys, "symmetry", "-i", str(SPECS / "reference_beta.json"), "--format", "json")
    assert a == b


def test_symmetry_text_lists_reference_solution(capsys):
    code, out, _ = run(capsys, "symmetry", "-i", REF)
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "64 symmetry solutions modulo 8 (standard degree 1)"
    assert "(3, 5, 3, 1; c=1)  eliminates Λ" in lines
    assert lines[1].startswith("(0, 0, 0, 0; c=0)  trivial")


def test_symmetry_json_matches_text(capsys):
    data = json.loads(run(capsys, "symmetry", "-i", REF, "--format", "json")[1])
    lines = run(capsys, "symmetry", "-i", REF)[1].splitlines()[1:]
    assert len(lines) == len(data["solutions"]) == 64
    for sol, line in zip(data["solutions"], lines):
        w = ", ".join(map(str, sol["weights"]))
        assert line.startswith(f"({w}; c={sol['shift']})")
        assert ("eliminates" in line) == sol["eliminates"]


def test_conjugate(capsys):
    code, out, _ = run(capsys, "conjugate", "-i", REF, "--automorphism", str(SPECS / "reference_sigma.json"))
    assert code == 0
    assert out.splitlines()[-1] == "sigma^-1 d sigma = (z8) * d"
    assert run(capsys, "conjugate", "-i", REF, "--weights", "3,5,3,1")[1] == out


def test_constants_rotation(capsys):
    code, out, _ = run(capsys, "constants", "-i", str(SPECS / "rotation.json"), "--max-degree", "2")
    assert code == 0
    assert out == "degree 1: columns 2, nullity 0\ndegree 2: columns 3, nullity 1\n  x^2 - y^2\n"
    _, js, _ = run(capsys, "constants", "-i", str(SPECS / "rotation.json"), "--max-degree", "2",
                   "--format", "json")
    levels = json.loads(js)["levels"]
    assert [lv["nullity"] for lv in levels] == [0, 1]
    assert levels[1]["basis"] == ["x^2 - y^2"]


def test_constants_reference(capsys):
    _, out, _ = run(capsys, "constants", "-i", REF, "--max-degree", "3", "--format", "json")
    levels = json.loads(out)["levels"]
    assert levels[1]["basis"] == ["x*z - y*t"]


def test_certify_writes_output(capsys, tmp_path):
    target = tmp_path / "cert.json"
    code, out, _ = run(capsys, "certify", "-i", str(SPECS / "euler.json"), "--max-degree", "1",
                       "-o", str(target))
    assert code == 0
    assert out.startswith("verdict: COUNTEREXAMPLE\n")
    data = json.loads(target.read_text())
    assert data["witness"] == {"f": "x", "cofactor": "1"}


def test_certify_json_bytes_independent_of_threads(capsys):
    base = ["certify", "-i", REF, "--max-degree", "1", "--format", "json"]
    one = run(capsys, *base, "--threads", "1")[1]
    four = run(capsys, *base, "--threads", "4", "--oracle-check")[1]
    assert one == four
    assert json.loads(one)["verdict"] == "COUNTEREXAMPLE"


def test_certify_pinned_symmetry(capsys):
    _, out, _ = run(capsys, "certify", "-i", REF, "--max-degree", "1", "--weights", "3,5,3,1",
                    "--shift", "1", "--format", "json")
    assert json.loads(out)["symmetry"] == {"weights": [3, 5, 3, 1], "shift": 1, "modulus": 8}
    assert run(capsys, "certify", "-i", REF, "--weights", "3,5,3,1")[0] == 2


def test_bad_input_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{bad")
    assert run(capsys, "wd", "-i", str(bad))[0] == 2
    bad.write_text('{"vars": ["x"], "images": ["2x"]}')
    code, _, err = run(capsys, "wd", "-i", str(bad))
    assert code == 2 and err.startswith("error:")
    assert run(capsys, "wd", "-i", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "symmetry", "-i", REF, "--modulus", "1")[0] == 2


def test_invariant_violation_exit_3(capsys, monkeypatch):
    def broken(*a, **k):
        raise darboux.InvariantViolation("forced")

    monkeypatch.setattr(cli, "certify_darboux_free", broken)
    code, _, err = run(capsys, "certify", "-i", REF)
    assert code == 3 and "forced" in err


def test_module_entry_point_and_stdin():
    spec = (SPECS / "rotation.json").read_text()
    proc = subprocess.run([sys.executable, "-m", "darbouxcert", "wd", "-i", "-"], input=spec,
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.startswith("w_d = ")


def test_threads_from_environment(capsys, monkeypatch):
    monkeypatch.setenv(cli.THREADS_ENV, "2")
    code, out, _ = run(capsys, "constants", "-i", str(SPECS / "rotation.json"), "--max-degree", "3")
    assert code == 0 and "degree 3" in out
