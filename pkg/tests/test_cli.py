import json
import subprocess
import sys

import pytest

from superschur.cli import main

GOLDEN = "x1^2*x2*y1 + x1^2*y1^2 + x1*x2^2*y1 + 2*x1*x2*y1^2 + x1*y1^3 + x2^2*y1^2 + x2*y1^3"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert out.endswith("\n") and out.count("\n") == 1
    return code, json.loads(out)


def test_compute_golden(capsys):
    code, data = run_json(capsys, "compute", "--shape", "2,1,1", "--k", "2", "--l", "1", "--method", "both")
    assert code == 0
    assert data["equal"] is True
    assert data["tableau"]["expression"] == GOLDEN == data["det"]["expression"]


def test_compute_empty_shape(capsys):
    code, data = run_json(capsys, "compute", "--shape", "", "--k", "1", "--l", "1")
    assert code == 0 and data["tableau"]["expression"] == "1"


def test_compute_non_hook_warns(capsys):
    code, out, err = run(capsys, "compute", "--shape", "2,2,2", "--k", "1", "--l", "1", "--method", "both")
    assert code == 0 and "warning" in err
    data = json.loads(out)
    assert data["tableau"]["terms"] == [] and data["equal"] is True


def test_compute_csv(capsys):
    code, out, _ = run(capsys, "compute", "--shape", "2,1,1", "--k", "2", "--l", "1", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "a1,a2,b1,coef"
    assert "1,1,2,2" in lines and len(lines) == 8


def test_support_and_lattice(capsys):
    args = ("--shape", "2,1,1", "--k", "2", "--l", "1")
    _, supp = run_json(capsys, "support", *args)
    _, lat = run_json(capsys, "lattice", *args)
    assert supp["count"] == 7
    assert lat["count"] == 8
    extra = {tuple(p) for p in lat["points"]} - {tuple(p) for p in supp["points"]}
    assert extra == {(0, 3, 1)}


def test_vertices(capsys):
    code, data = run_json(capsys, "vertices", "--shape", "2,1,1", "--k", "2", "--l", "1")
    assert code == 0 and data["integral"] is True and data["count"] == 5
    code, _, _ = run(capsys, "vertices", "--shape", "1", "--k", "4", "--l", "3")
    assert code == 3


def test_maximize(capsys):
    code, data = run_json(capsys, "maximize", "--shape", "2,1,1", "--k", "2", "--l", "1", "--c", "1,0,0")
    assert code == 0 and data["value"] == 2
    assert run(capsys, "maximize", "--shape", "2,1,1", "--k", "2", "--l", "1", "--c", "1,0")[0] == 2
    assert run(capsys, "maximize", "--shape", "2,1,1", "--k", "2", "--l", "1")[0] == 2


def test_verify_snp_exit_codes(capsys):
    code, data = run_json(capsys, "verify-snp", "--shape", "2,1,1", "--k", "2", "--l", "1")
    assert code == 1 and data["counterexample"] == [0, 3, 1]
    assert run_json(capsys, "verify-snp", "--shape", "2,1", "--k", "1", "--l", "1")[0] == 0
    assert run(capsys, "verify-snp", "--shape", "2,2,2", "--k", "1", "--l", "1")[0] == 2


def test_verify_snp_direct(capsys):
    code, data = run_json(capsys, "verify-snp", "--shape", "2,1,1", "--k", "2", "--l", "1", "--direct")
    assert code == 1 and data["direct"]["passed"] is True


@pytest.mark.parametrize(
    "argv",
    [
        ("compute", "--shape", "1,2", "--k", "1", "--l", "1"),
        ("compute", "--shape", "a", "--k", "1", "--l", "1"),
        ("compute", "--shape", "1", "--k", "-1", "--l", "1"),
        ("compute", "--shape", "1"),
        ("lattice", "--shape", "2,2,2", "--k", "1", "--l", "1"),
        ("rado", "--shape", "1,1", "--k", "1"),
        ("nonsense",),
        ("compute", "--shape", "1", "--k", "1", "--l", "1", "--cap-tu", "0"),
    ],
)
def test_invalid_input(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_tu_commands(capsys, tmp_path):
    assert run_json(capsys, "tu", "--shape", "2,1,1", "--k", "2", "--l", "1")[0] == 0
    circ = tmp_path / "circulant3.json"
    circ.write_text("[[1,1,0],[0,1,1],[1,0,1]]")
    code, data = run_json(capsys, "tu", "--matrix", str(circ))
    assert code == 1 and data["counterexample"]["det"] == 2
    ident = tmp_path / "identity3.json"
    ident.write_text("[[1,0,0],[0,1,0],[0,0,1]]")
    assert run_json(capsys, "tu", "--matrix", str(ident))[0] == 0
    bad = tmp_path / "bad.json"
    bad.write_text("[[1,2],[3]]")
    assert run(capsys, "tu", "--matrix", str(bad))[0] == 2
    assert run(capsys, "tu", "--matrix", str(tmp_path / "missing.json"))[0] == 2
    code, data = run_json(capsys, "tu", "--shape", "3,1", "--k", "4", "--l", "3", "--cap-tu", "5")
    assert code == 3 and data["checks"]["interval"] is True


def test_rado(capsys):
    assert run_json(capsys, "rado", "--shape", "2", "--k", "1")[0] == 0
    code, data = run_json(capsys, "rado", "--shape", "2,1", "--k", "3")
    assert code == 1 and data["counts"]["B"] == 9


def test_out_file(capsys, tmp_path):
    target = tmp_path / "pts.csv"
    code, out, _ = run(capsys, "lattice", "--shape", "1", "--k", "2", "--l", "0", "--format", "csv", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text(encoding="utf-8") == "a1,a2\n0,1\n1,0\n"


def test_sweep_deterministic_and_jobs_independent(capsys, monkeypatch):
    args = ("verify-snp", "--sweep", "--max-size", "4", "--max-k", "2", "--max-l", "2")
    first = run(capsys, *args, "--jobs", "1")
    second = run(capsys, *args, "--jobs", "1")
    parallel = run(capsys, *args, "--jobs", "3")
    monkeypatch.setenv("SUPERSCHUR_JOBS", "2")
    from_env = run(capsys, *args)
    assert first == second == parallel == from_env
    data = json.loads(first[1])
    assert first[0] == 1 and data["instances"] == data["passed"] + data["failed"]


def test_tu_sweep(capsys):
    code, data = run_json(capsys, "tu", "--sweep", "--max-size", "4", "--max-k", "2", "--max-l", "2", "--jobs", "2")
    assert code == 0 and data["failed"] == 0


def test_sweep_needs_bounds(capsys):
    assert run(capsys, "verify-snp", "--sweep", "--max-size", "3")[0] == 2
    assert run(capsys, "verify-snp", "--sweep", "--max-size", "3", "--max-k", "4", "--max-l", "3")[0] == 3


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "superschur", "compute", "--shape", "2,1,1", "--k", "2", "--l", "1", "--method", "both"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["det"]["expression"] == GOLDEN
