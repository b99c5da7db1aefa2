import csv
import json
import subprocess
import sys

import pytest

from heisquartic import cli


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_group_report(capsys):
    code, out, _ = run(["group", "--no-timing"], capsys)
    rep = json.loads(out)
    assert code == 0
    assert rep["outputs"]["order"] == 32
    assert rep["pass"] is True


def test_rationals_serialised_as_strings(capsys):
    code, out, _ = run(["seed-kummer", "--p", "1,2,3,4", "--no-timing"], capsys)
    rep = json.loads(out)
    assert code == 0
    assert rep["outputs"]["parameter"][3] == "226/5"


def test_field_elements_carry_tower(capsys):
    code, out, _ = run(["klein", "--from-points", "1,0,0,0;0,1,0,0", "--no-timing"], capsys)
    x = json.loads(out)["outputs"]["klein"]
    assert x[1]["tower"] == [["-1/1"]]
    assert x[1]["coords"] == ["0/1", "1/1"]


def test_config_matrix_csv(tmp_path, capsys):
    path = tmp_path / "m.csv"
    code, out, _ = run(["config-matrix", "--submatrix", "paper", "--csv", str(path), "--quiet"], capsys)
    assert code == 0
    rows = list(csv.reader(path.open()))
    assert rows[0][1] == "4:(0,5)"
    assert rows[1][1:3] == ["-2", "0"]
    assert len(rows) == 17


def test_config_header_records_convention(capsys):
    code, out, _ = run(["config-matrix", "--submatrix", "paper", "--no-timing"], capsys)
    rep = json.loads(out)
    assert rep["outputs"]["convention"] == {"base": 1, "swap_roles": False}
    assert rep["outputs"]["det"] == -512


def test_lattice_invariants_from_file(tmp_path, capsys):
    path = tmp_path / "u.csv"
    path.write_text("0,1\n1,0\n")
    code, out, _ = run(["lattice-invariants", "--from", str(path), "--no-timing"], capsys)
    info = json.loads(out)["outputs"]
    assert info["det"] == -1 and info["signature"] == [1, 1] and info["even"]


def test_lattice_reference_m(capsys):
    code, out, _ = run(["lattice-invariants", "--from", "paperM", "--no-timing"], capsys)
    rep = json.loads(out)
    assert code == 0
    assert rep["outputs"]["index_checks"]["index"] == 2
    assert rep["outputs"]["index_checks"]["disc_ratio"] == "4/1"


def test_json_file(tmp_path, capsys):
    path = tmp_path / "r.json"
    code, _, _ = run(["verify-all", "--only", "group", "--json", str(path), "--quiet"], capsys)
    rep = json.loads(path.read_text())
    assert code == 0
    assert [c["number"] for c in rep["outputs"]["criteria"]] == [1]


def test_only_filters(capsys):
    code, out, err = run(["verify-all", "--only", "1,4", "--only", "fermat", "--no-timing"], capsys)
    rep = json.loads(out)
    assert [c["number"] for c in rep["outputs"]["criteria"]] == [1, 4, 12]
    assert "PASS   1." in err


def test_deterministic_output(capsys):
    argv = ["verify-all", "--only", "igusa", "--seed", "5", "--no-timing"]
    _, a, _ = run(argv, capsys)
    _, b, _ = run(argv, capsys)
    assert a == b
    assert json.loads(a)["inputs"]["seed"] == 5


def test_usage_errors(capsys):
    assert run(["verify-all", "--only", "nope"], capsys)[0] == 2
    assert run(["discriminant", "--u", "1,2,3"], capsys)[0] == 2
    assert run(["discriminant", "--u", "1,1,1,1,1,1"], capsys)[0] == 2
    assert run(["seed-kummer", "--p", "1,2,0,0"], capsys)[0] == 2
    assert run(["lattice-invariants", "--from", "/nonexistent.csv"], capsys)[0] == 2
    assert run(["group", "--csv", "/tmp/never.csv", "--quiet"], capsys)[0] == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["no-such-command"])
    assert exc.value.code == 2


def test_check_failure_exit_code(monkeypatch, capsys):
    from heisquartic import acceptance

    def broken(seed=0):
        return [acceptance.check("always wrong", 1, 2)]

    monkeypatch.setattr(acceptance, "CRITERIA", ((1, "group", "Group structure", broken),))
    monkeypatch.setattr(acceptance, "NAMES", {"group": 1})
    code, out, err = run(["verify-all", "--no-timing"], capsys)
    assert code == 1
    assert "FAIL" in err
    assert json.loads(out)["pass"] is False


def test_exception_is_reported_not_dropped(monkeypatch, capsys):
    from heisquartic import acceptance

    def boom(seed=0):
        raise RuntimeError("kaput")

    monkeypatch.setattr(acceptance, "CRITERIA", ((1, "group", "Group structure", boom),))
    code, out, _ = run(["verify-all", "--no-timing"], capsys)
    rep = json.loads(out)
    assert code == 1
    assert rep["outputs"]["criteria"][0]["error"] == "RuntimeError: kaput"


def test_discriminant_and_loci(capsys):
    code, out, _ = run(["discriminant", "--u", "1,2,3,5,7,-18", "--no-timing"], capsys)
    assert json.loads(out)["outputs"]["singular"] is False
    code, out, _ = run(["loci", "--u", "1,1,1,-1,-1,-1", "--no-timing"], capsys)
    m = json.loads(out)["outputs"]["membership"]
    assert m["segre_node"] and m["nieto_singular"]


def test_hessian_axis(capsys):
    code, out, _ = run(["hessian", "--abcde", "0,1,0,0,0", "--no-timing"], capsys)
    assert json.loads(out)["outputs"]["proportional_to_xyzw_squared"] is True


def test_coplanar(capsys):
    code, out, _ = run(["coplanar", "--x", "1,0,0,0;0,1,0,0", "--y", "0,0,1,0;0,0,0,1", "--no-timing"], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["outputs"]["meet"] is False


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "heisquartic", "group", "--quiet"], capture_output=True)
    assert r.returncode == 0
