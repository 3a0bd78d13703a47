import json

import pytest

from superheis import cli


def run(capsys, *argv):
    rc = cli.main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def test_verify_json_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for out in (a, b):
        assert cli.main(["verify", "--suite", "core", "--seed", "3", "--samples", "10", "--json", str(out), "--quiet"]) == 0
    assert a.read_bytes() == b.read_bytes()
    doc = json.loads(a.read_text())
    assert doc["config"]["seed"] == 3 and doc["summary"]["error"] == 0


def test_verify_seed_changes_random_inputs(tmp_path):
    outs = []
    for seed in (1, 2):
        p = tmp_path / f"{seed}.json"
        cli.main(["verify", "--suite", "unitary", "--seed", str(seed), "--samples", "5", "--json", str(p), "--quiet"])
        outs.append(p.read_text())
    assert outs[0] != outs[1]


def test_verify_summary_line(capsys):
    rc, out, _ = run(capsys, "verify", "--suite", "groups", "--samples", "5")
    assert rc == 0 and out.startswith("groups: ")


def test_verify_custom_G(tmp_path, capsys):
    g = write(tmp_path, "g.json", {"m": 2, "G": [[0, "4"], ["-4", 0]]})
    rc, out, _ = run(capsys, "verify", "--suite", "bargmann", "--G", g, "--json", "-", "--quiet")
    doc = json.loads(out)
    assert rc == 0
    hermite = [r for r in doc["records"] if r["name"].startswith("bargmann.hermite")]
    assert {r["verdict"] for r in hermite} == {"pass"}


@pytest.mark.parametrize("argv", [["verify", "--suite", "nope"], ["verify", "--suite", "core", "--m", "7"], [], ["frobnicate"]])
def test_usage_errors(argv, capsys):
    assert cli.main(argv) == 2


def test_compute_fw(tmp_path, capsys):
    one = {"terms": [{"indices": [], "re": "1", "im": "0"}]}
    path = write(tmp_path, "fw.json", {"m": 1, "f": one, "g": one})
    rc, out, _ = run(capsys, "compute", "fw", path)
    doc = json.loads(out)
    assert rc == 0
    assert doc["generators"] == ["zeta1", "Pi1", "Theta1"]
    assert doc["value"] == {"terms": [{"indices": [3], "re": "0", "im": "-1"}]}


def test_compute_bargmann(tmp_path, capsys):
    one = {"terms": [{"indices": [], "re": "1"}]}
    path = write(tmp_path, "b.json", {"G": {"m": 2, "G": [[0, 1], [-1, 0]]}, "f": one})
    rc, out, _ = run(capsys, "compute", "bargmann", path)
    doc = json.loads(out)
    assert rc == 0
    assert {"indices": [], "re": "1/4", "im": "0"} in doc["value"]["terms"]
    assert doc["fock"]["terms"][0] == {"indices": [], "re": "1/4", "im": "0"}


def test_compute_pfaffian_and_output_file(tmp_path, capsys):
    path = write(tmp_path, "g.json", {"G": [[0, 1, 2, 3], [-1, 0, 4, 5], [-2, -4, 0, 6], [-3, -5, -6, 0]]})
    out = tmp_path / "pf.txt"
    assert cli.main(["compute", "pfaffian", path, "-o", str(out)]) == 0
    assert out.read_text() == "8\n"


def test_compute_oddon_mul(tmp_path, capsys):
    data = {"n": 2, "r": {"kind": "real", "b": {"terms": [{"indices": [], "re": "1"}]}},
            "s": {"kind": "real", "a": {"terms": [{"indices": [1], "re": "1"}]}}}
    rc, out, _ = run(capsys, "compute", "oddon-mul", write(tmp_path, "o.json", data))
    doc = json.loads(out)
    assert rc == 0
    assert doc["value"]["b"] == {"terms": [{"indices": [1], "re": "1", "im": "0"}]}
    assert doc["value"]["a"] == {"terms": []}


def test_compute_bad_input_reports_path(tmp_path, capsys):
    bad = {"m": 1, "f": {"terms": [{"indices": [9], "re": "1"}]}, "g": {"terms": []}}
    rc, _, err = run(capsys, "compute", "fw", write(tmp_path, "bad.json", bad))
    assert rc == 1 and "$.f.terms[0].indices[0]" in err


def test_compute_missing_key_and_bad_json(tmp_path, capsys):
    rc, _, err = run(capsys, "compute", "fw", write(tmp_path, "x.json", {"f": {"terms": []}}))
    assert rc == 1 and "'g'" in err
    p = tmp_path / "broken.json"
    p.write_text("{")
    assert cli.main(["compute", "fw", str(p)]) == 1
    assert cli.main(["compute", "fw", str(tmp_path / "missing.json")]) == 1


def test_svn(tmp_path, capsys):
    rc, out, _ = run(capsys, "svn", "--form", write(tmp_path, "f.json", {"omega_odd": [["1", 0], [0, "1"]]}))
    assert rc == 0 and out.strip() == "ExistsUnique"
    rc, out, _ = run(capsys, "svn", "--form", write(tmp_path, "f.json", {"omega_odd": [[1, 0], [0, -1]]}))
    assert out.strip() == "None"
    rc, _, _ = run(capsys, "svn", "--form", write(tmp_path, "f.json", {"omega_odd": [[1]], "beta": "-1"}))
    assert rc == 1
