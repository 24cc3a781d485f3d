"""Command-line behavior: reports, exit codes, JSON output, determinism."""

import json
import subprocess
import sys

import pytest

from lefcoin.cli import main

MOBIUS = {
    "name": "mobius",
    "vertex_count": 5,
    "facets": [[0, 1, 2], [1, 2, 3], [2, 3, 4], [3, 4, 0], [4, 0, 1]],
    "subcomplex_facets": [[0, 2], [1, 3], [2, 4], [0, 3], [1, 4]],
}


@pytest.fixture
def mobius_files(tmp_path):
    cpath = tmp_path / "mobius.json"
    cpath.write_text(json.dumps(MOBIUS))
    mpath = tmp_path / "id.json"
    mpath.write_text(json.dumps(
        {"source": "mobius", "target": "mobius", "vertex_images": [0, 1, 2, 3, 4]}
    ))
    return str(cpath), str(mpath)


def test_homology_text_report(capsys):
    assert main(["homology", "builtin:torus"]) == 0
    out = capsys.readouterr().out
    assert "betti: 1 2 1" in out
    assert "status: orientable" in out


def test_homology_from_file(mobius_files, capsys):
    cpath, _ = mobius_files
    assert main(["homology", cpath]) == 0
    out = capsys.readouterr().out
    assert "complex mobius" in out
    assert "status: non-orientable" in out


def test_unknown_builtin_exits_2(capsys):
    assert main(["homology", "builtin:klein"]) == 2
    assert "unknown builtin" in capsys.readouterr().err


def test_missing_file_exits_2(capsys):
    assert main(["homology", "nowhere/missing.json"]) == 2
    assert "not a file" in capsys.readouterr().err


def test_malformed_document_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"name": "x"}')
    assert main(["homology", str(bad)]) == 2


def test_bad_field_token_exits_2(capsys):
    assert main(["homology", "builtin:c3", "--field", "p:4"]) == 2
    assert "prime" in capsys.readouterr().err


def test_duality_failure_exits_3(mobius_files, capsys):
    cpath, mpath = mobius_files
    assert main(["lefschetz", cpath, cpath, mpath, mpath]) == 3
    assert "fundamental class" in capsys.readouterr().err


def test_lefschetz_report_and_json(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code = main([
        "lefschetz", "builtin:torus", "builtin:c3", "builtin:proj-left", "const:0",
        "--oracle", "--json", str(out_path),
    ])
    assert code == 0
    out = capsys.readouterr().out
    assert "condition A: true" in out
    assert "any nonzero: true" in out
    assert "witness:" in out
    doc = json.loads(out_path.read_text())
    assert doc["any_nonzero"] is True
    assert doc["oracle"]["status"] == "witness"
    coeffs = {(e["degree"], e["index"]): e["coefficients"] for e in doc["entries"]}
    assert coeffs[(1, 1)] == ["1"]


def test_wong_values(capsys):
    assert main(["wong", "builtin:c3", "builtin:c3", "builtin:identity"]) == 0
    assert "pairing: -1" in capsys.readouterr().out
    assert main(["wong", "builtin:c6", "builtin:c3", "builtin:double"]) == 0
    assert "pairing: -2" in capsys.readouterr().out


def test_transfer_report(capsys):
    code = main(["transfer", "builtin:torus", "builtin:c3", "builtin:proj-left",
                 "--degree", "2"])
    assert code == 0
    assert "shift 1" in capsys.readouterr().out


def test_knill_equality(capsys):
    code = main(["knill", "builtin:c3", "builtin:c3", "builtin:proj-right",
                 "--degree", "1"])
    assert code == 0
    assert "equal: true" in capsys.readouterr().out


def test_witness_command(capsys):
    code = main(["witness", "builtin:c3", "builtin:c3", "builtin:rot", "builtin:identity"])
    assert code == 0
    assert "disjoint" in capsys.readouterr().out


def test_verify_small_run_passes(capsys):
    assert main(["verify", "--seed", "11", "--trials", "1"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("coincidence invariant suite")
    assert out.endswith("PASS\n")


def test_verify_builtins_only_mod_five(capsys):
    assert main(["verify", "--field", "p:5", "--trials", "0"]) == 0
    assert "field=p:5" in capsys.readouterr().out


def test_verify_reports_are_deterministic(capsys):
    assert main(["verify", "--seed", "9", "--trials", "2"]) == 0
    first = capsys.readouterr().out
    assert main(["verify", "--seed", "9", "--trials", "2"]) == 0
    second = capsys.readouterr().out
    assert first == second


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "lefcoin", "homology", "builtin:s2"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert "betti: 1 0 1" in proc.stdout
