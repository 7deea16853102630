import dataclasses
import json

import pytest

from syzstab.catalog import catalog_directory
from syzstab.cli import main
from syzstab.destabilize import DestabilizationReport

BL2P2 = str(catalog_directory() / "bl2p2.json")
P2 = str(catalog_directory() / "p2.json")


def test_validate_catalog_file_exits_zero(capsys):
    assert main(["validate", BL2P2]) == 0
    out = capsys.readouterr().out
    assert "structural checks: pass" in out


def test_validate_asymmetric_matrix_exits_one(tmp_path, capsys):
    doc = json.loads((catalog_directory() / "bl2p2.json").read_text())
    doc["intersection_matrix"][0][1] = 2
    del doc["expected_flags"]
    path = tmp_path / "asym.json"
    path.write_text(json.dumps(doc))
    assert main(["validate", str(path)]) == 1
    out = capsys.readouterr().out
    assert "[FAIL] symmetric" in out


def test_validate_malformed_rational_exits_two(tmp_path, capsys):
    doc = json.loads((catalog_directory() / "bl2p2.json").read_text())
    doc["canonical_class"] = ["1/0", 1, 1]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    assert main(["validate", str(path)]) == 2
    assert "zero denominator" in capsys.readouterr().err


def test_missing_file_exits_two(capsys):
    assert main(["validate", "/nonexistent/surface.json"]) == 2


def test_slope_command(tmp_path, capsys):
    out_path = tmp_path / "slope.json"
    code = main([
        "slope", BL2P2, "line-L",
        "--polarization", "1,0,0",
        "--twist", "0",
        "--json-out", str(out_path),
    ])
    assert code == 0
    out = capsys.readouterr().out
    assert "-1/2" in out
    assert "h^1" in out  # assumption tag is printed
    payload = json.loads(out_path.read_text())
    assert payload["slope"] == "-1/2"
    assert payload["twist_d"] == 0
    assert payload["assumptions"]


def test_slope_undefined_exits_one(tmp_path, capsys):
    doc = json.loads((catalog_directory() / "bl2p2.json").read_text())
    doc["bundles"] = [{"name": "starved", "rank": 2, "c1": [0, 1, 0], "c2": 9}]
    del doc["expected_flags"]
    path = tmp_path / "starved.json"
    path.write_text(json.dumps(doc))
    assert main(["slope", str(path), "starved", "--polarization", "1,0,0"]) == 1
    assert "slope undefined" in capsys.readouterr().err


def test_slope_unknown_bundle_exits_one(capsys):
    assert main(["slope", BL2P2, "nope", "--polarization", "1,0,0"]) == 1
    assert "no bundle named" in capsys.readouterr().err


def test_slope_bad_polarization_exits_two(capsys):
    assert main(["slope", BL2P2, "line-L", "--polarization", "1,0"]) == 2
    assert main(["slope", BL2P2, "line-L", "--polarization", "1,0,x"]) == 2


def test_criterion_command(tmp_path, capsys):
    out_path = tmp_path / "criterion.json"
    code = main([
        "criterion", BL2P2, "running-rank2",
        "--s-class", "0,1,0",
        "--polarization", "3,-2,-1",
        "--json-out", str(out_path),
    ])
    assert code == 0
    out = capsys.readouterr().out
    assert "= 30" in out  # stated condition value at the boundary class
    payload = json.loads(out_path.read_text())
    assert payload["stated_condition_value"] == "30"
    assert payload["base_condition_value"] == "2"
    assert payload["coefficients"]["matches"] is False
    assert payload["oracle_verdict_unstable_for_large_d"] is True
    assert payload["d0"] == 0


def test_criterion_paper_mode_prints_non_authoritative(capsys):
    code = main([
        "criterion", BL2P2, "running-rank2",
        "--s-class", "0,1,0",
        "--polarization", "3,-2,-1",
        "--paper-mode",
    ])
    assert code == 0
    out = capsys.readouterr().out
    assert "non-authoritative" in out


def test_destabilize_sidecar_covers_every_report_field(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code = main(["destabilize", BL2P2, "running-rank2", "--json-out", str(out_path)])
    assert code == 0
    payload = json.loads(out_path.read_text())
    for field in dataclasses.fields(DestabilizationReport):
        assert field.name in payload, field.name
    assert payload["t0"] == "1"
    assert payload["epsilon"] == "1/8"
    assert payload["chain_value"] == "2"
    assert payload["chain_lower_bound"] == "0"
    assert payload["quadratic"] == {"a2": "7/4", "a1": "7/2", "a0": "3/8"}
    assert payload["d0"] == 0
    # exact rationals ride as strings, never floats
    assert isinstance(payload["strengthened_value"], str)
    out = capsys.readouterr().out
    assert "destabilizing polarization found" in out


def test_destabilize_hypothesis_violation_exits_one(capsys):
    assert main(["destabilize", P2, "rank2-twisted"]) == 1
    err = capsys.readouterr().err
    assert "picard-rank>=3" in err


def test_destabilize_paper_mode(capsys):
    code = main(["destabilize", BL2P2, "running-rank2", "--paper-mode"])
    assert code == 0
    out = capsys.readouterr().out
    assert "non-authoritative" in out
    assert "closed-form matches interpolation: False" in out


def test_batch_deterministic_bytes(tmp_path):
    first = tmp_path / "first.json"
    second = tmp_path / "second.json"
    assert main(["batch", "--json-out", str(first)]) == 0
    assert main(["batch", "--json-out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    payload = json.loads(first.read_text())
    statuses = {(e["surface"], e["bundle"]): e["status"] for e in payload["entries"]}
    assert statuses[("bl2p2", "running-rank2")] == "success"
    assert statuses[("p2", "rank2-twisted")] == "hypothesis-violation"


def test_batch_catalog_dir_flag(tmp_path, capsys):
    import shutil

    shutil.copy(catalog_directory() / "p2.json", tmp_path / "p2.json")
    code = main(["batch", "--catalog-dir", str(tmp_path)])
    assert code == 0
    out = capsys.readouterr().out
    assert "p2 / line-H: hypothesis-violation" in out
    assert "bl2p2" not in out
