import json

import pytest

from cubicode.cli import build_claims, main

M1_LPRIME = {"0": 1, "18": 24, "27": 2}


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_weights_text(capsys):
    code, out, _ = run(capsys, "weights", "--m", "1", "--set", "lprime")
    assert code == 0
    assert "method=formula" in out
    assert "18" in out and "24" in out


def test_weights_json(capsys):
    code, out, _ = run(
        capsys, "weights", "--m", "1", "--set", "lprime", "--method", "enumerate",
        "--output", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["entries"] == M1_LPRIME
    assert payload["method"] == "enumerated"


def test_weights_csv(capsys):
    code, out, _ = run(
        capsys, "weights", "--m", "1", "--set", "units", "--output", "csv"
    )
    assert code == 0
    assert out.splitlines() == ["weight,frequency", "0,1", "36,24", "54,2"]


def test_weights_charsum_method(capsys):
    code, out, _ = run(
        capsys, "weights", "--m", "1", "--method", "charsum", "--output", "json"
    )
    assert code == 0
    assert json.loads(out)["method"] == "charsum"


def test_weights_guard_exit_2(capsys):
    code, _, err = run(capsys, "weights", "--m", "4", "--set", "lprime")
    assert code == 2
    assert "error:" in err
    code, _, err = run(capsys, "weights", "--m", "3", "--method", "charsum")
    assert code == 2


def test_units_formula_has_no_degree_cap(capsys):
    code, out, _ = run(capsys, "weights", "--m", "9", "--set", "units", "--output", "json")
    assert code == 0
    entries = json.loads(out)["entries"]
    assert len(entries) == 3
    assert sum(entries.values()) == 3**27


def test_weights_extrapolate(capsys):
    code, out, _ = run(
        capsys, "weights", "--m", "4", "--set", "lprime", "--extrapolate",
        "--output", "json",
    )
    assert code == 0
    assert json.loads(out)["note"] == "unverified extrapolation"


def test_bounds_json(capsys):
    code, out, _ = run(capsys, "bounds", "--m", "1", "--output", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["N"] == 27 and payload["K"] == 3 and payload["d"] == 18
    assert payload["griesmer_sum_d"] == 26 and payload["griesmer_sum_d1"] == 29
    assert payload["optimal"] is True
    assert payload["dual_distance"] == 2
    assert payload["witness"] == [[0, 1], [10, 2]]


def test_bounds_not_optimal(capsys):
    code, out, _ = run(capsys, "bounds", "--m", "2", "--set", "lprime", "--output", "json")
    assert code == 0
    assert json.loads(out)["optimal"] is False


def test_dual_json(capsys):
    code, out, _ = run(capsys, "dual", "--m", "2", "--set", "units", "--output", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["distance"] == 2
    assert payload["weight1_exhausted"] is True
    assert payload["witness"] == [[0, 1], [28, 2]]


def test_sss_json(capsys):
    code, out, _ = run(
        capsys, "sss", "--m", "1", "--set", "lprime", "--seed", "3", "--output", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["secret_position"] == 0
    assert payload["dictators"] == [10, 23]
    assert len(payload["minimal_access_sets"]) == 8
    assert payload["round_trip"] == "ok"


def test_export_generators_deterministic(tmp_path, capsys):
    target = tmp_path / "gens.txt"
    argv = ["export", "--m", "1", "--set", "lprime", "--out", str(target)]
    assert main(argv) == 0
    first = target.read_bytes()
    assert main(argv) == 0
    assert target.read_bytes() == first
    text = first.decode()
    assert text.startswith("# ternary code N=27 k=3 layout=interleaved m=1 set=lprime\n")
    assert len(text.splitlines()) == 4
    capsys.readouterr()


def test_export_csv_stdout(capsys):
    code, out, _ = run(capsys, "export", "--m", "1", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "weight,frequency"


def test_export_json_file(tmp_path, capsys):
    target = tmp_path / "dist.json"
    code, _, _ = run(
        capsys, "export", "--m", "2", "--set", "units", "--format", "json",
        "--out", str(target),
    )
    assert code == 0
    payload = json.loads(target.read_text())
    assert payload["entries"] == {"0": 1, "1296": 720, "1458": 8}


def test_export_access_json(capsys):
    code, out, _ = run(capsys, "export", "--m", "1", "--set", "lprime", "--format", "access")
    assert code == 0
    payload = json.loads(out)
    assert payload["dictators"] == [10, 23]
    assert len(payload["minimal_access_sets"]) == 8
    # census only: the share round trip belongs to the sss subcommand
    assert "round_trip" not in payload


def test_weights_enumerate_cross_checks_formula(capsys, monkeypatch):
    import cubicode.cli as cli_mod
    from cubicode.weight_dist import WeightDistribution

    corrupted = WeightDistribution(entries={0: 1, 18: 23, 27: 3}, total=27, method="formula")
    monkeypatch.setattr(cli_mod, "formula_distribution", lambda spec: corrupted)
    code, _, err = run(capsys, "weights", "--m", "1", "--method", "enumerate")
    assert code == 1
    assert "disagrees with the closed form" in err


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        main(["weights"])  # missing --m
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["weights", "--m", "1", "--set", "nonsense"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


def test_verify_paper_text(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1].startswith("summary:")
    assert "0 mismatch" in lines[-1]
    assert any(line.startswith("flagged") for line in lines)


def test_verify_paper_json(capsys):
    code, out, _ = run(capsys, "verify-paper", "--output", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["summary"]["mismatch"] == 0
    ids = {c["id"] for c in payload["claims"]}
    assert "table-lprime-m1" in ids
    assert "gauss-periods-m6" in ids
    assert "dual-units-m2" in ids
    statuses = {c["id"]: c["status"] for c in payload["claims"]}
    assert statuses["griesmer-total-lprime-m1"] == "flagged"
    assert statuses["minimality-units-m2"] == "match"
    for claim in payload["claims"]:
        assert claim["status"] in ("match", "mismatch", "flagged")
        assert "expected" in claim and "computed" in claim


def test_build_claims_fast_set():
    claims = build_claims(include_slow=False)
    assert len(claims) == 35
    assert all(c.status != "mismatch" for c in claims)
    flagged = {c.id for c in claims if c.status == "flagged"}
    assert flagged == {
        "griesmer-total-lprime-m1",
        "griesmer-total-lprime-m3",
        "packing-dual-single-error",
        "minimality-lprime-m1",
        "minimality-lprime-m2",
        "minimality-units-m1",
    }
