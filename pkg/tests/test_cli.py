"""Command-line frontend: round trips, schemas, determinism, exit codes."""

import json

import jsonschema
import pytest

from stabmetro import get_schema
from stabmetro.cli import run


def run_cli(argv, capsys):
    code = run(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture()
def shor3_file(tmp_path, capsys):
    path = tmp_path / "shor3.code"
    code, _, _ = run_cli(
        ["construct", "--family", "shor", "--nr", "3", "-o", str(path)], capsys
    )
    assert code == 0
    return str(path)


# -- construct / count round trip -------------------------------------


def test_construct_and_count(shor3_file, capsys):
    code, out, _ = run_cli(["count", shor3_file], capsys)
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, get_schema("count"))
    assert payload["ell"] == 27
    assert payload["n"] == 9 and payload["k"] == 3
    assert payload["counts"]["anti_commuting"] + payload["counts"][
        "stabilizer"
    ] + payload["ell"] == 84


def test_construct_rejects_range(tmp_path, capsys):
    code, _, _ = run_cli(
        ["construct", "--family", "shor", "--nr", "3..5", "-o", str(tmp_path / "x")],
        capsys,
    )
    assert code == 2


def test_qfi_schema_and_values(shor3_file, capsys):
    code, out, _ = run_cli(["qfi", shor3_file], capsys)
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, get_schema("qfi"))
    assert payload["qfi_coeff"] == 2916
    assert payload["flags"]  # printed-constant discrepancy note travels along


def test_analyze_schema(shor3_file, capsys):
    code, out, _ = run_cli(["analyze", shor3_file], capsys)
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, get_schema("analyze"))
    assert payload["zz"]["outcome"] == "vacuous"
    assert payload["chain_max"] == 3


def test_oracle_schema(shor3_file, capsys):
    code, out, _ = run_cli(["oracle", shor3_file], capsys)
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, get_schema("oracle"))
    assert payload["two_ell"] == 54
    assert abs(payload["delta_g_eff"] - 54) < 1e-8
    assert payload["kl_pass"] is True


def test_rm_enumerator_json(capsys):
    code, out, _ = run_cli(
        ["rm-enumerator", "--r", "1", "--m", "3", "--shortened", "--format", "json"],
        capsys,
    )
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, get_schema("rm-enumerator"))
    assert payload["coefficients"] == [1, 0, 0, 0, 7, 0, 0, 0]


def test_rm_enumerator_dual_csv(capsys):
    code, out, _ = run_cli(
        ["rm-enumerator", "--r", "1", "--m", "4", "--shortened", "--dual"], capsys
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "weight,count"
    table = dict(tuple(line.split(",")) for line in lines[1:])
    assert table["12"] == "35"  # weight 2^m - 4


# -- sweeps -----------------------------------------------------------


def test_sweep_qrm_csv(tmp_path, capsys):
    csv_path = tmp_path / "qrm.csv"
    code, _, _ = run_cli(
        ["sweep", "--family", "qrm1", "--m", "3..5", "--csv", str(csv_path)], capsys
    )
    assert code == 0
    lines = csv_path.read_text().strip().splitlines()
    header = lines[0].split(",")
    assert header == [
        "family", "n", "ell", "qfi_coeff", "noiseless_coeff", "ghz_coeff",
        "w_max", "has_zz", "chain_max",
    ]
    rows = [dict(zip(header, line.split(","))) for line in lines[1:]]
    assert [r["ell"] for r in rows] == ["7", "35", "155"]
    assert all(r["has_zz"] == "0" and r["chain_max"] == "1" for r in rows)


def test_sweep_plot(tmp_path, capsys):
    csv_path = tmp_path / "thin.csv"
    png_path = tmp_path / "thin.png"
    code, _, _ = run_cli(
        [
            "sweep", "--family", "thin-surface", "--lx", "2..5",
            "--csv", str(csv_path), "--plot", str(png_path),
        ],
        capsys,
    )
    assert code == 0
    data = png_path.read_bytes()
    assert data[:8] == b"\x89PNG\r\n\x1a\n"


def test_optimal_bound_csv_and_plot(tmp_path, capsys):
    png_path = tmp_path / "opt.png"
    code, out, _ = run_cli(
        ["optimal-bound", "--n", "5..9", "--plot", str(png_path)], capsys
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,value,beta_star,lower,upper"
    first = lines[1].split(",")
    assert first[0] == "5" and first[1] == "10"
    assert png_path.exists()


def test_generalized_shor_blocks(tmp_path, capsys):
    path = tmp_path / "g.code"
    code, _, _ = run_cli(
        [
            "construct", "--family", "generalized-shor", "--k-blocks", "4",
            "--nr", "3", "-o", str(path),
        ],
        capsys,
    )
    assert code == 0
    code, out, _ = run_cli(["count", str(path), "--k", "4"], capsys)
    assert code == 0
    assert json.loads(out)["ell"] == 81


def test_concatenated_family_default_inner(tmp_path, capsys):
    path = tmp_path / "c.code"
    code, _, _ = run_cli(
        ["construct", "--family", "concatenated", "--nr", "3", "-o", str(path)],
        capsys,
    )
    assert code == 0
    code, out, _ = run_cli(["count", str(path)], capsys)
    assert json.loads(out)["ell"] == 27


# -- determinism ------------------------------------------------------


def test_json_output_deterministic(shor3_file, capsys):
    _, first, _ = run_cli(["qfi", shor3_file], capsys)
    _, second, _ = run_cli(["qfi", shor3_file], capsys)
    assert first == second


def test_csv_output_deterministic(capsys):
    _, first, _ = run_cli(["sweep", "--family", "shor", "--nr", "3..5"], capsys)
    _, second, _ = run_cli(["sweep", "--family", "shor", "--nr", "3..5"], capsys)
    assert first == second


def test_threads_env_and_flag(shor3_file, capsys, monkeypatch):
    _, base, _ = run_cli(["count", shor3_file], capsys)
    _, flagged, _ = run_cli(["--threads", "2", "count", shor3_file], capsys)
    monkeypatch.setenv("QMETRO_THREADS", "2")
    _, env, _ = run_cli(["count", shor3_file], capsys)
    assert base == flagged == env


# -- failure modes ----------------------------------------------------


def test_missing_file_exit_2(capsys):
    code, _, err = run_cli(["count", "/nonexistent/path.code"], capsys)
    assert code == 2
    assert "error" in err


def test_invalid_code_file_exit_1(tmp_path, capsys):
    bad = tmp_path / "bad.code"
    bad.write_text("n=2 name=bad\n+ZI\n+XI\n")
    code, _, err = run_cli(["count", str(bad)], capsys)
    assert code == 1
    assert "anti-commute" in err


def test_unknown_family_exit_2(tmp_path, capsys):
    code, _, _ = run_cli(
        ["construct", "--family", "nope", "--nr", "3", "-o", str(tmp_path / "x")],
        capsys,
    )
    assert code == 2


def test_missing_size_exit_2(tmp_path, capsys):
    code, _, err = run_cli(
        ["construct", "--family", "shor", "-o", str(tmp_path / "x")], capsys
    )
    assert code == 2
    assert "size parameter" in err


def test_bad_range_exit_2(capsys):
    code, _, _ = run_cli(["optimal-bound", "--n", "9..5"], capsys)
    assert code == 2


def test_oracle_too_large_exit_1(tmp_path, capsys):
    path = tmp_path / "big.code"
    run_cli(["construct", "--family", "shor", "--nr", "6", "-o", str(path)], capsys)
    code, _, err = run_cli(["oracle", str(path)], capsys)
    assert code == 1
    assert "15" in err


def test_output_file_written(tmp_path, shor3_file, capsys):
    out_path = tmp_path / "report.json"
    code, out, _ = run_cli(["qfi", shor3_file, "-o", str(out_path)], capsys)
    assert code == 0 and out == ""
    payload = json.loads(out_path.read_text())
    assert payload["ell"] == 27
