import json

import numpy as np
import pytest
from typer.testing import CliRunner

from semiloc.main import app

runner = CliRunner()


def _json_lines(output: str):
    return [json.loads(line) for line in output.splitlines() if line.startswith("{")]


@pytest.fixture()
def decomposed(tmp_path, golden_dir):
    # Decompõe medir-e-corrigir e devolve o diretório com G.json e F.json
    out = tmp_path / "measure_and_correct"
    result = runner.invoke(app, ["decompose", str(golden_dir / "measure_and_correct.json"), "--out", str(out)])
    assert result.exit_code == 0, result.output
    yield out


# Testes para o comando check
def test_check_swap_machine_report(golden_dir):
    result = runner.invoke(app, ["check", str(golden_dir / "swap.json"), "--format", "machine"])

    assert result.exit_code == 0, result.output
    [report] = _json_lines(result.output)
    assert report["command"] == "check"
    assert report["verdict"]["semicausal_BtoA_blocked"] is False
    assert report["verdict"]["semicausal_AtoB_blocked"] is False
    assert report["verdict"]["semilocalizable"] is False
    assert abs(report["verdict"]["residual_A"] - np.sqrt(2)) < 1e-10
    assert report["tol"] == 1e-8


def test_check_identity_human_report(golden_dir):
    result = runner.invoke(app, ["check", str(golden_dir / "identity.json")])

    assert result.exit_code == 0, result.output
    for key in ("semicausal_BtoA_blocked", "semicausal_AtoB_blocked", "causal", "product_localizable",
                "semilocalizable", "lattice_consistent"):
        assert f"{key}: true" in result.output


def test_check_whole_corpus(corpus_dir):
    files = sorted(str(path) for path in corpus_dir.glob("*.json"))

    result = runner.invoke(app, ["check", *files, "--format", "machine"])

    assert result.exit_code == 0, result.output
    reports = _json_lines(result.output)
    assert len(reports) == 6
    assert all(report["verdict"]["lattice_consistent"] for report in reports)


def test_check_malformed_dims(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({
        "format_version": 1,
        "dims": {"dA": 2},
        "repr": "kraus",
        "data": [],
    }))

    result = runner.invoke(app, ["check", str(path)])

    assert result.exit_code == 2
    assert "dims" in result.output


def test_check_malformed_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"format_version": 1,\n "dims": ')

    result = runner.invoke(app, ["check", str(path)])

    assert result.exit_code == 2
    assert "linha 2" in result.output


def test_check_missing_file(tmp_path):
    result = runner.invoke(app, ["check", str(tmp_path / "nope.json")])

    assert result.exit_code == 2


def test_check_invalid_format(golden_dir):
    result = runner.invoke(app, ["check", str(golden_dir / "identity.json"), "--format", "xml"])

    assert result.exit_code == 2


# Testes para o comando decompose
def test_decompose_swap_exits_1(golden_dir, tmp_path):
    result = runner.invoke(app, ["decompose", str(golden_dir / "swap.json"), "--out", str(tmp_path / "swap")])

    assert result.exit_code == 1
    assert "1.41421356" in result.output
    assert not (tmp_path / "swap" / "G.json").exists()


def test_decompose_writes_factors(decomposed):
    report = json.loads((decomposed / "report.json").read_text())

    assert (decomposed / "G.json").exists()
    assert (decomposed / "F.json").exists()
    assert report["decomposition"]["dC"] == 2
    assert report["decomposition"]["passed"] is True
    g_file = json.loads((decomposed / "G.json").read_text())
    assert g_file["dims"] == {"din": 2, "dout": 4}
    assert g_file["repr"] == "kraus"


def test_decompose_b_to_a(golden_dir, tmp_path):
    result = runner.invoke(app, [
        "decompose", str(golden_dir / "product_depolarizing.json"),
        "--out", str(tmp_path / "bta"), "--direction", "B_to_A", "--format", "machine",
    ])

    assert result.exit_code == 0, result.output
    [report] = _json_lines(result.output)
    assert report["decomposition"]["direction"] == "B_to_A"


def test_decompose_invalid_direction(golden_dir, tmp_path):
    result = runner.invoke(app, [
        "decompose", str(golden_dir / "identity.json"), "--out", str(tmp_path), "--direction", "up",
    ])

    assert result.exit_code == 2


# Testes para o comando verify
def test_verify_decomposed_factors(golden_dir, decomposed):
    result = runner.invoke(app, [
        "verify", str(golden_dir / "measure_and_correct.json"),
        str(decomposed / "G.json"), str(decomposed / "F.json"), "--format", "machine",
    ])

    assert result.exit_code == 0, result.output
    [report] = _json_lines(result.output)
    assert report["verification"]["passed"] is True
    assert report["verification"]["choi_distance"] < 1e-8


def test_verify_with_foreign_g(golden_dir, decomposed, tmp_path):
    foreign = tmp_path / "foreign_G.json"
    generated = runner.invoke(app, [
        "gen", "random_channel", "--din", "2", "--dout", "4", "--rank", "1", "--seed", "17", "--out", str(foreign),
    ])
    assert generated.exit_code == 0, generated.output

    result = runner.invoke(app, [
        "verify", str(golden_dir / "measure_and_correct.json"), str(foreign), str(decomposed / "F.json"),
    ])

    assert result.exit_code == 1
    assert "passed: false" in result.output


def test_verify_tight_tolerance(tmp_path):
    source = tmp_path / "semicausal.json"
    runner.invoke(app, [
        "gen", "random_semicausal", "--da", "3", "--db", "3", "--dc", "2", "--seed", "5", "--out", str(source),
    ])
    out = tmp_path / "factors"
    decomposed = runner.invoke(app, ["decompose", str(source), "--out", str(out)])
    assert decomposed.exit_code == 0, decomposed.output

    result = runner.invoke(app, [
        "verify", str(source), str(out / "G.json"), str(out / "F.json"), "--tol", "1e-16",
    ])

    assert result.exit_code == 1


# Testes para o comando gen
def test_gen_named_matches_golden(golden_dir):
    result = runner.invoke(app, ["gen", "named:cz_unitary"])

    assert result.exit_code == 0, result.output
    [generated] = _json_lines(result.output)
    assert generated == json.loads((golden_dir / "cz_unitary.json").read_text())


def test_gen_is_deterministic():
    args = ["gen", "random_semicausal", "--da", "2", "--db", "2", "--dc", "2", "--seed", "123"]

    first = runner.invoke(app, args)
    second = runner.invoke(app, args)

    assert first.exit_code == 0, first.output
    assert first.output == second.output
    [generated] = _json_lines(first.output)
    assert generated["metadata"] == {"name": "random_semicausal", "seed": 123, "picture": "heisenberg"}


def test_gen_unknown_example():
    result = runner.invoke(app, ["gen", "named:teleportation"])

    assert result.exit_code == 2
    assert "teleportation" in result.output


def test_gen_invalid_kind():
    result = runner.invoke(app, ["gen", "random_unitary"])

    assert result.exit_code == 2


# Teste para o fluxo check → decompose → verify nos arquivos de referência
@pytest.mark.parametrize("name", [
    "identity",
    "swap",
    "measure_and_correct",
    "product_depolarizing",
    "cz_unitary",
    "selective_projective",
])
def test_check_decompose_verify_pipeline(golden_dir, tmp_path, name):
    source = str(golden_dir / f"{name}.json")
    out = tmp_path / name

    checked = runner.invoke(app, ["check", source, "--format", "machine"])
    assert checked.exit_code == 0, checked.output
    [report] = _json_lines(checked.output)
    semicausal = report["verdict"]["semicausal_BtoA_blocked"]
    assert report["verdict"]["semilocalizable"] is semicausal

    decomposed = runner.invoke(app, ["decompose", source, "--out", str(out)])
    if not semicausal:
        assert decomposed.exit_code == 1
        assert not (out / "G.json").exists()
        return
    assert decomposed.exit_code == 0, decomposed.output

    verified = runner.invoke(app, [
        "verify", source, str(out / "G.json"), str(out / "F.json"), "--format", "machine",
    ])
    assert verified.exit_code == 0, verified.output
    [verification] = _json_lines(verified.output)
    assert verification["verification"]["passed"] is True
