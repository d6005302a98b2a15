import json
import subprocess
import sys

import pytest

from periodlab.cli import main, parse_report


CONFIG = {
    "field": {"d": 1, "extension_poly": [0, 1], "precision_digits": 50},
    "weights": {
        "n": 2,
        "points": [
            {
                "mu": {"0": [0, 0], "1": [0, 0]},
                "nu": {"0": [0, 0], "1": [0, 0]},
                "chi": {"0": 0, "1": 1},
            }
        ],
    },
}

EMPTY_GRID = {
    "field": {"d": 1, "extension_poly": [0, 1], "precision_digits": 40},
    "weights": {"n": 2, "points": []},
}


@pytest.fixture()
def config_file(tmp_path):
    p = tmp_path / "cfg.json"
    p.write_text(json.dumps(CONFIG))
    return str(p)


def run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, out


def test_field_check_qi(config_file, capsys):
    code, out = run_cli(["--config", config_file, "field-check"], capsys)
    assert code == 0
    doc = parse_report(out)
    by_name = {r["name"]: r for r in doc["records"]}
    assert by_name["identity_constant"]["got"] == "-1"
    assert doc["summary"]["fail"] == 0


def test_determinism(config_file, capsys):
    _, out1 = run_cli(["--config", config_file, "--seed", "5", "balanced", "--oracle"], capsys)
    _, out2 = run_cli(["--config", config_file, "--seed", "5", "balanced", "--oracle"], capsys)
    assert out1.encode() == out2.encode()


def test_round_trip(config_file, capsys):
    _, out = run_cli(["--config", config_file, "field-check"], capsys)
    doc = parse_report(out)
    assert doc["command"] == "field-check"
    assert doc["summary"]["total"] == len(doc["records"])


def test_empty_grid_passes(tmp_path, capsys):
    p = tmp_path / "empty.json"
    p.write_text(json.dumps(EMPTY_GRID))
    code, out = run_cli(["--config", str(p), "balanced"], capsys)
    assert code == 0
    doc = parse_report(out)
    assert doc["summary"]["total"] == 0


def test_table_format(config_file, capsys):
    code, out = run_cli(["--config", config_file, "--format", "table", "field-check"], capsys)
    assert code == 0
    assert out.startswith("# field-check")
    assert "summary:" in out


def test_exit_status_on_failure(config_file, capsys):
    code, _ = run_cli(
        ["--config", config_file, "constant-term", "--n", "3", "--ord0", "pos", "--flip-branch"],
        capsys,
    )
    assert code == 1


def test_config_error(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    code = main(["--config", str(p), "field-check"])
    assert code == 2


def test_gauss_subcommand(capsys):
    code, out = run_cli(["gauss", "--q", "7", "--chi-order", "6", "--chi-index", "2"], capsys)
    assert code == 0
    doc = parse_report(out)
    assert {r["name"] for r in doc["records"]} == {"value_float", "norm_squared_equals_q"}


def test_lratio_subcommand(capsys):
    code, out = run_cli(["lratio", "--n", "3", "--k", "1", "--a", "12,5", "--q", "2"], capsys)
    assert code == 0
    doc = parse_report(out)
    by_name = {r["name"]: r for r in doc["records"]}
    assert by_name["telescoping_product_matches"]["verdict"] == "pass"


def test_intertwine_subcommands(config_file, capsys):
    code, _ = run_cli(["intertwine-nonarch", "--n", "4", "--k", "2", "--a", "12,1", "--q", "5"], capsys)
    assert code == 0
    code, _ = run_cli(
        ["intertwine-arch", "--n", "2", "--k", "1", "--eta", "0,2", "--beta", "0,2", "--s", "1"],
        capsys,
    )
    assert code == 0


def test_wedge_sign_subcommand(config_file, capsys):
    code, out = run_cli(
        ["--config", config_file, "wedge-sign", "--n", "3", "--k", "2", "--g", "conj"], capsys
    )
    assert code == 0
    doc = parse_report(out)
    by_name = {r["name"]: r for r in doc["records"]}
    assert by_name["epsilon_sigma2"]["got"] == 1


def test_grid_mode(tmp_path, capsys):
    cfg = {
        "field": {"d": 1, "extension_poly": [0, 1], "precision_digits": 40},
        "weights": {"n": 2, "grid": {"entry_bound": 1, "embeddings": 2}},
    }
    p = tmp_path / "grid.json"
    p.write_text(json.dumps(cfg))
    code, out = run_cli(["--config", str(p), "balanced"], capsys)
    assert code == 0
    doc = parse_report(out)
    # 6 dominant pairs x 6 x 3 chi values per embedding, squared
    assert doc["summary"]["total"] == (6 * 6 * 3) ** 2


def test_field_check_user_basis(tmp_path, capsys):
    cfg = {
        "field": {
            "d": 1,
            "extension_poly": [-2, 0, 1],
            "precision_digits": 50,
            "k_basis": [[[1, 0], [0, 0]], [[0, 0], [2, 0]]],  # {1, 2*theta}
        }
    }
    p = tmp_path / "basis.json"
    p.write_text(json.dumps(cfg))
    code, out = run_cli(["--config", str(p), "field-check"], capsys)
    assert code == 0
    doc = parse_report(out)
    by_name = {r["name"]: r for r in doc["records"]}
    # disc(k/k1) for {1, 2 theta} is 4 * 8 = 32; norm 1024; sqrt = 32
    assert by_name["nabla_constant"]["got"] == "32+0i"


def test_kostant_count_record(capsys, tmp_path):
    p = tmp_path / "cfg.json"
    p.write_text(json.dumps(CONFIG))
    code, out = run_cli(["--config", str(p), "kostant", "--n", "3", "--p", "2", "--eta", "0,3"], capsys)
    assert code == 0
    doc = parse_report(out)
    by_name = {r["name"]: r for r in doc["records"]}
    assert by_name["line_count"]["expected"] == 8
    assert by_name["line_count"]["got"] == 8


def test_installed_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "periodlab.cli", "gauss", "--q", "3", "--chi-order", "2"],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0
    assert "norm_squared_equals_q" in out.stdout
