"""
Tests for the pathrecip command line: text and JSON output, exit codes and
agreement between the matrix-based count and the brute-force oracle.
"""
import json
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.append('.')

from pathrecip.cli import dispatch
from pathrecip.core.config import resolve_nmax, settings
from pathrecip.core.errors import DimensionError
from pathrecip.data.network_file import matrix_from_document
from pathrecip.models.schemas import MatrixDocument

NETWORKS = Path(__file__).parent / "networks"


def network(name: str) -> str:
    return str(NETWORKS / f"{name}.json")


def run(capsys, *argv):
    code = dispatch(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dyck_command(capsys):
    code, out, _ = run(capsys, "dyck", "--m", "1", "--k", "1", "--n", "4")
    assert code == 0
    assert out.strip() == "13"

    code, out, _ = run(capsys, "dyck", "--m", "1", "--k", "1", "--n", "-2", "--json")
    assert code == 0
    assert json.loads(out) == {"m": 1, "k": 1, "n": -2, "value": "5"}


def test_dyck_check_command(capsys):
    code, out, _ = run(capsys, "dyck-check", "--m", "2", "--k", "1", "--nmax", "4")
    assert code == 0
    assert out.strip().endswith("PASS")


def test_count_on_singular_network(capsys):
    code, out, err = run(capsys, "count", network("singular"), "--sources", "1", "--sinks", "1", "--n", "-1")
    assert code == 2
    assert out == ""
    assert "path matrix is singular" in err

    code, out, _ = run(capsys, "count", network("singular"), "--sources", "1", "--sinks", "2", "--n", "3")
    assert code == 0
    assert out.strip() == "4"


def test_check_command(capsys):
    code, out, _ = run(capsys, "check", network("single_edge"), "--sources", "1", "--sinks", "1", "--nmax", "3")
    assert code == 0
    assert out.strip().endswith("PASS")
    assert "1/8" in out

    code, out, _ = run(
        capsys, "check", network("diamond"), "--sources", "1", "--sinks", "2", "--nmax", "2", "--json"
    )
    assert code == 0
    report = json.loads(out)
    assert report["passed"] is True
    assert report["determinant"] == "3/2"
    assert report["records"][0]["negative_value"] == "-2"


def test_path_matrix_json_round_trip(capsys):
    code, out, _ = run(capsys, "path-matrix", network("diamond"), "--json")
    assert code == 0
    matrix = matrix_from_document(MatrixDocument.model_validate_json(out))
    assert matrix.to_rows() == [[3, 3], [1, Fraction(3, 2)]]

    code, out, _ = run(capsys, "path-matrix", network("diamond"))
    assert code == 0
    assert "3/2" in out and "t2" in out and "s1" in out


def test_recurrence_command(capsys):
    code, out, _ = run(capsys, "recurrence", network("dyck_1_1"), "--sources", "1", "--sinks", "1")
    assert code == 0
    assert "order: 2" in out
    assert "generating function: (-2x + 1) / (x^2 - 3x + 1)" in out


@pytest.mark.parametrize("name", ["single_edge", "dyck_1_1", "diamond", "singular"])
def test_count_matches_oracle(capsys, name):
    subsets = ["1"] if name == "single_edge" else ["1", "2", "1,2"]
    for sources in subsets:
        for sinks in subsets:
            if len(sources) != len(sinks):
                continue
            for n in range(4):
                args = [network(name), "--sources", sources, "--sinks", sinks, "--n", str(n)]
                count_code, count_out, _ = run(capsys, "count", *args)
                oracle_code, oracle_out, _ = run(capsys, "oracle", *args)
                assert count_code == oracle_code == 0
                assert count_out == oracle_out


def test_validate_command(capsys, tmp_path):
    code, out, _ = run(capsys, "validate", network("dyck_1_1"))
    assert code == 0
    assert out.strip() == "dyck_1_1: valid (2 sources, 6 vertices, 6 edges)"

    cyclic = tmp_path / "cyclic.json"
    cyclic.write_text(
        json.dumps(
            {
                "vertices": ["a", "b"],
                "edges": [{"from": "a", "to": "b"}, {"from": "b", "to": "a"}],
                "sources": ["a"],
                "sinks": ["b"],
            }
        )
    )
    code, out, _ = run(capsys, "validate", str(cyclic))
    assert code == 1
    assert "cycle" in out

    code, out, _ = run(capsys, "validate", str(cyclic), "--json")
    assert code == 1
    assert json.loads(out)["valid"] is False


def test_usage_and_parse_errors(capsys, tmp_path):
    code, _, _ = run(capsys, "frobnicate")
    assert code == 2
    code, _, _ = run(capsys, "dyck", "--m", "1")
    assert code == 2

    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": ["s", "t"], "edges": [{"from": "s", "to": "t", "weight": "x"}], "sources": ["s"], "sinks": ["t"]}')
    code, _, err = run(capsys, "count", str(bad), "--sources", "1", "--sinks", "1", "--n", "1")
    assert code == 2
    assert "edges.0.weight" in err

    code, _, err = run(capsys, "count", network("dyck_1_1"), "--sources", "1,2", "--sinks", "1", "--n", "1")
    assert code == 2
    assert "error:" in err


def test_schur_and_proctor_commands(capsys):
    code, out, _ = run(capsys, "schur", "--lambda", "2,1", "--z", "1,1,1", "--n", "1")
    assert code == 0 and out.strip() == "8"

    code, out, _ = run(capsys, "schur", "--lambda", "2", "--z", "1", "--n", "-4")
    assert code == 0 and out.strip() == "6"

    code, out, _ = run(capsys, "schur-check", "--lambda", "3,2,2", "--mu", "1,1", "--z", "1,1/2", "--nmax", "2")
    assert code == 0
    assert out.strip().endswith("PASS")

    code, out, _ = run(capsys, "proctor", "--n", "4", "--m", "5")
    assert code == 0 and out.strip() == "2548"


def test_output_is_deterministic(capsys):
    argv = ["check", network("diamond"), "--sources", "1,2", "--sinks", "1,2", "--nmax", "4"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first[:2] == second[:2]


def test_nmax_zero_is_an_empty_check(capsys):
    code, out, _ = run(capsys, "dyck-check", "--m", "1", "--k", "1", "--nmax", "0", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["n_max"] == 0
    assert report["records"] == []

    code, out, _ = run(capsys, "dyck-check", "--m", "1", "--k", "1", "--json")
    assert code == 0
    assert len(json.loads(out)["records"]) == settings.default_nmax

    code, _, err = run(capsys, "dyck-check", "--m", "1", "--k", "1", "--nmax", "-1")
    assert code == 2
    assert "nmax must be >= 0" in err


def test_resolve_nmax():
    assert resolve_nmax(None) == settings.default_nmax
    assert resolve_nmax(0) == 0
    assert resolve_nmax(3) == 3
    with pytest.raises(DimensionError):
        resolve_nmax(-1)
