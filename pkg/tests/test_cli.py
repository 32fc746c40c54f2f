import json

import pytest

from conftest import D1_TEXT, D2_TEXT
from hermspec.cli import main


@pytest.fixture
def mg(tmp_path):
    def write(text, name="g.mg"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def test_spectrum_json(mg, capsys):
    assert main(["spectrum", mg(D1_TEXT), "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["spectral_radius"] == pytest.approx(2.0)
    assert sorted(out["eigenvalues"]) == pytest.approx([-2, -1, 1, 2])


def test_charpoly_methods(mg, capsys):
    path = mg(D2_TEXT)
    for method in ["sachs", "leverrier", "both"]:
        assert main(["charpoly", path, "--method", method, "--json"]) == 0
        assert json.loads(capsys.readouterr().out)["coefficients"] == ["1", "0", "-6", "0", "9"]


def test_classify_out_of_scope(mg, capsys):
    assert main(["classify", mg(D1_TEXT), "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["outcome"] == "OutOfScope"
    assert out["crosscheck"]["result"] == "Exactly"


def test_classify_in_list(mg, capsys):
    assert main(["family", "gen", "C5", "--signs", "minus"]) == 0
    text = capsys.readouterr().out
    assert main(["classify", mg(text), "--eq2", "--json", "--per-component"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["outcome"] == "InList" and out["family_tag"]
    assert out["crosscheck"]["result"] == "Exactly"


def test_cycles_listing(mg, capsys):
    assert main(["cycles", mg("v 3\n0 -> 1\n1 -> 2\n2 -> 0\n"), "--json"]) == 0
    (row,) = json.loads(capsys.readouterr().out)
    assert row["vertices"] == [0, 1, 2]


def test_family_all_json(capsys):
    assert main(["family", "gen", "C3", "--signs", "plus", "--all", "--json"]) == 0
    members = json.loads(capsys.readouterr().out)
    # positive triangles: all undirected, or a two-arc path plus reverse combinations
    assert len(members) >= 1 and all(m.startswith("v 3") for m in members)


def test_verify_writes_report(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["verify", "--max-n", "4", "--identities-max-n", "3", "--json", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["summary"]["failed"] == 0
    assert "summary:" in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["spectrum"],
        ["spectrum", "/nonexistent.mg"],
        ["family", "gen", "Q(1)"],
        ["family", "gen", "theta(3,5,5)", "--signs", "minus"],
    ],
)
def test_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    assert capsys.readouterr().err


def test_malformed_graph(mg):
    assert main(["spectrum", mg("v 2\n0 -> 0\n")]) == 2
