import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from poisekit import cli
from poisekit.errors import DuplicatePoints, ParseError, ZeroDenominator
from poisekit.polyspace import Point, PointSet
from poisekit.scale import verify_witness

PARABOLA_8 = {"points": [[str(t), str(t * t)] for t in range(8)]}


@pytest.fixture
def doc_file(tmp_path):
    def write(doc, name="pts.json"):
        path = tmp_path / name
        path.write_text(json.dumps(doc) if isinstance(doc, dict) else doc)
        return str(path)
    return write


def test_parse_triangle():
    X = cli.parse_pointset(b'{"points": [["0","0"],["1","0"],["0","1"]]}')
    assert list(X) == [Point.of(0, 0), Point.of(1, 0), Point.of(0, 1)]


def test_parse_duplicate_after_canonicalization():
    with pytest.raises(DuplicatePoints):
        cli.parse_pointset(b'{"points": [["1/2","3"],["2/4","3"]]}')


def test_parse_zero_denominator():
    with pytest.raises(ZeroDenominator) as err:
        cli.parse_pointset(b'{"points": [["1/0","2"]]}')
    assert err.value.position == "points[0][0]"


@pytest.mark.parametrize("text", [
    b'{"points": [["0.5", "1"]]}',
    b'{"points": [[0.5, 1]]}',
    b'{"points": [["1"]]}',
    b'{"pts": []}',
    b'{"points": [["1", "2"]',
    b'\xff\xfe',
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        cli.parse_pointset(text)


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as err:
        cli.parse_pointset(b'{"points": [\n ["1", x]]}')
    assert "line 2" in str(err.value)


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)


@given(st.lists(st.tuples(rationals, rationals), max_size=10, unique=True))
def test_round_trip(pts):
    X = PointSet(pts)
    text = cli.dumps(cli.pointset_document(X, {"note": "x"}))
    again = cli.parse_pointset(text.encode())
    assert again == X
    assert cli.dumps(cli.pointset_document(again, {"note": "x"})) == text


def test_analyze(doc_file, capsys):
    path = doc_file({"points": [["0", "0"], ["1", "0"], ["2", "0"], ["0", "1"]]})
    assert cli.run(["analyze", "--input", path, "--degree", "1", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["independent"] is False
    assert doc["essential_core"] == [0, 1, 2]
    assert [f["exists"] for f in doc["fundamentals"]] == [False, False, False, True]
    assert doc["fundamentals"][3]["coefficients"] == ["0", "0", "1"]


def test_analyze_text(doc_file, capsys):
    path = doc_file({"points": [["0", "0"], ["1", "0"], ["0", "1"]]})
    assert cli.run(["analyze", "-i", path, "-d", "1"]) == 0
    out = capsys.readouterr().out
    assert "poised: True" in out
    assert "-y - x + 1" in out


def test_classify_parabola_report(doc_file, capsys):
    path = doc_file(PARABOLA_8)
    assert cli.run(["classify", "--input", path, "-m", "3", "-n", "3", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["verdict"] == "dependent"
    assert (doc["kappa"], doc["m"], doc["n"]) == (3, 3, 3)
    assert doc["monomial_order"] == "grlex-x-first"
    w = doc["witness"]
    assert (w["r"], w["s"], w["subset_indices"]) == (2, 4, list(range(8)))
    assert w["intersection_case"] is True
    assert w["special_case_label"] == "ConicTwoKappaPlus2"
    assert all(c["passed"] for c in doc["checks"])

    X = cli.parse_pointset(json.dumps(PARABOLA_8))
    params, witness = cli.witness_from_report(doc)
    assert verify_witness(X, params, witness)


def test_classify_independent_has_no_witness(doc_file, capsys):
    path = doc_file({"points": [["0", "0"], ["1", "0"], ["0", "1"], ["5", "7"]]})
    assert cli.run(["classify", "-i", path, "-m", "2", "-n", "3", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["verdict"] == "independent" and "witness" not in doc
    assert cli.witness_from_report(doc)[1] is None


def test_output_is_deterministic(doc_file, tmp_path):
    path = doc_file(PARABOLA_8)
    outs = []
    for k in range(2):
        out = tmp_path / f"r{k}.json"
        assert cli.run(["classify", "-i", path, "-m", "3", "-n", "3", "--json", "-o", str(out)]) == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_check_intersection(doc_file, capsys):
    path = doc_file(PARABOLA_8)
    assert cli.run(["check-intersection", "-i", path, "--r", "2", "--s", "4", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["intersection"] is True


def test_generate_grid_replay(tmp_path):
    out = tmp_path / "g.json"
    assert cli.run(["generate", "grid", "--r-lines", "2", "--s-lines", "3", "--seed", "42", "-o", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert len(doc["points"]) == 6
    assert doc["metadata"]["seed"] == "42"
    X = cli.parse_pointset(out.read_bytes())
    first = json.loads(doc["metadata"]["provenance_0_coefficients"])
    second = json.loads(doc["metadata"]["provenance_1_coefficients"])
    assert (len(first), len(second)) == (6, 10)
    assert cli.run(["check-intersection", "-i", str(out), "--r", "2", "--s", "3"]) == 0
    again = tmp_path / "g2.json"
    cli.run(["generate", "grid", "--r-lines", "2", "--s-lines", "3", "--seed", "42", "-o", str(again)])
    assert again.read_bytes() == out.read_bytes()
    assert X[0] == Point(Fraction(-3), Fraction(10, 3))


def test_seed_precedence(monkeypatch, tmp_path):
    def points(args):
        out = tmp_path / "p.json"
        cli.run(["generate", "random", "--count", "5"] + args + ["-o", str(out)])
        return json.loads(out.read_text())

    monkeypatch.delenv(cli.SEED_ENV, raising=False)
    default = points([])
    assert default["metadata"]["seed"] == "0"
    monkeypatch.setenv(cli.SEED_ENV, "9")
    from_env = points([])
    assert from_env["metadata"]["seed"] == "9"
    assert points(["--seed", "4"])["metadata"]["seed"] == "4"
    assert from_env["points"] != default["points"]


def test_exit_codes(doc_file, tmp_path):
    good = doc_file(PARABOLA_8)
    assert cli.run(["classify", "-i", good, "-m", "2", "-n", "3"]) == 1  # out of scope
    assert cli.run(["classify", "-i", good, "-m", "4", "-n", "3"]) == 1  # m > n
    assert cli.run(["classify", "-i", str(tmp_path / "missing.json"), "-m", "3", "-n", "3"]) == 2
    bad = doc_file('{"points": [["1/2","3"],["2/4","3"]]}', "dup.json")
    assert cli.run(["analyze", "-i", bad, "-d", "1"]) == 2
    assert cli.run(["check-intersection", "-i", good, "--r", "3", "--s", "2"]) == 1


def test_theorem_violation_exit_code(doc_file, monkeypatch):
    from poisekit.errors import TheoremViolation

    def boom(*args, **kwargs):
        raise TheoremViolation("forced")

    monkeypatch.setattr(cli, "classify", boom)
    assert cli.run(["classify", "-i", doc_file(PARABOLA_8), "-m", "3", "-n", "3"]) == 3


def test_verify_subset(capsys):
    assert cli.run(["verify", "--only", "10", "--only", "6"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2 and all(line.startswith("[PASS]") for line in lines)
