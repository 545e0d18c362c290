import io
import json

import pytest

from latcoh import cli


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


def test_parse_range():
    assert cli.parse_range("-2..3") == (-2, 3)
    assert cli.parse_range("4") == (4, 4)
    with pytest.raises(cli.UsageError):
        cli.parse_range("3..1")
    with pytest.raises(cli.UsageError):
        cli.parse_range("a..b")


def test_cohomology_oracle_json():
    code, text = run("cohomology", "L3", "--range", "-1..2", "--format", "json")
    assert code == 0
    obj = json.loads(text)
    assert obj["label"] == "L3"
    assert [r["oracle"] for r in obj["rows"]] == [[2], [], [2], [2]]


def test_cohomology_formula_only():
    code, text = run("cohomology", "L3", "--range=0..3", "--engine", "formula", "--format", "json")
    assert code == 0
    assert [r["formula"] for r in json.loads(text)["rows"]] == [[], [2], [2], [2, 2]]


def test_cohomology_both_and_split():
    code, text = run("cohomology", "L1", "--range", "0..0", "--engine", "both", "--split-primary")
    assert code == 0
    assert "oracle [4]·[3]" in text and "match" in text


def test_mismatch_exit_code():
    code, _ = run("cohomology", "P1", "--range", "1..1", "--engine", "both")
    assert code == 1
    code, _ = run("cohomology", "P1", "--range", "1..1", "--engine", "both",
                  "--convention", "signed")
    assert code == 0


def test_label_errors_exit_2(capsys):
    code, _ = run("cohomology", "T([1,1],1)")
    assert code == 2
    assert "special tube" in capsys.readouterr().err
    assert run("build", "L9")[0] == 2
    assert run("cohomology", "L1", "--range", "x")[0] == 2
    assert run("nosuchcommand")[0] == 2


def test_build_failure_exit_3():
    assert run("build", "T([1,1,0,1],1)")[0] == 3
    assert run("build", "Bowtie(L1, L3)")[0] == 3


def test_build_json_is_stable():
    code, a = run("build", "ZH", "--seed", "1")
    _, b = run("build", "ZH", "--seed", "1")
    assert code == 0 and a == b
    obj = json.loads(a)
    assert obj["rank"] == 3 and obj["rational_type"] == [1, 1, 0]


def test_seed_from_env(monkeypatch):
    monkeypatch.setenv("LATCOH_SEED", "5")
    a = run("build", "T1(2,2)")[1]
    b = run("build", "T1(2,2)", "--seed", "5")[1]
    assert a == b
    monkeypatch.setenv("LATCOH_SEED", "five")
    assert run("build", "T1(2,2)")[0] == 2


def test_dimvec():
    assert run("dimvec", "P2") == (0, "(0,1;0,2,1)\n")


def test_catalog_list():
    code, text = run("catalog-list")
    names = text.split()
    assert code == 0
    for base in ("trivial", "Ztheta", "L3std", "ZH", "ZG", "B1", "B2", "P1", "P2"):
        assert base in names


def test_verify_threeadic(tmp_path):
    path = tmp_path / "report.jsonl"
    code, text = run("verify", "--suite", "threeadic", "--out", str(path))
    assert code == 0
    assert text.startswith("PASS")
    recs = [json.loads(line) for line in path.read_text().splitlines()]
    assert recs and all(r["status"] == "match" for r in recs)


def test_verify_bad_bounds():
    assert run("verify", "--suite", "threeadic", "--max-tube", "0")[0] == 2
