import pytest

from latcoh import catalog as cat
from latcoh import formulas as fm
from latcoh import glattice as gl
from latcoh import globalize as glb


def test_table_index_conventions():
    assert fm.table_index("L2", 1, 2) == 3
    assert fm.table_index("L2", 1, 2, "signed") == 1
    assert fm.table_index("L2", 1, 3, "signed") == 2
    assert fm.table_index("P1", 0, 1, "signed") == 2
    with pytest.raises(ValueError):
        fm.table_index("L2", 0, 0, "other")


def test_degree_zero_cells():
    assert fm.period_two_part("L1", 0, 0) == ([4], False)
    assert fm.period_two_part("P1", 0, 0) == ([2], False)
    assert fm.period_two_part("P2", 2, -2) == ([], False)


def test_z4_clause_is_flagged():
    two, amb = fm.period_two_part("L1", 0, 6)
    assert two == [4] and amb
    fv = fm.formula_tate("L1", 6)
    assert fv.ambiguous and fv.note


@pytest.mark.parametrize("label", ["L1", "L2", "L3", "ZH"])
def test_unshifted_self_dual_classes(label):
    L = cat.build(label)
    for n in range(-3, 4):
        assert fm.formula_tate(label, n).invariants == gl.tate(L, n), n


@pytest.mark.parametrize("label", ["P1", "P2^-1", "L1^1", "L2^-2", "P1inj"])
def test_signed_convention_matches_oracle(label):
    L = cat.build(label)
    for n in range(-3, 4):
        assert fm.formula_tate(label, n, "signed").invariants == glb.tate_fast(L, n), n


def test_projective_labels_vanish_at_two():
    for label in ("ZG", "B1", "B2"):
        for n in (-2, 0, 1):
            assert fm.formula_tate(label, n).two_part == []


@pytest.mark.parametrize("label", ["T1(1,1)", "T1(2,3)", "Tth(1,2)", "Tth(3,3)", "T([1,0],2)"])
def test_tube_formulas(label):
    L = cat.build(label)
    for n in range(-2, 3):
        assert fm.formula_tate(label, n).invariants == glb.tate_fast(L, n), n


def test_three_part_rule():
    # trivial has Z/3 in even degrees only
    assert [fm.three_part(cat.parse_label("L1"), n) for n in (-2, -1, 0, 1)] == [[3], [], [3], []]


def test_conformance_records():
    recs = fm.conformance("L3", range(-1, 2))
    assert [r.status for r in recs] == ["match"] * 3
    text = fm.render_records(recs)
    assert text.splitlines()[0].split() == ["label", "n", "formula", "oracle", "status"]


def test_conformance_resolves_ambiguous_cell():
    recs = fm.conformance("L1", [6])
    # the oracle has F_2^2 there, so the flagged Z/4 is absent
    assert recs[0].status == "mismatch"
    assert gl.primary_part(recs[0].oracle, 2) == [2, 2]


def test_write_jsonl(tmp_path):
    path = tmp_path / "out.jsonl"
    fm.write_jsonl(fm.conformance("L2", [0, 1]), str(path))
    assert len(path.read_text().splitlines()) == 2
