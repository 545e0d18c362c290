import pytest

from latcoh import catalog as cat
from latcoh import glattice as gl
from latcoh import graphrep as gr

COMPOSITES = [
    "Sum(L1, P2^1)",
    "Bowtie(L1, L2)",
    "Glue({L1, L2}, {Lam, Z3, L3_3, L3_3})",
    "T([1,1,0,1],1)",
]


@pytest.mark.parametrize("text", cat.catalog_labels(2) + COMPOSITES)
def test_labels_round_trip(text):
    label = cat.parse_label(text)
    assert str(label) == text
    assert cat.parse_label(cat.format_label(label)) == label


@pytest.mark.parametrize("text", ["T([1,1],1)", "T([1,1,1],1)"])
def test_special_polynomials_excluded(text):
    with pytest.raises(cat.ExcludedParameterError):
        cat.parse_label(text)


@pytest.mark.parametrize("text, pos", [("L9", 0), ("P2^", 3), ("T1(3,1)", 0), ("T([1,0,1],1)", 0)])
def test_bad_labels(text, pos):
    with pytest.raises(cat.LabelError) as info:
        cat.parse_label(text)
    assert info.value.pos == pos
    assert info.value.text == text


@pytest.mark.parametrize("text, rtype", [
    ("L3", (0, 0, 1)),
    ("ZH", (1, 1, 0)),
    ("ZG", (1, 1, 3)),
    ("B1", (1, 0, 1)),
    ("P1inj", (1, 0, 1)),
    ("P2^-1", (2, 1, 4)),
    ("T1(2,2)", (1, 1, 3)),
    ("Tth(3,1)", (0, 1, 2)),
    ("T([1,0],2)", (2, 2, 6)),
])
def test_build_rational_type(text, rtype):
    L = cat.build(text)
    assert gl.validate(L) == []
    assert gl.rational_type(L) == rtype
    assert cat.label_rational_type(cat.parse_label(text)) == rtype


def test_build_is_deterministic():
    a = cat.build("T1(2,2)", seed=3)
    b = cat.build(cat.parse_label("T1(2,2)"), seed=3)
    assert a == b


def test_degree_three_tube_not_built():
    with pytest.raises(cat.BuildError):
        cat.build("T([1,1,0,1],1)")


def test_tube_dimvectors():
    for text in ["T1(1,2)", "T1(2,2)", "T([1,0],1)"]:
        assert cat.tube_dimvector(cat.parse_label(text)) == gr.OMEGA
    # the θ tube sits over a point of degree 2
    assert cat.tube_dimvector(cat.parse_label("Tth(1,3)")) == gr.OMEGA * 2
    assert gr.defect(cat.tube_dimvector(cat.parse_label("Tth(2,1)"))) == 0


def test_shift_dimvectors_follow_diagram():
    for cls in ("L1", "P2", "L3"):
        name = cat.PRINCIPAL[cls]
        for k in (-1, 1):
            L = cat.build("%s^%d" % (cls, k))
            assert gr.recover_dimvector(L) == gr.tau_dim_shift(cls, k), (name, k)


def test_conformance_record():
    r = cat.ConformanceRecord("L1", 0, [4], [4], "match")
    assert r.to_json()["status"] == "match"
    with pytest.raises(ValueError):
        cat.ConformanceRecord("L1", 0, [4], [4], "maybe")
