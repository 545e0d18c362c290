import pytest

from latcoh import catalog as cat
from latcoh import glattice as gl
from latcoh import globalize as glb


def split_sum():
    return gl.direct_sum(gl.trivial(), cat.build("L2"))


def test_three_adic_spec():
    spec = glb.ThreeAdicSpec.from_atoms(["Lam", "Z3", "L3_3", "L3_3"])
    assert spec == glb.ThreeAdicSpec(1, 0, 2, 1)
    assert spec.compatible((2, 1, 2))
    assert not spec.compatible((1, 1, 2))
    assert glb.ThreeAdicSpec.split((2, 1, 2), 1) == spec
    assert sorted(spec.atoms()) == ["L3_3", "L3_3", "Lam", "Z3"]


def test_lambda_count():
    assert glb.lambda_count(cat.build("ZH")) == 1
    assert glb.lambda_count(split_sum()) == 0
    assert glb.three_adic_counts(split_sum()) == (1, 1)
    assert glb.three_adic_counts(cat.build("ZH")) == (0, 0)


def test_glue_gives_zh():
    M = glb.glue(split_sum(), glb.ThreeAdicSpec(0, 0, 0, 1))
    assert gl.rational_type(M) == (1, 1, 0)
    assert glb.lambda_count(M) == 1
    assert glb.genus_equal(M, cat.build("ZH"))
    assert not glb.genus_equal(M, split_sum())


def test_glue_label():
    M = cat.build("Glue({L1, L2}, {Lam})")
    assert glb.genus_equal(M, cat.build("ZH"))


def test_glue_rejects_bad_spec():
    with pytest.raises(glb.GluingError):
        glb.glue(gl.trivial(), glb.ThreeAdicSpec(0, 0, 0, 1))
    with pytest.raises(glb.GluingError):
        glb.glue(cat.build("ZH"), glb.ThreeAdicSpec(1, 1, 0, 0))


def test_glue_keeps_two_part():
    base = cat.build("P2^-1")
    M = glb.glue(base, glb.ThreeAdicSpec.split(gl.rational_type(base), 1))
    assert gl.rational_type(M) == gl.rational_type(base)
    for n in (-2, -1, 0, 1):
        assert gl.tate_two_part(M, n) == gl.tate_two_part(base, n)


def test_enumerate_global():
    labels = glb.enumerate_global("P2^-1")
    assert [str(x) for x in labels] == [
        "Glue({P2^-1}, {Z3, Z3, Z3th, L3_3, L3_3, L3_3, L3_3})",
        "Glue({P2^-1}, {Lam, Z3, L3_3, L3_3, L3_3, L3_3})",
    ]
    assert len(glb.enumerate_global("L3")) == 1
    with pytest.raises(cat.LabelError):
        glb.enumerate_global("Sum(L1, L2)")


def test_bowtie():
    B = cat.build("Bowtie(L1, L2)")
    assert B.rank == 3
    assert glb.lambda_count(B) == glb.bowtie_lambda_count(cat.parse_label("Bowtie(L1, L2)"))
    with pytest.raises(glb.GluingError):
        cat.build("Bowtie(L1, L3)")


def test_fingerprint_fields():
    fp = glb.genus_fingerprint(cat.build("ZH"), radius=2)
    assert fp.rational_type == (1, 1, 0)
    # degrees -2..2
    assert fp.tate_window == ((2, 2), (), (4,), (), (2, 2))
    assert fp.to_json()["rational_type"] == [1, 1, 0]
