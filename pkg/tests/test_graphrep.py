import pytest

from latcoh import glattice as gl
from latcoh import graphrep as gr


def test_dimvector_parse_and_print():
    D = gr.DimVector.parse("(0,1;0,2,1)")
    assert D == gr.DimVector.parse("01021") == gr.DimVector.parse("0,1,0,2,1")
    assert str(D) == "(0,1;0,2,1)"
    assert D.code == "01021"
    assert D.rank == 8
    with pytest.raises(ValueError):
        gr.DimVector.parse("1,2,3")
    with pytest.raises(ValueError):
        gr.DimVector(-1, 0, 0, 0, 0)


def test_null_root_is_radical():
    assert gr.quadratic_form(gr.OMEGA) == 0
    assert gr.defect(gr.OMEGA) == 0
    D = gr.DimVector.parse("01021")
    assert gr.euler_form(gr.OMEGA, D) == gr.defect(D)


def test_identifications_hold():
    assert gr.check_identifications() == []


@pytest.mark.parametrize("cls", gr.PRINCIPAL_CLASSES)
def test_principal_round_trip(cls):
    D = gr.diagram_entry(cls, 0)
    V = gr.search_indecomposable(D, seed=0, accept=gr.valid_rep)
    assert gr.valid_rep(V)
    assert gr.is_indecomposable_rep(V)
    M = gr.pullback_lattice(V)
    assert gr.recover_dimvector(M) == D
    assert gl.rational_type(M) == (D.d1, D.d2, D.d3)
    assert gl.is_a_plus(M)


def test_direct_sum_decomposes():
    V1 = gr.search_indecomposable(gr.diagram_entry("L1", 0), accept=gr.valid_rep)
    V2 = gr.search_indecomposable(gr.diagram_entry("L2", 0), accept=gr.valid_rep)
    S = gr.direct_sum(V1, V2)
    assert S.dim == V1.dim + V2.dim
    assert not gr.is_indecomposable_rep(S)


def test_json_and_isomorphism():
    V = gr.search_indecomposable(gr.diagram_entry("P2", 0), accept=gr.valid_rep)
    W = gr.GammaRep.from_json(V.to_json())
    assert gr.is_isomorphic_rep(V, W)
    other = gr.search_indecomposable(gr.diagram_entry("L3", 0), accept=gr.valid_rep)
    assert not gr.is_isomorphic_rep(V, other)


def test_tau_shift_matches_diagram():
    assert str(gr.tau_dim_shift("P2", 1)) == "(2,2;0,2,1)"
    for cls in gr.PRINCIPAL_CLASSES:
        assert gr.tau_dim_shift(cls, 0) == gr.diagram_entry(cls, 0)
