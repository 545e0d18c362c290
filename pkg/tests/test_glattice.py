import pytest

from latcoh import exactalg as ea
from latcoh import glattice as gl


def test_trivial_low_degrees():
    Z = gl.trivial()
    # Ĥ^-3..3 of Z for A4
    assert [gl.tate(Z, n) for n in range(-3, 4)] == [[2], [3], [], [12], [], [3], [2]]


def test_regular_is_acyclic():
    R = gl.regular()
    assert R.rank == 12
    assert gl.rational_type(R) == (1, 1, 3)
    for n in (-2, -1, 0, 1, 2):
        assert gl.tate(R, n) == []


def test_invalid_matrices_rejected():
    I = ea.identity(2)
    swap = [[0, 1], [1, 0]]
    with pytest.raises(gl.LatticeError):
        # A of order 2 but S fixing everything breaks S A S^-1 = B
        gl.GLattice.from_matrices(swap, I, I)


def test_dual_flips_degrees():
    L = gl.cosyzygy(gl.trivial())
    D = gl.dual(L)
    for n in (-2, -1, 1, 2):
        assert gl.tate(D, n) == gl.tate(L, -n)


def test_dimension_shift():
    Z = gl.trivial()
    O = gl.syzygy(Z)
    C = gl.cosyzygy(Z)
    for n in (-1, 0, 1, 2):
        assert gl.tate(O, n) == gl.tate(Z, n - 1)
        assert gl.tate(C, n) == gl.tate(Z, n + 1)


def test_oracle_routes_agree():
    Z = gl.trivial()
    for n in range(-4, 5):
        full = gl.tate(Z, n)
        assert gl.tate_by_cosyzygy(Z, n) == full
        assert gl.tate_two_part(Z, n) == gl.primary_part(full, 2)


def test_reduce_basis_keeps_lattice():
    L = gl.syzygy(gl.syzygy(gl.trivial()))
    R = gl.reduce_basis(L)
    assert gl.rational_type(R) == gl.rational_type(L)
    assert gl.tate(R, 0) == gl.tate(L, 0)
    assert max(abs(x) for M in R.elements.values() for row in M for x in row) < 10


def test_bijectives():
    B1 = gl.bijective(1).lattice
    B2 = gl.bijective(2).lattice
    assert (B1.rank, B2.rank) == (4, 8)
    assert gl.rational_type(B1) == (1, 0, 1)
    assert gl.rational_type(B2) == (0, 1, 2)
    assert not gl.is_a_plus(B1) and not gl.is_a_plus(B2)
    assert gl.is_a_plus(gl.trivial())


def test_strip_bijective_removes_summand():
    Z = gl.trivial()
    L = gl.direct_sum(Z, gl.bijective(2).lattice)
    S = gl.strip_bijective(L)
    assert S.rank == 1 and gl.rational_type(S) == (1, 0, 0)


def test_group_helpers():
    assert gl.canonical([2, 4, 3]) == [2, 12]
    assert gl.invariants_sum([2], [6]) == [2, 6]
    assert gl.primary_part([2, 6], 2) == [2, 2]
    assert gl.primary_part([2, 6], 3) == [3]
    with pytest.raises(ValueError):
        gl.primary_part([5], 5)


def test_json_round_trip():
    L = gl.cosyzygy(gl.trivial())
    assert gl.GLattice.from_json(L.to_json()) == L
