import random

import pytest

from latcoh import exactalg as ea


def random_matrix(rng, m, n, lo=-6, hi=6):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)]


@pytest.fixture(params=["flint", "python"])
def backend(request):
    old = ea.BACKEND
    if request.param == "flint" and ea.flint is None:
        pytest.skip("python-flint missing")
    ea.set_backend(request.param)
    yield request.param
    ea.set_backend(old)


def test_snf_known_examples():
    assert ea.elementary_divisors([[2, 0], [0, 3]]) == [1, 6]
    assert ea.elementary_divisors([[4, 0], [0, 6]]) == [2, 12]
    assert ea.elementary_divisors([[0, 0], [0, 0]]) == []


def test_snf_transforms():
    rng = random.Random(1)
    for _ in range(30):
        M = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        D, invs, U, V = ea.snf(M)
        assert ea.matmul(ea.matmul(U, M), V) == D
        assert abs(ea.determinant(U)) == 1 and abs(ea.determinant(V)) == 1
        for a, b in zip(invs, invs[1:]):
            assert b % a == 0


def test_snf_pivot_strategies_agree():
    rng = random.Random(2)
    for _ in range(50):
        M = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6), -20, 20)
        assert ea.snf(M, pivot="minabs")[1] == ea.snf(M, pivot="first")[1]


def test_hnf_and_kernel(backend):
    rng = random.Random(3)
    for _ in range(40):
        M = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 6))
        H, U = ea.hnf(M)
        assert ea.matmul(U, M) == H
        assert abs(ea.determinant(U)) == 1
        K = ea.kernel_basis(M, len(M[0]))
        for x in K:
            assert ea.matvec(M, x) == [0] * len(M)
        assert len(K) == len(M[0]) - ea.row_rank(M)


def test_backends_agree_on_hnf_basis():
    if ea.flint is None:
        pytest.skip("python-flint missing")
    rng = random.Random(4)
    old = ea.BACKEND
    try:
        for _ in range(40):
            M = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
            ea.set_backend("flint")
            a = ea.hnf_basis(M)
            ea.set_backend("python")
            b = ea.hnf_basis(M)
            assert a == b
    finally:
        ea.set_backend(old)


def test_quotient_invariants():
    # Z^2 / span((2,0), (0,6)) = Z/2 + Z/6
    assert ea.quotient_invariants(ea.identity(2), [[2, 0], [0, 6]]) == [2, 6]
    with pytest.raises(ea.InfiniteQuotientError):
        ea.quotient_invariants(ea.identity(2), [[2, 0]])


def test_solve_integral():
    B = [[1, 2], [0, 3]]
    assert ea.solve_integral(B, [[2, 7]]) == [[2, 1]]
    with pytest.raises(ValueError):
        ea.solve_integral(B, [[0, 1]])


def test_gf2_and_modp():
    M = [[1, 1, 0], [0, 1, 1]]
    N = ea.gf2_nullspace(M)
    assert N == [[1, 1, 1]]
    assert ea.gf2_rank([[1, 1], [1, 1]]) == 1
    R, piv = ea.modp_rref([[1, 2], [2, 1]], 3)
    assert len(R) == 1 and piv == [0]
    for x in ea.modp_nullspace([[1, 2, 0], [0, 1, 1]], 3):
        assert (x[0] + 2 * x[1]) % 3 == 0 and (x[1] + x[2]) % 3 == 0


def test_gf4_field():
    els = [ea.GF4(a, b) for a in (0, 1) for b in (0, 1)]
    one = ea.GF4(1, 0)
    for x in els:
        if x:
            assert x * x.inverse() == one
    t = ea.GF4(0, 1)
    assert t * t + t + one == ea.GF4(0, 0)


def test_block_diag_rectangular():
    D = ea.block_diag([[1, 2]], [[3], [4]])
    assert D == [[1, 2, 0], [0, 0, 3], [0, 0, 4]]


def test_parse_and_format_matrix():
    M = [[1, -2], [0, 3]]
    assert ea.parse_matrix(ea.format_matrix(M)) == M
