"""The alternating group A4 as K ⋊ <σ>, K = {1, a, b, c} the Klein subgroup.

An element is a pair ``(v, s)`` meaning ``v·σ^s`` with ``v`` in K written as
a bit pair (a = (1, 0), b = (0, 1), c = ab = (1, 1)).  Conjugation by σ sends
a ↦ b ↦ c ↦ a.
"""

from itertools import product

KLEIN = ((0, 0), (1, 0), (0, 1), (1, 1))
ELEMENTS = tuple((v, s) for s in range(3) for v in KLEIN)
ORDER = 12


def _phi(v):
    # σ v σ⁻¹ on K: a -> b, b -> c
    x, y = v
    return (y, x ^ y)


def conj_sigma(v, s):
    for _ in range(s % 3):
        v = _phi(v)
    return v


def mul(g, h):
    (v1, s1), (v2, s2) = g, h
    w = conj_sigma(v2, s1)
    return ((v1[0] ^ w[0], v1[1] ^ w[1]), (s1 + s2) % 3)


def inverse(g):
    for h in ELEMENTS:
        if mul(g, h) == IDENTITY:
            return h
    raise AssertionError("unreachable")


IDENTITY = ((0, 0), 0)
A = ((1, 0), 0)
B = ((0, 1), 0)
C = ((1, 1), 0)
SIGMA = ((0, 0), 1)

INDEX = {g: i for i, g in enumerate(ELEMENTS)}


def conjugacy_class(g):
    """0 = identity, 1 = involutions, 2 = class of σ, 3 = class of σ²."""
    v, s = g
    if s == 0:
        return 0 if v == (0, 0) else 1
    return 2 if s == 1 else 3


CLASS_SIZES = (1, 3, 4, 4)


def check_tables():
    for g, h, k in product(ELEMENTS, repeat=3):
        assert mul(mul(g, h), k) == mul(g, mul(h, k))
