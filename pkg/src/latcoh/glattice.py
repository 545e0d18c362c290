"""
A4-lattices and a brute-force Tate cohomology oracle.

A lattice is ``Z^rank`` with the generators a, b, σ acting on column vectors
by integer matrices.  Everything here is computed directly from those
matrices: fixed points, the norm map, syzygies over honest projective
modules, Hom-lattices.  No result of the classification is used.
"""

import json
import logging
from dataclasses import dataclass, field
from functools import cached_property

from . import exactalg as ea
from . import group

log = logging.getLogger(__name__)


class LatticeError(ValueError):
    """Invalid lattice data or a failed construction."""


class BijectiveError(LatticeError):
    """The lattice is 2-adically a sum of bijective lattices."""


def _freeze(M):
    return tuple(tuple(int(a) for a in row) for row in M)


@dataclass(frozen=True)
class GLattice:
    rank: int
    act_a: tuple
    act_b: tuple
    act_s: tuple
    name: str = field(default="", compare=False)

    @classmethod
    def from_matrices(cls, act_a, act_b, act_s, name="", check=True):
        L = cls(len(act_a), _freeze(act_a), _freeze(act_b), _freeze(act_s), name)
        if check:
            problems = validate(L)
            if problems:
                raise LatticeError("invalid lattice %s: %s" % (name or "", "; ".join(problems)))
        return L

    @property
    def A(self):
        return [list(r) for r in self.act_a]

    @property
    def B(self):
        return [list(r) for r in self.act_b]

    @property
    def S(self):
        return [list(r) for r in self.act_s]

    @cached_property
    def elements(self):
        """Matrices of all 12 group elements, keyed like ``group.ELEMENTS``."""
        n = self.rank
        A, B, S = self.A, self.B, self.S
        I = ea.identity(n)
        klein = {(0, 0): I, (1, 0): A, (0, 1): B, (1, 1): ea.matmul(A, B)}
        S2 = ea.matmul(S, S)
        powers = (I, S, S2)
        return {(v, s): ea.matmul(klein[v], powers[s]) for (v, s) in group.ELEMENTS}

    @cached_property
    def norm_matrix(self):
        out = ea.zeros(self.rank, self.rank)
        for M in self.elements.values():
            out = ea.add(out, M)
        return out

    def with_name(self, name):
        return GLattice(self.rank, self.act_a, self.act_b, self.act_s, name)

    def to_json(self):
        return {"rank": self.rank, "act_a": self.A, "act_b": self.B, "act_s": self.S}

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        L = cls.from_matrices(obj["act_a"], obj["act_b"], obj["act_s"])
        if L.rank != obj["rank"]:
            raise LatticeError("rank field %r does not match matrices" % obj["rank"])
        return L

    def __repr__(self):
        return "GLattice(%s rank=%d)" % (self.name or "?", self.rank)


def validate(L):
    """Return the list of violated defining relations (empty when valid)."""
    n = L.rank
    for nm, M in (("act_a", L.act_a), ("act_b", L.act_b), ("act_s", L.act_s)):
        if len(M) != n or any(len(r) != n for r in M):
            return ["%s is not %dx%d" % (nm, n, n)]
    A, B, S = L.A, L.B, L.S
    I = ea.identity(n)
    mm = ea.matmul
    AB = mm(A, B)
    problems = []
    if mm(A, A) != I:
        problems.append("a^2 != 1")
    if mm(B, B) != I:
        problems.append("b^2 != 1")
    if AB != mm(B, A):
        problems.append("ab != ba")
    if mm(S, mm(S, S)) != I:
        problems.append("s^3 != 1")
    if mm(S, A) != mm(B, S):
        problems.append("s a s^-1 != b")
    if mm(S, B) != mm(AB, S):
        problems.append("s b s^-1 != ab")
    return problems


def trivial(n=1):
    I = ea.identity(n)
    return GLattice.from_matrices(I, I, I, name="trivial" if n == 1 else "trivial^%d" % n)


def zero():
    return GLattice.from_matrices([], [], [], name="0")


def regular():
    """ZG with basis e_h and g·e_h = e_{gh}."""
    n = group.ORDER

    def left(g):
        M = ea.zeros(n, n)
        for h in group.ELEMENTS:
            M[group.INDEX[group.mul(g, h)]][group.INDEX[h]] = 1
        return M

    return GLattice.from_matrices(left(group.A), left(group.B), left(group.SIGMA), name="ZG")


def dual(L):
    A, B, S = L.A, L.B, L.S
    S_inv = ea.matmul(S, S)
    name = L.name + "*" if L.name else ""
    return GLattice.from_matrices(ea.transpose(A), ea.transpose(B), ea.transpose(S_inv),
                                  name=name, check=False)


def direct_sum(*lats):
    if not lats:
        raise LatticeError("empty direct sum")
    out = GLattice.from_matrices(
        ea.block_diag(*[L.A for L in lats]),
        ea.block_diag(*[L.B for L in lats]),
        ea.block_diag(*[L.S for L in lats]),
        name=" + ".join(L.name or "?" for L in lats),
        check=False,
    )
    return out


def sublattice(L, rows, name=""):
    """G-stable sublattice spanned by ``rows`` (vectors in L's coordinates)."""
    basis = ea.hnf_basis([list(r) for r in rows])
    if not basis:
        raise LatticeError("zero sublattice")
    mats = []
    for X in (L.A, L.B, L.S):
        images = [ea.matvec(X, b) for b in basis]
        try:
            C = ea.solve_integral(basis, images)
        except ValueError:
            raise LatticeError("subspace is not G-stable") from None
        mats.append(ea.transpose(C))
    return GLattice.from_matrices(*mats, name=name), basis


def quotient(L, sub_rows, name=""):
    """Torsion-free quotient ``L / sat(sub_rows)``."""
    n = L.rank
    S = ea.saturate(sub_rows, n)
    k = len(S)
    W, Winv = ea.complete_basis(S, n)
    mats = []
    for X in (L.A, L.B, L.S):
        M = []
        for b in W[k:]:
            coords = ea.vecmat(ea.matvec(X, b), Winv)
            M.append(coords[k:])
        mats.append(ea.transpose(M) if M else [])
    if n - k == 0:
        raise LatticeError("quotient is zero")
    return GLattice.from_matrices(*mats, name=name)


# ---------------------------------------------------------------------------
# fixed points, norm, Tate cohomology

def fixed_sublattice(L):
    n = L.rank
    I = ea.identity(n)
    eqs = ea.sub(L.A, I) + ea.sub(L.B, I) + ea.sub(L.S, I)
    return ea.kernel_basis(eqs, n)


def norm_image(L):
    """Generators (rows) of N·L; each lies in the fixed sublattice."""
    return ea.hnf_basis(ea.transpose(L.norm_matrix))


def augmentation_image(L):
    """Generators of Σ_g (g-1)L; the generators a, b, σ suffice."""
    n = L.rank
    I = ea.identity(n)
    cols = []
    for X in (L.A, L.B, L.S):
        cols += ea.transpose(ea.sub(X, I))
    return ea.hnf_basis(cols)


def tate_zero(L):
    fixed = fixed_sublattice(L)
    image = norm_image(L)
    if fixed:
        ea.solve_integral(fixed, image)  # norm image lies in L^G
    return ea.quotient_invariants(fixed, image)


def tate_minus_one(L):
    ker = ea.kernel_basis(L.norm_matrix, L.rank)
    return ea.quotient_invariants(ker, augmentation_image(L))


def _syzygy_chain(L, depth):
    chain = L.__dict__.setdefault("_syz_chain", [L])
    while len(chain) <= depth:
        chain.append(syzygy(chain[-1], "plain"))
    return chain[depth]


def _cached_dual(L):
    D = L.__dict__.get("_dual")
    if D is None:
        D = dual(L)
        L.__dict__["_dual"] = D
    return D


def _two_local_chain(L, depth):
    chain = L.__dict__.setdefault("_syz2_chain", [L])
    while len(chain) <= depth:
        prev = chain[-1]
        if prev.rank == 0:
            chain.append(prev)
            continue
        try:
            chain.append(strip_bijective(syzygy(prev, "two_minimal")))
        except BijectiveError:
            # 2-adically projective: every later term is zero
            chain.append(zero())
    return chain[depth]


def tate_two_part(L, n):
    """2-primary part of Ĥⁿ(A4, L), shifting through bijective lattices.

    B1 and B2 become projective after tensoring with Z_(2), so syzygies
    built from them shift the 2-part exactly and stay small.
    """
    if n > 0:
        return tate_two_part(_cached_dual(L), -n)
    cache = L.__dict__.setdefault("_tate2", {})
    if n not in cache:
        if n == 0:
            cache[n] = primary_part(tate_zero(L), 2)
        else:
            cache[n] = primary_part(tate_minus_one(_two_local_chain(L, -1 - n)), 2)
    return list(cache[n])


def tate(L, n):
    """Ĥⁿ(A4, L) as a list of elementary divisors."""
    if n > 0:
        return tate(_cached_dual(L), -n)
    cache = L.__dict__.setdefault("_tate", {})
    if n not in cache:
        if n == 0:
            cache[n] = tate_zero(L)
        elif n == -1:
            cache[n] = tate_minus_one(L)
        else:
            cache[n] = tate_minus_one(_syzygy_chain(L, -1 - n))
    out = cache[n]
    for d in out:
        assert group.ORDER % d == 0, "Tate group not killed by |G|"
    return list(out)


def _cosyzygy_chain(L, depth):
    chain = L.__dict__.setdefault("_cosyz_chain", [L])
    while len(chain) <= depth:
        chain.append(cosyzygy(chain[-1], "plain"))
    return chain[depth]


def tate_by_cosyzygy(L, n):
    """Ĥⁿ via dimension shifting to degree 0 only (no duality)."""
    if n > 0:
        return tate_zero(_cosyzygy_chain(L, n))
    return tate_zero(_syzygy_chain(L, -n))


def tate_window(L, lo, hi):
    return {n: tate(L, n) for n in range(lo, hi + 1)}


def primary_part(invs, p):
    if p not in (2, 3):
        raise ValueError("only the primes 2 and 3 divide |A4|")
    out = []
    for d in invs:
        q = 1
        while d % p == 0:
            d //= p
            q *= p
        if q > 1:
            out.append(q)
    return sorted(out)


def invariants_sum(*groups):
    """Elementary divisors of a direct sum, in divisibility-chain form."""
    return canonical([d for g in groups for d in g])


def canonical(divisors):
    """Invariant factor form of the group ⊕ Z/d."""
    # collect prime powers per prime
    powers = {}
    for d in divisors:
        x = d
        p = 2
        while x > 1:
            q = 1
            while x % p == 0:
                x //= p
                q *= p
            if q > 1:
                powers.setdefault(p, []).append(q)
            p += 1
    length = max((len(v) for v in powers.values()), default=0)
    out = [1] * length
    for p, qs in powers.items():
        qs = sorted(qs, reverse=True)
        for i, q in enumerate(qs):
            out[length - 1 - i] *= q
    return [d for d in out if d > 1]


# ---------------------------------------------------------------------------
# rational type

def traces(L):
    el = L.elements
    tr = lambda M: sum(M[i][i] for i in range(L.rank))
    return (L.rank, tr(el[group.A]), tr(el[group.SIGMA]), tr(el[((0, 0), 2)]))


def rational_type(L):
    """Multiplicities (r1, r2, r3) of Q, Q[θ] and the 3-dimensional W."""
    t0, ta, ts, ts2 = traces(L)
    n1 = t0 + 3 * ta + 4 * ts + 4 * ts2
    n2 = 2 * t0 + 6 * ta - 4 * ts - 4 * ts2
    n3 = 3 * t0 - 3 * ta
    if n1 % 12 or n2 % 24 or n3 % 12:
        raise LatticeError("character is not rational: traces %r" % ((t0, ta, ts, ts2),))
    rt = (n1 // 12, n2 // 24, n3 // 12)
    if rt[0] + 2 * rt[1] + 3 * rt[2] != L.rank:
        raise LatticeError("rational type %r does not add up to rank %d" % (rt, L.rank))
    return rt


# ---------------------------------------------------------------------------
# Hom lattices

def hom_lattice(L1, L2):
    """Basis of Hom_G(L1, L2) as a list of rank2×rank1 integer matrices."""
    n1, n2 = L1.rank, L2.rank
    eqs = []
    for X1, X2 in ((L1.A, L2.A), (L1.B, L2.B), (L1.S, L2.S)):
        # (X·X1 - X2·X)[i][j] = 0, unknown X[i][k] at i*n1 + k
        for i in range(n2):
            for j in range(n1):
                row = [0] * (n1 * n2)
                for k in range(n1):
                    if X1[k][j]:
                        row[i * n1 + k] += X1[k][j]
                for k in range(n2):
                    if X2[i][k]:
                        row[k * n1 + j] -= X2[i][k]
                if any(row):
                    eqs.append(row)
    basis = ea.kernel_basis(eqs, n1 * n2)
    return [[v[i * n1:(i + 1) * n1] for i in range(n2)] for v in basis]


# ---------------------------------------------------------------------------
# bijective lattices B_i = ZG·e_i, e_1 = (1+σ+σ²)/3, e_2 = 1 - e_1

@dataclass(frozen=True)
class Bijective:
    index: int
    lattice: GLattice
    coeffs: tuple  # basis row j = Σ_g coeffs[j][g] · g·gen

    def map_to(self, L, y):
        """Matrix of the G-map B_i -> L sending the generator to ``y``."""
        els = L.elements
        images = [ea.matvec(els[g], y) for g in group.ELEMENTS]
        cols = []
        for row in self.coeffs:
            v = [0] * L.rank
            for c, img in zip(row, images):
                if c:
                    v = [a + c * b for a, b in zip(v, img)]
            cols.append(v)
        return ea.transpose(cols)

    def generator_space(self, L):
        """Basis of the vectors y admissible as images of the generator."""
        n = L.rank
        I = ea.identity(n)
        S = L.S
        if self.index == 1:
            return ea.kernel_basis(ea.sub(S, I), n)
        S2 = ea.matmul(S, S)
        return ea.kernel_basis(ea.add(ea.add(I, S), S2), n)


_BIJ = {}


def bijective(i):
    if i in _BIJ:
        return _BIJ[i]
    ZG = regular()
    gen = [0] * group.ORDER
    for s in range(3):
        g = ((0, 0), s)
        gen[group.INDEX[g]] += 1
    if i == 2:
        gen = [-x for x in gen]
        gen[group.INDEX[group.IDENTITY]] += 3
    els = ZG.elements
    spanning = [ea.matvec(els[g], gen) for g in group.ELEMENTS]
    H, U = ea.hnf(spanning)
    r = sum(1 for row in H if any(row))
    lat, basis = sublattice(ZG, H[:r], name="B%d" % i)
    b = Bijective(i, lat, tuple(tuple(row) for row in U[:r]))
    _BIJ[i] = b
    return b


# ---------------------------------------------------------------------------
# 2-local top

def radical_mod2(L):
    """Reduced echelon basis (GF(2)) of (2L + Σ_v (v-1)L)/2L."""
    n = L.rank
    I = ea.identity(n)
    el = L.elements
    cols = []
    for v in ((1, 0), (0, 1), (1, 1)):
        cols += ea.transpose(ea.sub(el[(v, 0)], I))
    return ea.gf2_rref(cols, n)


def _greedy_extend(R, pivots, candidates, want, companion=None):
    """Pick candidates whose images extend the GF(2) span by ``want`` dims."""
    rows = list(R)
    chosen = []
    dim0 = len(rows)
    for y in candidates:
        if len(rows) - dim0 >= want:
            break
        add = [y] if companion is None else [y, companion(y)]
        trial, _ = ea.gf2_rref(rows + add, len(y))
        if len(trial) == len(rows) + len(add):
            rows = trial
            chosen.append(y)
    if len(rows) - dim0 < want:
        raise LatticeError("could not lift the 2-local top")
    return chosen


def top_multiplicities(L):
    """Multiplicities (a, b) of the simples F2 and F4 in L/rad L."""
    R, piv = radical_mod2(L)
    n = L.rank
    t = n - len(R)
    S = L.S
    S2 = ea.matmul(S, S)
    P = ea.add(ea.add(ea.identity(n), S), S2)
    fixed_part, _ = ea.gf2_rref(R + ea.transpose(P), n)
    a = len(fixed_part) - len(R)
    return a, (t - a) // 2


def _top_lifts(L):
    R, piv = radical_mod2(L)
    a, b = top_multiplicities(L)
    S = L.S
    ys = _greedy_extend(R, piv, bijective(1).generator_space(L), a)
    zs = _greedy_extend(R, piv, bijective(2).generator_space(L), 2 * b,
                        companion=lambda z: ea.matvec(S, z))
    return ys, zs


def _index(n, cols):
    """Index of span(cols) in Z^n (0 if not of full rank)."""
    return ea.lattice_index(cols, n)


def _free_map(L, y):
    els = L.elements
    return ea.transpose([ea.matvec(els[g], y) for g in group.ELEMENTS])


def _improve(n, cols, candidates, make_block):
    """Append blocks from candidates until the image is all of Z^n."""
    cols = ea.hnf_basis(cols)
    idx = _index(n, cols)
    added = []
    for y in candidates:
        if idx == 1:
            break
        new_cols = ea.hnf_basis(cols + ea.transpose(make_block(y)))
        new_idx = _index(n, new_cols)
        if (idx == 0 and len(new_cols) > len(cols)) or (new_idx and (idx == 0 or new_idx < idx)):
            cols, idx = new_cols, new_idx
            added.append(y)
    return cols, idx, added


def _perturb(L, gens):
    """Move generators by even vectors (the top mod 2 is unchanged) while
    that shrinks the index of their span."""
    n = L.rank

    def span(gs):
        cols = []
        for g in gs:
            cols += ea.transpose(_free_map(L, g))
        cols = ea.hnf_basis(cols)
        return cols, _index(n, cols)

    cols, idx = span(gens)
    for j in range(len(gens)):
        for e in ea.identity(n):
            if idx == 1:
                return gens, cols, idx
            trial = list(gens)
            trial[j] = [a + 2 * b for a, b in zip(gens[j], e)]
            tcols, tidx = span(trial)
            if tidx and (idx == 0 or tidx < idx):
                gens, cols, idx = trial, tcols, tidx
    return gens, cols, idx


def syzygy(L, mode="plain"):
    """Kernel of a surjection onto L from a projective (or bijective) lattice.

    ``plain`` uses free modules ZG^g with a small generating set; the result
    is an honest syzygy, so Tate cohomology shifts by one degree.  Mode
    ``two_minimal`` uses B1^a ⊕ B2^b covering the 2-local top, with extra
    copies of B_i only when needed to make the map surjective at 3.
    """
    if L.rank == 0:
        return L
    n = L.rank
    ys, zs = _top_lifts(L)
    if mode == "plain":
        gens = []
        for i in range(max(len(ys), len(zs))):
            y = ys[i] if i < len(ys) else [0] * n
            z = zs[i] if i < len(zs) else [0] * n
            gens.append([p + q for p, q in zip(y, z)])
        gens, cols, idx = _perturb(L, gens)
        cols, idx, extra = _improve(n, cols, ea.identity(n), lambda y: _free_map(L, y))
        if idx != 1:
            raise LatticeError("syzygy: generator search failed")
        gens += extra
        F = direct_sum(*[regular()] * len(gens))
        blocks = [_free_map(L, g) for g in gens]
    elif mode == "two_minimal":
        B1, B2 = bijective(1), bijective(2)
        parts = [(B1, y) for y in ys] + [(B2, z) for z in zs]
        cols = []
        for Bi, y in parts:
            cols += ea.transpose(Bi.map_to(L, y))
        if _index(n, cols) != 1:
            cand = [(B1, y) for y in B1.generator_space(L)] + [(B2, z) for z in B2.generator_space(L)]
            cols, idx, extra = _improve(n, cols, cand, lambda p: p[0].map_to(L, p[1]))
            parts += extra
            if idx != 1:
                cols, idx, extra = _improve(n, cols, ea.identity(n), lambda y: _free_map(L, y))
                if idx != 1:
                    raise LatticeError("syzygy: surjectivity check failed")
                parts += [(None, y) for y in extra]
        F = direct_sum(*[p[0].lattice if p[0] else regular() for p in parts])
        blocks = [p[0].map_to(L, p[1]) if p[0] else _free_map(L, p[1]) for p in parts]
    else:
        raise ValueError("unknown syzygy mode %r" % mode)
    Phi = [sum((blk[i] for blk in blocks), []) for i in range(n)]
    K = ea.kernel_basis(Phi, F.rank)
    if not K:
        return zero()
    omega, _ = sublattice(F, K, name="Ω(%s)" % (L.name or "?"))
    assert omega.rank == F.rank - n
    return reduce_basis(omega)


def cosyzygy(L, mode="plain"):
    if L.rank == 0:
        return L
    out = reduce_basis(dual(syzygy(dual(L), mode)))
    return out.with_name("Ω⁻¹(%s)" % (L.name or "?"))


def reduce_basis(L):
    """Same lattice in an LLL-reduced basis for a G-invariant quadratic form.

    Kernels and quotients come out in Hermite bases whose action matrices
    grow quickly along a syzygy chain; this keeps the entries small.
    """
    if ea.flint is None or L.rank <= 1:
        return L
    n = L.rank
    mats = [ea.flint.fmpz_mat(X) for X in L.elements.values()]
    Q = sum((X.transpose() * X for X in mats[1:]), mats[0].transpose() * mats[0])
    _, U = Q.lll(transform=True, rep="gram", gram="exact")
    P = U.transpose()
    Pinv = ea.flint.fmpz_mat(ea.inverse_unimodular([[int(P[i, j]) for j in range(n)]
                                                    for i in range(n)]))
    new = []
    for X in (L.A, L.B, L.S):
        Y = Pinv * ea.flint.fmpz_mat(X) * P
        new.append([[int(Y[i, j]) for j in range(n)] for i in range(n)])
    return GLattice.from_matrices(*new, name=L.name)


# ---------------------------------------------------------------------------
# splitting off bijective summands

def find_bijective_summand(L, i):
    """A G-map B_i -> L that is split injective 2-adically, or None."""
    Bi = bijective(i)
    n = L.rank
    el = L.elements
    NK = ea.zeros(n, n)
    for v in group.KLEIN:
        NK = ea.add(NK, el[(v, 0)])
    for y in Bi.generator_space(L):
        s = ea.matvec(NK, y)
        if any(x % 2 for x in s):
            return Bi.map_to(L, y)
    return None


def strip_bijective(L):
    """Split off B1 and B2 summands until none is left (2-adically)."""
    name = L.name
    changed = True
    while changed:
        changed = False
        for i in (1, 2):
            u = find_bijective_summand(L, i)
            if u is None:
                continue
            if L.rank == bijective(i).lattice.rank:
                raise BijectiveError("lattice is itself bijective")
            L = quotient(L, ea.transpose(u))
            changed = True
    return reduce_basis(L).with_name(name)


def is_a_plus(L):
    return find_bijective_summand(L, 1) is None and find_bijective_summand(L, 2) is None
