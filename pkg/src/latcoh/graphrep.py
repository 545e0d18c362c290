"""Representations of the valued graph Γ and the A⁺-lattices they describe.

Vertices 1', 2' (over GF(2), GF(4)) map to 1, 3, 2 through the arrows
α, γ1, γ2, β.  A representation V gives the lattice of vectors of
M̃ = L1^d1 ⊕ L3^d3 ⊕ L2^d2 whose reduction mod 2 lies in Im φ(V).
"""

import random
from dataclasses import dataclass, field

from . import exactalg as ea
from . import glattice as gl
from .exactalg import GF4, ZERO, ONE


# ---------------------------------------------------------------------------
# dimension vectors

@dataclass(frozen=True)
class DimVector:
    d1p: int = 0
    d2p: int = 0
    d1: int = 0
    d3: int = 0
    d2: int = 0

    def __post_init__(self):
        if min(self.as_tuple()) < 0:
            raise ValueError("negative entry in dimension vector %r" % (self.as_tuple(),))

    def as_tuple(self):
        return (self.d1p, self.d2p, self.d1, self.d3, self.d2)

    @property
    def rank(self):
        return self.d1 + 3 * self.d3 + 2 * self.d2

    @property
    def total(self):
        """GF(2)-dimension of the whole representation."""
        return self.d1p + 2 * self.d2p + self.d1 + self.d3 + 2 * self.d2

    def __add__(self, other):
        return DimVector(*(a + b for a, b in zip(self.as_tuple(), other.as_tuple())))

    def __sub__(self, other):
        return DimVector(*(a - b for a, b in zip(self.as_tuple(), other.as_tuple())))

    def __mul__(self, k):
        return DimVector(*(k * a for a in self.as_tuple()))

    __rmul__ = __mul__

    def __str__(self):
        return "(%d,%d;%d,%d,%d)" % self.as_tuple()

    @property
    def code(self):
        return "".join(str(a) for a in self.as_tuple())

    @classmethod
    def parse(cls, text):
        """Accepts "(1,1;0,1,0)", "1,1,0,1,0" or the digit code "11010"."""
        t = text.strip().strip("()").replace(";", ",").replace(" ", "")
        parts = t.split(",") if "," in t else list(t)
        if len(parts) != 5:
            raise ValueError("dimension vector needs 5 entries: %r" % text)
        return cls(*(int(p) for p in parts))


OMEGA = DimVector(2, 2, 1, 3, 1)

# GF(2)-dimension of the endomorphism ring at each vertex (1', 2', 1, 3, 2)
_VERTEX_DIM = (1, 2, 1, 1, 2)
# arrows as (source, target, weight) on tuple positions
_ARROWS = ((0, 2, 1), (0, 3, 1), (1, 3, 2), (1, 4, 2))


def euler_form(x, y):
    """Non-symmetric Euler form of Γ, counted over GF(2)."""
    x, y = x.as_tuple(), y.as_tuple()
    out = sum(f * a * b for f, a, b in zip(_VERTEX_DIM, x, y))
    return out - sum(w * x[s] * y[t] for s, t, w in _ARROWS)


def quadratic_form(x):
    return euler_form(x, x)


def defect(x):
    """⟨ω, x⟩; zero exactly on dimension vectors of regular representations."""
    return euler_form(OMEGA, x)


# ---------------------------------------------------------------------------
# canonical identifications

L2_MATRICES = ([[1, 0], [0, 1]], [[1, 0], [0, 1]], [[0, -1], [1, -1]])
L3_MATRICES = (
    [[1, 0, 0], [0, -1, 0], [0, 0, -1]],
    [[-1, 0, 0], [0, 1, 0], [0, 0, -1]],
    [[0, 0, 1], [1, 0, 0], [0, 1, 0]],
)
# L3/2L3 = GF(2)·W_LINE ⊕ GF(4)-part with basis {W_F4[0], W_F4[1] = σ·W_F4[0]}
W_LINE = (1, 1, 1)
W_F4 = ((1, 1, 0), (0, 1, 1))


def model(name):
    if name == "L1":
        return gl.trivial(1).with_name("L1")
    if name == "L2":
        return gl.GLattice.from_matrices(*L2_MATRICES, name="L2")
    if name == "L3":
        return gl.GLattice.from_matrices(*L3_MATRICES, name="L3")
    raise ValueError("unknown irreducible %r" % name)


def check_identifications():
    """Matrix identities behind the identification of M̃/2M̃; returns problems."""
    problems = []
    S3 = L3_MATRICES[2]
    mod2 = lambda v: tuple(a & 1 for a in v)
    if mod2(ea.matvec(S3, W_LINE)) != W_LINE:
        problems.append("σ does not fix the GF(2)-line of L3/2")
    w0, w1 = W_F4
    if mod2(ea.matvec(S3, w0)) != w1:
        problems.append("σ·w0 is not w1")
    if mod2(ea.matvec(S3, w1)) != mod2(ea.add([list(w0)], [list(w1)])[0]):
        problems.append("σ does not act as θ (θ² = θ + 1) on the GF(4)-part")
    for X in L3_MATRICES[:2] + L2_MATRICES[:2]:
        if ea.gf2(X) != ea.identity(len(X)):
            problems.append("Klein group acts nontrivially mod 2")
    if ea.gf2(L2_MATRICES[2]) != ea.rho_block(ea.THETA):
        problems.append("σ on L2/2 is not multiplication by θ")
    if ea.gf2_rank([list(W_LINE), list(w0), list(w1)]) != 3:
        problems.append("W-splitting is not a basis of L3/2")
    return problems


def tilde_lattice(dim):
    parts = [model("L1")] * dim.d1 + [model("L3")] * dim.d3 + [model("L2")] * dim.d2
    if not parts:
        raise ValueError("dimension vector has no lattice part")
    return gl.direct_sum(*parts).with_name("M̃%s" % dim)


# ---------------------------------------------------------------------------
# representations

def _f2(rows, cols):
    return [[0] * cols for _ in range(rows)]


def _f4(rows, cols):
    return [[ZERO] * cols for _ in range(rows)]


@dataclass
class GammaRep:
    """Matrices of a representation; γ2 is stored as a GF(2) matrix.

    Entry pair ``(gamma2[j][2p], gamma2[j][2p+1])`` gives the image of the
    p-th GF(4)-basis vector of V(2') in the GF(4)-part of the j-th copy of
    L3/2, written in the basis W_F4.
    """

    dim: DimVector
    alpha: list = field(default=None)
    gamma1: list = field(default=None)
    gamma2: list = field(default=None)
    beta: list = field(default=None)

    def __post_init__(self):
        d = self.dim
        if self.alpha is None:
            self.alpha = _f2(d.d1, d.d1p)
        if self.gamma1 is None:
            self.gamma1 = _f2(d.d3, d.d1p)
        if self.gamma2 is None:
            self.gamma2 = _f2(d.d3, 2 * d.d2p)
        if self.beta is None:
            self.beta = _f4(d.d2, d.d2p)
        self.check()

    def check(self):
        d = self.dim
        shapes = (("alpha", self.alpha, d.d1, d.d1p), ("gamma1", self.gamma1, d.d3, d.d1p),
                  ("gamma2", self.gamma2, d.d3, 2 * d.d2p), ("beta", self.beta, d.d2, d.d2p))
        for name, M, r, c in shapes:
            if len(M) != r or any(len(row) != c for row in M):
                raise ValueError("%s must be %d×%d" % (name, r, c))
        for M in (self.alpha, self.gamma1, self.gamma2):
            if any(a not in (0, 1) for row in M for a in row):
                raise ValueError("GF(2) matrix with entries outside {0, 1}")
        if any(not isinstance(z, GF4) for row in self.beta for z in row):
            raise ValueError("beta needs GF4 entries")

    def gamma2_f4(self):
        """γ2 as a d3 × d2p matrix over GF(4)."""
        return [[GF4(row[2 * p], row[2 * p + 1]) for p in range(self.dim.d2p)]
                for row in self.gamma2]

    def to_json(self):
        return {
            "dim": list(self.dim.as_tuple()),
            "alpha": self.alpha,
            "gamma1": self.gamma1,
            "gamma2": self.gamma2,
            "beta": [[[z.u, z.v] for z in row] for row in self.beta],
        }

    @classmethod
    def from_json(cls, obj):
        return cls(DimVector(*obj["dim"]), [list(r) for r in obj["alpha"]],
                   [list(r) for r in obj["gamma1"]], [list(r) for r in obj["gamma2"]],
                   [[GF4(*z) for z in row] for row in obj["beta"]])


def _blocks(A, B, C, rows_a, cols_a, rows_b, cols_b, zero):
    """[[A, C], [0, B]] with given block shapes."""
    out = [list(A[i]) + list(C[i]) for i in range(rows_a)]
    out += [[zero] * cols_a + list(B[i]) for i in range(rows_b)]
    return out


def extension(sub, quot, connect=None):
    """Representation with ``sub`` as subrepresentation and quotient ``quot``.

    ``connect`` holds the off-diagonal blocks (alpha, gamma1, gamma2, beta);
    zero blocks give the direct sum.
    """
    a, b = sub.dim, quot.dim
    if connect is None:
        connect = (_f2(a.d1, b.d1p), _f2(a.d3, b.d1p), _f2(a.d3, 2 * b.d2p), _f4(a.d2, b.d2p))
    ca, cg1, cg2, cb = connect
    return GammaRep(
        a + b,
        _blocks(sub.alpha, quot.alpha, ca, a.d1, a.d1p, b.d1, b.d1p, 0),
        _blocks(sub.gamma1, quot.gamma1, cg1, a.d3, a.d1p, b.d3, b.d1p, 0),
        _blocks(sub.gamma2, quot.gamma2, cg2, a.d3, 2 * a.d2p, b.d3, 2 * b.d2p, 0),
        _blocks(sub.beta, quot.beta, cb, a.d2, a.d2p, b.d2, b.d2p, ZERO),
    )


def direct_sum(*reps):
    out = reps[0]
    for r in reps[1:]:
        out = extension(out, r)
    return out


def random_rep(dim, rng):
    bits = lambda r, c: [[rng.randrange(2) for _ in range(c)] for _ in range(r)]
    return GammaRep(dim, bits(dim.d1, dim.d1p), bits(dim.d3, dim.d1p),
                    bits(dim.d3, 2 * dim.d2p),
                    [[GF4(rng.randrange(2), rng.randrange(2)) for _ in range(dim.d2p)]
                     for _ in range(dim.d2)])


# ---------------------------------------------------------------------------
# φ(V) and the pullback

def phi_matrix(V):
    """φ(V) : V(1') ⊕ V(2') → M̃/2M̃ as a GF(2) matrix.

    Rows follow M̃ = L1^d1 ⊕ L3^d3 ⊕ L2^d2; columns are the basis of V(1')
    followed by pairs (e_p, θe_p) for V(2').
    """
    d = V.dim
    S3 = L3_MATRICES[2]
    rows = d.rank
    cols = d.d1p + 2 * d.d2p
    P = _f2(rows, cols)
    off3 = d.d1
    off2 = d.d1 + 3 * d.d3
    for c in range(d.d1p):
        for i in range(d.d1):
            P[i][c] = V.alpha[i][c]
        for j in range(d.d3):
            if V.gamma1[j][c]:
                for t in range(3):
                    P[off3 + 3 * j + t][c] ^= W_LINE[t]
    beta = ea.rho_expand(V.beta)
    for p in range(d.d2p):
        c0 = d.d1p + 2 * p
        for j in range(d.d3):
            u, v = V.gamma2[j][2 * p], V.gamma2[j][2 * p + 1]
            img = [(u * W_F4[0][t] + v * W_F4[1][t]) & 1 for t in range(3)]
            img_theta = [a & 1 for a in ea.matvec(S3, img)]
            for t in range(3):
                P[off3 + 3 * j + t][c0] = img[t]
                P[off3 + 3 * j + t][c0 + 1] = img_theta[t]
        for i in range(2 * d.d2):
            P[off2 + i][c0] = beta[i][2 * p]
            P[off2 + i][c0 + 1] = beta[i][2 * p + 1]
    return P


def phi_is_injective(V):
    d = V.dim
    P = phi_matrix(V)
    return ea.gf2_rank(ea.transpose(P, d.rank)) == d.d1p + 2 * d.d2p if P else d.d1p + d.d2p == 0


def sinks_spanned(V):
    """True iff the arrows into each of 1, 3, 2 jointly span that vertex.

    Otherwise V has a simple summand at a sink, whose lattice L_i is not an
    A⁺-lattice, and the closure of the pullback is smaller than M̃.
    """
    d = V.dim
    if d.d1 and ea.gf2_rank(V.alpha) < d.d1:
        return False
    if d.d3 and ea.gf2_rank([a + b for a, b in zip(V.gamma1, V.gamma2)]) < d.d3:
        return False
    if d.d2 and ea.gf2_rank(ea.rho_expand(V.beta)) < 2 * d.d2:
        return False
    return True


def valid_rep(V):
    """Representations that come from A⁺-lattices."""
    return phi_is_injective(V) and sinks_spanned(V)


def pullback(V):
    """The lattice of V together with its basis inside M̃ (rows)."""
    Mt = tilde_lattice(V.dim)
    n = Mt.rank
    gens = [[2 * int(i == j) for j in range(n)] for i in range(n)]
    gens += ea.transpose(phi_matrix(V), n)
    basis = ea.hnf_basis(gens)
    try:
        M, basis = gl.sublattice(Mt, basis, name="V%s" % V.dim)
    except gl.LatticeError as exc:
        raise gl.LatticeError("pullback is not G-stable: %s" % exc) from None
    problems = gl.validate(M)
    if problems:
        raise gl.LatticeError("pullback failed validation: %s" % problems)
    return M, basis


def pullback_lattice(V):
    return pullback(V)[0]


# ---------------------------------------------------------------------------
# recovering the dimension vector of an A⁺-lattice

def _k_idempotents_times4(L):
    """4·e for the four central idempotents e of QK, as matrices on L."""
    el = L.elements
    k = {v: el[(v, 0)] for v in ((0, 0), (1, 0), (0, 1), (1, 1))}
    out = []
    for chi in ((0, 0), (1, 0), (0, 1), (1, 1)):
        # character of K trivial on chi-orthogonal part: sign (-1)^{<chi, v>}
        M = ea.zeros(L.rank, L.rank)
        for v, X in k.items():
            sign = -1 if (chi[0] * v[0] + chi[1] * v[1]) % 2 else 1
            M = ea.add(M, ea.scale(sign, X))
        out.append(M)
    return out


def closure_times4(L):
    """Basis (rows, HNF) of 4·M̃ inside L, M̃ the Ã-closure of L.

    2-locally Ã = Σ_e e·Z2G over the central idempotents e of QK, and the
    three nontrivial ones are permuted by σ, so M̃ = Σ_e e·L is G-stable.
    """
    n = L.rank
    gens = [[4 * int(i == j) for j in range(n)] for i in range(n)]
    for E in _k_idempotents_times4(L):
        gens += ea.transpose(E)
    return ea.hnf_basis(gens)


def recover_dimvector(M):
    """Dimension vector of the representation of an A⁺-lattice M."""
    n = M.rank
    r1, r2, r3 = gl.rational_type(M)
    Lam = closure_times4(M)
    if any(a % 2 for row in Lam for a in row):
        raise gl.LatticeError("not an A+-lattice: M does not contain 2·M̃")
    # coordinates of M = Z^n inside M̃ (basis Lam/4)
    coords = ea.solve_integral(Lam, [[4 * int(i == j) for j in range(n)] for i in range(n)])
    # σ on M̃ in the same (row) coordinates
    S = M.S
    Srows = ea.solve_integral(Lam, [ea.matvec(S, lam) for lam in Lam])
    for E in _k_idempotents_times4(M):
        img = ea.solve_integral(Lam, [ea.matvec(E, lam) for lam in Lam])
        if any(a % 4 for row in img for a in row):
            raise gl.LatticeError("Ã-closure is not stable under the Klein idempotents")
    image = ea.gf2(coords)
    dim_image = ea.gf2_rank(image)
    S2 = ea.matmul(Srows, Srows)
    P = ea.add(ea.add(ea.identity(n), Srows), S2)
    d1p = ea.gf2_rank(ea.gf2_matmul(image, P))
    if (dim_image - d1p) % 2:
        raise gl.LatticeError("odd GF(4)-part while recovering the dimension vector")
    return DimVector(d1p, (dim_image - d1p) // 2, r1, r3, r2)


# ---------------------------------------------------------------------------
# morphisms of representations

def _unknown_shapes(V, W):
    """(rows, cols, over GF(4)?) of the vertex maps V → W at 1', 2', 1, 3, 2."""
    a, b = V.dim, W.dim
    return ((b.d1p, a.d1p, False), (b.d2p, a.d2p, True), (b.d1, a.d1, False),
            (b.d3, a.d3, False), (b.d2, a.d2, True))


def _unpack(x, shapes):
    """Split a GF(2) vector into vertex matrices (GF(4) entries take two bits)."""
    out = []
    pos = 0
    for r, c, f4 in shapes:
        if f4:
            M = [[GF4(x[pos + 2 * (i * c + j)], x[pos + 2 * (i * c + j) + 1]) for j in range(c)]
                 for i in range(r)]
            pos += 2 * r * c
        else:
            M = [[x[pos + i * c + j] for j in range(c)] for i in range(r)]
            pos += r * c
        out.append(M)
    return out


def _as_f4(M):
    return [[GF4(a, 0) for a in row] for row in M]


def _flat(M):
    out = []
    for row in M:
        for z in row:
            if isinstance(z, GF4):
                out += [z.u, z.v]
            else:
                out.append(z & 1)
    return out


def _mm2(A, B, rows, cols):
    """GF(2) product with an explicit result shape (inner dimension may be 0)."""
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        for t, a in enumerate(A[i]):
            if a:
                brow = B[t]
                for j in range(cols):
                    out[i][j] ^= brow[j]
    return out


def _mm4(A, B, rows, cols):
    out = [[ZERO] * cols for _ in range(rows)]
    for i in range(rows):
        for t, a in enumerate(A[i]):
            if a:
                brow = B[t]
                for j in range(cols):
                    if brow[j]:
                        out[i][j] = out[i][j] + a * brow[j]
    return out


def _residual(V, W, maps):
    """Commutation defects of a tuple of vertex maps, flattened over GF(2)."""
    F1p, F2p, F1, F3, F2 = maps
    a, b = V.dim, W.dim
    res = []
    for X, Y in ((_mm2(W.alpha, F1p, b.d1, a.d1p), _mm2(F1, V.alpha, b.d1, a.d1p)),
                 (_mm2(W.gamma1, F1p, b.d3, a.d1p), _mm2(F3, V.gamma1, b.d3, a.d1p)),
                 (_mm4(W.gamma2_f4(), F2p, b.d3, a.d2p),
                  _mm4(_as_f4(F3), V.gamma2_f4(), b.d3, a.d2p)),
                 (_mm4(W.beta, F2p, b.d2, a.d2p), _mm4(F2, V.beta, b.d2, a.d2p))):
        res += _flat([[p + q if isinstance(p, GF4) else p ^ q for p, q in zip(r1, r2)]
                      for r1, r2 in zip(X, Y)])
    return res


def rep_hom(V, W):
    """GF(2)-basis of Hom(V, W), each element a tuple of vertex matrices."""
    shapes = _unknown_shapes(V, W)
    nvars = sum(r * c * (2 if f4 else 1) for r, c, f4 in shapes)
    if nvars == 0:
        return []
    cols = []
    for k in range(nvars):
        x = [0] * nvars
        x[k] = 1
        cols.append(_residual(V, W, _unpack(x, shapes)))
    system = ea.transpose(cols, nvars) if cols and cols[0] else []
    if not system:
        basis = ea.identity(nvars)
    else:
        basis = ea.gf2_nullspace(system, nvars)
    return [tuple(_unpack(x, shapes)) for x in basis]


def rep_endomorphisms(V):
    return rep_hom(V, V)


def total_matrix(maps, source_dim=None):
    """A morphism as one GF(2) matrix on V(1') ⊕ V(2') ⊕ V(1) ⊕ V(3) ⊕ V(2)."""
    F1p, F2p, F1, F3, F2 = maps
    blocks = [F1p, ea.rho_expand(F2p), F1, F3, ea.rho_expand(F2)]
    if source_dim is None:
        widths = None
    else:
        d = source_dim
        widths = [d.d1p, 2 * d.d2p, d.d1, d.d3, 2 * d.d2]
    return ea.gf2(ea.block_diag(*blocks, widths=widths))


def _bitrows(M):
    return [sum(1 << j for j, a in enumerate(row) if a) for row in M]


def _bit_mul(X, Y):
    out = []
    for r in X:
        acc = 0
        j = 0
        while r:
            if r & 1:
                acc ^= Y[j]
            r >>= 1
            j += 1
        out.append(acc)
    return out


BRUTE_FORCE_BOUND = 14


def is_indecomposable_rep(V, bound=BRUTE_FORCE_BOUND):
    """True iff End(V) is local, i.e. has no idempotents besides 0 and 1.

    Up to ``bound`` endomorphism dimensions every element is checked.  Above
    it, the algebra is tested for the shape GF(2)·1 ⊕ N with N a nilpotent
    ideal; a ValueError is raised when neither test is conclusive.
    """
    if V.dim.total == 0:
        return False
    ends = [_bitrows(total_matrix(e, V.dim)) for e in rep_endomorphisms(V)]
    d = len(ends)
    n = V.dim.total
    one = [1 << i for i in range(n)]
    if d <= bound:
        x = [0] * n
        for k in range(1, 1 << d):
            # Gray code: flip one basis element per step
            g = k ^ (k >> 1)
            flip = (g ^ ((k - 1) ^ ((k - 1) >> 1))).bit_length() - 1
            x = [a ^ b for a, b in zip(x, ends[flip])]
            if x != one and any(x) and _bit_mul(x, x) == x:
                return False
        return True
    return _local_by_radical(ends, n)


def _is_nilpotent(x, n):
    p = x
    for _ in range(n):
        if not any(p):
            return True
        p = _bit_mul(p, x)
    return not any(p)


def _local_by_radical(ends, n):
    one = [1 << i for i in range(n)]
    nil = []
    for e in ends:
        if _is_nilpotent(e, n):
            nil.append(e)
            continue
        f = [a ^ b for a, b in zip(e, one)]
        if _is_nilpotent(f, n):
            nil.append(f)
            continue
        raise ValueError("endomorphism algebra too large for the brute-force bound "
                         "and not of the form GF(2)·1 ⊕ radical")
    # span of nil must be closed under products and nilpotent as an algebra
    span = _gf2_span(nil, n)
    power = span
    for _ in range(n + 1):
        if not power:
            return True
        prods = [_bit_mul(x, y) for x in power for y in span]
        for p in prods:
            if not _in_span(span, p, n):
                raise ValueError("candidate radical is not closed under products")
        power = _gf2_span(prods, n)
    return not power


def _vec(x, n):
    return [(r >> j) & 1 for r in x for j in range(n)]


def _gf2_span(mats, n):
    if not mats:
        return []
    R, _ = ea.gf2_rref([_vec(x, n) for x in mats], n * n)
    out = []
    for v in R:
        out.append([sum(v[i * n + j] << j for j in range(n)) for i in range(n)])
    return out


def _in_span(span, x, n):
    if not span:
        return not any(x)
    R, piv = ea.gf2_rref([_vec(s, n) for s in span], n * n)
    return ea.gf2_in_span(R, piv, _vec(x, n))


def is_isomorphic_rep(V, W):
    """Isomorphism test by scanning Hom(V, W) for an invertible map."""
    if V.dim != W.dim:
        return False
    homs = [_bitrows(total_matrix(h, V.dim)) for h in rep_hom(V, W)]
    n = V.dim.total
    if len(homs) > BRUTE_FORCE_BOUND:
        raise ValueError("Hom space too large for the isomorphism scan")
    x = [0] * n
    for k in range(1, 1 << len(homs)):
        g = k ^ (k >> 1)
        flip = (g ^ ((k - 1) ^ ((k - 1) >> 1))).bit_length() - 1
        x = [a ^ b for a, b in zip(x, homs[flip])]
        if ea.gf2_rank([[(r >> j) & 1 for j in range(n)] for r in x]) == n:
            return True
    return False


# ---------------------------------------------------------------------------
# search

def search_indecomposable(target, seed=0, budget=20000, accept=None):
    """An indecomposable representation of dimension ``target``.

    Random matrices drawn from a generator seeded by ``seed``; the first
    candidate with injective φ, local endomorphism ring and (optionally)
    ``accept(V)`` true is returned.
    """
    rng = random.Random(seed)
    for _ in range(budget):
        V = random_rep(target, rng)
        if not phi_is_injective(V):
            continue
        if not is_indecomposable_rep(V):
            continue
        if accept is not None and not accept(V):
            continue
        return V
    raise LookupError("no indecomposable of dimension %s within %d tries" % (target, budget))


def search_extension(sub, quot, seed=0, budget=20000, accept=None):
    """An indecomposable extension of ``quot`` by ``sub`` (random gluing blocks)."""
    rng = random.Random(seed)
    a, b = sub.dim, quot.dim
    bits = lambda r, c: [[rng.randrange(2) for _ in range(c)] for _ in range(r)]
    for _ in range(budget):
        connect = (bits(a.d1, b.d1p), bits(a.d3, b.d1p), bits(a.d3, 2 * b.d2p),
                   [[GF4(rng.randrange(2), rng.randrange(2)) for _ in range(b.d2p)]
                    for _ in range(a.d2)])
        V = extension(sub, quot, connect)
        if not is_indecomposable_rep(V):
            continue
        if accept is not None and not accept(V):
            continue
        return V
    raise LookupError("no indecomposable extension of %s by %s" % (quot.dim, sub.dim))


# ---------------------------------------------------------------------------
# dimension vectors on the principal component

PRINCIPAL_CLASSES = ("L1", "P1", "L3", "P2", "L2")
PERIODS = {"L1": (6, 1), "L2": (6, 2), "L3": (2, 1), "P1": (3, 1), "P2": (3, 2)}

# printed diagram, columns k = 2, 1, 0, -1, -2 (k = number of τ-steps)
_DIAGRAM = {
    "L1": ("11011", "01010", "10100", "10010", "01011"),
    "P1": ("12021", "11110", "10110", "11021", None),
    "L3": ("33141", "22121", "11010", "11121", "22141"),
    "P2": ("43241", "22021", "01021", "22241", None),
    "L2": ("22221", "21020", "01001", "01020", "21221"),
}


def diagram_entry(cls, k):
    """Printed dimension vector of τ^k of the class (None outside the diagram)."""
    if not -2 <= k <= 2:
        return None
    code = _DIAGRAM[cls][2 - k]
    return DimVector.parse(code) if code else None


def _mesh_middle(cls, col):
    """Sum of the middle terms of the mesh ending at ``cls`` (valued arrows)."""
    if cls == "L1":
        return col["P1"]
    if cls == "L2":
        return col["P2"]
    if cls == "L3":
        return col["P1"] + col["P2"]
    if cls == "P1":
        return col["L1"] + col["L3"]
    return col["L3"] * 2 + col["L2"]


def _principal_columns(lo, hi):
    """Columns {k: {class: DimVector}} for lo ≤ k ≤ hi via the mesh relations.

    Away from the gluing column the meshes are the usual ones: for an L-class,
    dim τ^{k+1} + dim τ^k = dim of the P-terms of column k+1; for a P-class,
    dim τ^{k+1} + dim τ^k = dim of the L-terms of column k.  Starting data is
    the printed diagram at k = 1, 2 and k = -1 (with P^{-2} from the mesh).
    """
    L_ = ("L1", "L3", "L2")
    P_ = ("P1", "P2")
    cols = {k: {c: diagram_entry(c, k) for c in PRINCIPAL_CLASSES} for k in (2, 1, 0, -1)}
    cols[-2] = {c: diagram_entry(c, -2) for c in L_}
    k = 2
    while k < hi:
        nxt = {}
        for c in P_:
            nxt[c] = _mesh_middle(c, cols[k]) - cols[k][c]
        for c in L_:
            nxt[c] = _mesh_middle(c, nxt) - cols[k][c]
        cols[k + 1] = nxt
        k += 1
    # complete column -2 and go left
    for c in P_:
        cols[-2][c] = _mesh_middle(c, cols[-2]) - cols[-1][c]
    k = -2
    while k > lo:
        prev = {}
        for c in L_:
            prev[c] = _mesh_middle(c, cols[k]) - cols[k][c]
        for c in P_:
            prev[c] = _mesh_middle(c, prev) - cols[k][c]
        cols[k - 1] = prev
        k -= 1
    return cols


def tau_dim_shift(cls, k):
    """Dimension vector of τ^k M for M in the central column of the diagram."""
    if cls not in PRINCIPAL_CLASSES:
        raise ValueError("unknown principal class %r" % cls)
    cols = _principal_columns(min(k, -2), max(k, 2))
    return cols[k][cls]
