"""
Exact linear algebra over Z, GF(2) and GF(4).

Integer matrices are plain lists of rows of Python ints, so entries never
overflow.  Vectors are lists.  GF(2) matrices use 0/1 ints; GF(4) matrices
hold GF4 elements.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

try:
    import flint
except ImportError:  # pragma: no cover - pure Python fallback
    flint = None

# "flint" runs Hermite and Smith forms in C through python-flint; "python"
# uses the reference implementations below.  Both give identical output.
BACKEND = "flint" if flint is not None else "python"


def set_backend(name):
    global BACKEND
    if name not in ("flint", "python"):
        raise ValueError("unknown backend %r" % name)
    if name == "flint" and flint is None:
        raise ValueError("python-flint is not installed")
    BACKEND = name


def _flint_hnf(M):
    return [[int(x) for x in row] for row in flint.fmpz_mat(M).hnf().tolist()]


class InfiniteQuotientError(ValueError):
    """Raised when a quotient of lattices is not finite."""


# ---------------------------------------------------------------------------
# basic integer matrix helpers

def zeros(m, n):
    return [[0] * n for _ in range(m)]


def identity(n):
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = 1
    return out


def copy(M):
    return [list(row) for row in M]


def transpose(M, ncols=None):
    if not M:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*M)]


def matmul(A, B):
    if not A:
        return []
    if not B:
        return [[] for _ in A]
    out = []
    for row in A:
        acc = [0] * len(B[0])
        for a, brow in zip(row, B):
            if a:
                acc = [x + a * y for x, y in zip(acc, brow)]
        out.append(acc)
    return out


def matvec(A, v):
    return [sum(a * b for a, b in zip(row, v) if a) for row in A]


def vecmat(v, A):
    n = len(A[0]) if A else 0
    out = [0] * n
    for c, row in zip(v, A):
        if c:
            for j, a in enumerate(row):
                if a:
                    out[j] += c * a
    return out


def add(A, B):
    return [[a + b for a, b in zip(r, s)] for r, s in zip(A, B)]


def sub(A, B):
    return [[a - b for a, b in zip(r, s)] for r, s in zip(A, B)]


def scale(c, A):
    return [[c * a for a in row] for row in A]


def block_diag(*mats, widths=None):
    """Block diagonal matrix; ``widths`` gives column counts of empty blocks."""
    if widths is None:
        widths = [len(M[0]) if M else 0 for M in mats]
    m = sum(len(M) for M in mats)
    n = sum(widths)
    out = zeros(m, n)
    r = c = 0
    for M, w in zip(mats, widths):
        for i, row in enumerate(M):
            if len(row) != w:
                raise ValueError("block row of length %d, expected %d" % (len(row), w))
            out[r + i][c:c + w] = row
        r += len(M)
        c += w
    return out


def is_zero(M):
    return all(not a for row in M for a in row)


def xgcd(a, b):
    # x*a + y*b == g, g >= 0
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


# ---------------------------------------------------------------------------
# Hermite normal form

def _hnf_rows(rows, width, track=None):
    """In-place row HNF of ``rows`` on the first ``width`` columns.

    ``track``, if given, is a list of rows receiving the same row operations.
    Returns the number of nonzero rows (which come first).
    """
    m = len(rows)
    r = 0
    for j in range(width):
        if r == m:
            break
        while True:
            best = None
            best_abs = 0
            for i in range(r, m):
                a = rows[i][j]
                if a and (best is None or abs(a) < best_abs):
                    best, best_abs = i, abs(a)
                    if best_abs == 1:
                        break
            if best is None:
                break
            if best != r:
                rows[r], rows[best] = rows[best], rows[r]
                if track is not None:
                    track[r], track[best] = track[best], track[r]
            prow = rows[r]
            p = prow[j]
            ptail = prow[j:]
            done = True
            for i in range(r + 1, m):
                row = rows[i]
                a = row[j]
                if a:
                    q = a // p
                    row[j:] = [x - q * y for x, y in zip(row[j:], ptail)]
                    if track is not None:
                        track[i] = [x - q * y for x, y in zip(track[i], track[r])]
                    if row[j]:
                        done = False
            if done:
                break
        if r < m and rows[r][j]:
            if rows[r][j] < 0:
                rows[r] = [-a for a in rows[r]]
                if track is not None:
                    track[r] = [-a for a in track[r]]
            prow = rows[r]
            p = prow[j]
            ptail = prow[j:]
            for i in range(r):
                row = rows[i]
                q = row[j] // p
                if q:
                    row[j:] = [x - q * y for x, y in zip(row[j:], ptail)]
                    if track is not None:
                        track[i] = [x - q * y for x, y in zip(track[i], track[r])]
            r += 1
    return r


def hnf(M):
    """Row Hermite normal form.

    Returns ``(H, U)`` with ``H == U*M``, ``U`` unimodular, ``H`` in row
    echelon form with positive pivots and entries above each pivot reduced
    into ``[0, pivot)``.  Zero rows are kept at the bottom.
    """
    m = len(M)
    n = len(M[0]) if M else 0
    if BACKEND == "flint" and m and n:
        aug = _flint_hnf([list(row) + [int(i == j) for j in range(m)]
                          for i, row in enumerate(M)])
        return [row[:n] for row in aug], [row[n:] for row in aug]
    H = copy(M)
    U = identity(m)
    _hnf_rows(H, n, U)
    return H, U


def hnf_basis(M, ncols=None):
    """Nonzero rows of the HNF of ``M``: a canonical basis of its row lattice."""
    if not M:
        return []
    if BACKEND == "flint" and M[0]:
        return [row for row in _flint_hnf(M) if any(row)]
    H = copy(M)
    r = _hnf_rows(H, len(H[0]))
    return H[:r]


def row_rank(M):
    return len(hnf_basis(M))


# ---------------------------------------------------------------------------
# kernels and saturation

def kernel_basis(M, ncols=None):
    """Saturated integer basis (as rows) of ``{x : M x = 0}``."""
    n = len(M[0]) if M else (ncols or 0)
    if not M:
        return identity(n)
    m = len(M)
    if BACKEND == "flint":
        aug = _flint_hnf([[M[i][j] for i in range(m)] + [int(j == k) for k in range(n)]
                          for j in range(n)])
        return [row[m:] for row in aug if not any(row[:m]) and any(row[m:])]
    Mt = [[M[i][j] for i in range(m)] for j in range(n)]
    T = identity(n)
    r = _hnf_rows(Mt, m, T)
    return hnf_basis(T[r:]) if r < n else []


def saturate(rows, n):
    """Basis of ``(Q-span of rows) ∩ Z^n``."""
    B = hnf_basis(rows)
    if not B:
        return []
    return kernel_basis(kernel_basis(B, n), n)


# ---------------------------------------------------------------------------
# Smith normal form

def snf(M, pivot="minabs"):
    """Smith normal form.

    Returns ``(D, invariants, U, V)`` with ``U*M*V == D`` diagonal, the
    diagonal a divisibility chain of nonnegative ints and ``U``, ``V``
    unimodular.  ``invariants`` lists the nonzero diagonal entries.

    ``pivot`` selects the elimination order: ``"minabs"`` takes the entry of
    least absolute value, ``"first"`` the first nonzero entry in row-major
    order.  Both yield the same invariants.
    """
    m = len(M)
    n = len(M[0]) if M else 0
    D = copy(M)
    U = identity(m)
    V = identity(n)

    def row_op(i, k, q):  # row_i -= q*row_k
        D[i] = [a - q * b for a, b in zip(D[i], D[k])]
        U[i] = [a - q * b for a, b in zip(U[i], U[k])]

    def col_op(j, k, q):  # col_j -= q*col_k
        for row in D:
            row[j] -= q * row[k]
        for row in V:
            row[j] -= q * row[k]

    def swap_rows(i, k):
        D[i], D[k] = D[k], D[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for row in D:
            row[j], row[k] = row[k], row[j]
        for row in V:
            row[j], row[k] = row[k], row[j]

    for t in range(min(m, n)):
        forced = None
        while True:
            cand = forced
            forced = None
            for i in range(t, m) if cand is None else ():
                for j in range(t, n):
                    a = D[i][j]
                    if a:
                        if pivot == "first":
                            cand = (i, j)
                            break
                        if cand is None or abs(a) < abs(D[cand[0]][cand[1]]):
                            cand = (i, j)
                if cand is not None and pivot == "first":
                    break
            if cand is None:
                break
            i, j = cand
            swap_rows(t, i)
            swap_cols(t, j)
            p = D[t][t]
            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    row_op(i, t, D[i][t] // p)
                    if D[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if D[t][j]:
                    col_op(j, t, D[t][j] // p)
                    if D[t][j]:
                        clean = False
            if not clean:
                # a nonzero remainder is smaller than p; pivot on it next
                rest = [(i, t) for i in range(t + 1, m) if D[i][t]]
                rest += [(t, j) for j in range(t + 1, n) if D[t][j]]
                forced = rest[0]
                continue
            # divisibility: push any entry not divisible by p into row t
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if D[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            D[t] = [a + b for a, b in zip(D[t], D[bad])]
            U[t] = [a + b for a, b in zip(U[t], U[bad])]
        if t < m and t < n and D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
    invariants = [D[i][i] for i in range(min(m, n)) if D[i][i]]
    return D, invariants, U, V


def elementary_divisors(M):
    return snf(M)[1]


# ---------------------------------------------------------------------------
# solving

def solve_rational(B, Y):
    """Coefficients ``C`` (Fractions) with ``C*B == Y`` for row vectors.

    ``B`` must have linearly independent rows.  Raises ``ValueError`` if some
    row of ``Y`` is outside the rational row span.
    """
    k = len(B)
    if k == 0:
        if any(any(y) for y in Y):
            raise ValueError("vector outside span of empty basis")
        return [[] for _ in Y]
    n = len(B[0])
    # Solve B^T c = y by elimination on [B^T | Y^T].
    A = [[Fraction(B[i][j]) for i in range(k)] + [Fraction(y[j]) for y in Y]
         for j in range(n)]
    width = k + len(Y)
    piv_cols = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, n) if A[i][c]), None)
        if p is None:
            raise ValueError("basis rows are linearly dependent")
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [a * inv for a in A[r]]
        for i in range(n):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, n):
        if any(A[i][k:width]):
            raise ValueError("vector outside rational span")
    return [[A[i][k + t] for i in range(k)] for t in range(len(Y))]


def _echelon_coords(H, pivots, x):
    """Coordinates of ``x`` in the echelon basis ``H``, or None."""
    x = list(x)
    c = []
    for row, p in zip(H, pivots):
        a = x[p]
        if a % row[p]:
            return None
        q = a // row[p]
        c.append(q)
        if q:
            for j in range(p, len(x)):
                if row[j]:
                    x[j] -= q * row[j]
    if any(x):
        return None
    return c


def solve_integral(B, Y):
    """Integer coefficients ``C`` with ``C*B == Y``; ValueError if none.

    ``B`` must have linearly independent rows.
    """
    k = len(B)
    if k == 0:
        if any(any(y) for y in Y):
            raise ValueError("vector not in the integer span")
        return [[] for _ in Y]
    H, U = hnf(B)
    if any(not any(row) for row in H):
        raise ValueError("basis rows are linearly dependent")
    pivots = [next(j for j, a in enumerate(row) if a) for row in H]
    out = []
    for y in Y:
        c = _echelon_coords(H, pivots, y)
        if c is None:
            raise ValueError("vector not in the integer span")
        out.append(vecmat(c, U))
    return out


def lattice_index(rows, n):
    """Index of the row lattice in ``Z^n`` (0 when not of full rank)."""
    H = hnf_basis(rows)
    if len(H) < n:
        return 0
    out = 1
    for i, row in enumerate(H):
        out *= row[i]
    return out


def inverse_unimodular(M):
    n = len(M)
    C = solve_integral(M, identity(n))
    return C


def determinant(M):
    n = len(M)
    A = [[Fraction(a) for a in row] for row in M]
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c]), None)
        if p is None:
            return 0
        if p != c:
            A[c], A[p] = A[p], A[c]
            det = -det
        det *= A[c][c]
        inv = 1 / A[c][c]
        for i in range(c + 1, n):
            if A[i][c]:
                f = A[i][c] * inv
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return int(det)


def quotient_invariants(ambient_basis, sub_generators):
    """Elementary divisors (>1) of ``span(ambient)/span(sub)``.

    Both arguments are row matrices in the same coordinates; the subgroup
    must have finite index in the ambient lattice.
    """
    k = len(ambient_basis)
    if k == 0:
        if any(any(v) for v in sub_generators):
            raise ValueError("generators outside the ambient lattice")
        return []
    gens = [g for g in sub_generators if any(g)]
    if not gens:
        raise InfiniteQuotientError("quotient of rank %d is infinite" % k)
    C = solve_integral(ambient_basis, gens)
    if BACKEND == "flint":
        D = flint.fmpz_mat(C).snf()
        invs = [int(D[i, i]) for i in range(min(D.nrows(), D.ncols())) if D[i, i]]
    else:
        invs = snf(C)[1]
    if len(invs) < k:
        raise InfiniteQuotientError("subgroup has rank %d < %d" % (len(invs), k))
    return [d for d in invs if d != 1]


def complete_basis(S, n):
    """Unimodular ``n``×``n`` matrix whose first rows span the saturated ``S``.

    Returns ``(W, Winv)`` where the rows of ``W`` form a basis of ``Z^n``
    beginning with a basis of ``span(S)``, and ``Winv`` is its inverse, so a
    vector ``x`` has coordinates ``x*Winv`` in that basis.
    """
    if not S:
        return identity(n), identity(n)
    D, invs, U, V = snf(S)
    if any(d != 1 for d in invs):
        raise ValueError("sublattice is not saturated")
    Winv = V
    W = inverse_unimodular(V)
    return W, Winv


# ---------------------------------------------------------------------------
# GF(2)

def gf2(M):
    return [[a & 1 for a in row] for row in M]


def gf2_rref(M, ncols=None):
    """Reduced row echelon form over GF(2); returns ``(R, pivots)``."""
    R = [[a & 1 for a in row] for row in M]
    n = len(R[0]) if R else (ncols or 0)
    pivots = []
    r = 0
    for j in range(n):
        p = next((i for i in range(r, len(R)) if R[i][j]), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        for i in range(len(R)):
            if i != r and R[i][j]:
                R[i] = [a ^ b for a, b in zip(R[i], R[r])]
        pivots.append(j)
        r += 1
    return R[:r], pivots


def gf2_rank(M):
    return len(gf2_rref(M)[0])


def gf2_nullspace(M, ncols=None):
    """Basis (rows) of ``{x : M x = 0}`` over GF(2)."""
    n = len(M[0]) if M else (ncols or 0)
    R, pivots = gf2_rref(M, n)
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        x = [0] * n
        x[f] = 1
        for row, p in zip(R, pivots):
            if row[f]:
                x[p] = 1
        basis.append(x)
    return basis


def gf2_matmul(A, B):
    return [[a & 1 for a in row] for row in matmul(A, B)]


def gf2_in_span(R, pivots, v):
    """Whether ``v`` lies in the row span of the reduced echelon ``R``."""
    v = [a & 1 for a in v]
    for row, p in zip(R, pivots):
        if v[p]:
            v = [a ^ b for a, b in zip(v, row)]
    return not any(v)


def modp_rref(M, p, ncols=None):
    """Reduced row echelon form over GF(p), p prime; returns ``(R, pivots)``."""
    R = [[a % p for a in row] for row in M]
    n = len(R[0]) if R else (ncols or 0)
    pivots = []
    r = 0
    for j in range(n):
        k = next((i for i in range(r, len(R)) if R[i][j]), None)
        if k is None:
            continue
        R[r], R[k] = R[k], R[r]
        inv = pow(R[r][j], -1, p)
        R[r] = [a * inv % p for a in R[r]]
        for i in range(len(R)):
            if i != r and R[i][j]:
                c = R[i][j]
                R[i] = [(a - c * b) % p for a, b in zip(R[i], R[r])]
        pivots.append(j)
        r += 1
    return R[:r], pivots


def modp_nullspace(M, p, ncols=None):
    """Basis (rows) of ``{x : M x = 0}`` over GF(p)."""
    n = len(M[0]) if M else (ncols or 0)
    R, pivots = modp_rref(M, p, n)
    basis = []
    for f in (j for j in range(n) if j not in pivots):
        x = [0] * n
        x[f] = 1
        for row, q in zip(R, pivots):
            x[q] = -row[f] % p
        basis.append(x)
    return basis


# ---------------------------------------------------------------------------
# GF(4) = GF(2)[θ]/(θ² + θ + 1), basis {1, θ}

@dataclass(frozen=True)
class GF4:
    u: int = 0
    v: int = 0

    def __post_init__(self):
        object.__setattr__(self, "u", self.u & 1)
        object.__setattr__(self, "v", self.v & 1)

    def __add__(self, other):
        return GF4(self.u ^ other.u, self.v ^ other.v)

    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        # (u + vθ)(x + yθ) = ux + (uy + vx)θ + vyθ², θ² = 1 + θ
        a, b, x, y = self.u, self.v, other.u, other.v
        vy = b & y
        return GF4((a & x) ^ vy, (a & y) ^ (b & x) ^ vy)

    def __bool__(self):
        return bool(self.u or self.v)

    def inverse(self):
        if not self:
            raise ZeroDivisionError("0 has no inverse in GF(4)")
        for z in GF4_ELEMENTS[1:]:
            if (self * z) == ONE:
                return z
        raise AssertionError("unreachable")

    def __repr__(self):
        return {(0, 0): "0", (1, 0): "1", (0, 1): "θ", (1, 1): "θ²"}[(self.u, self.v)]


ZERO = GF4(0, 0)
ONE = GF4(1, 0)
THETA = GF4(0, 1)
THETA2 = GF4(1, 1)
GF4_ELEMENTS = (ZERO, ONE, THETA, THETA2)


def gf4_matmul(A, B):
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        new = []
        for j in range(cols):
            acc = ZERO
            for t in range(inner):
                if row[t] and B[t][j]:
                    acc = acc + row[t] * B[t][j]
            new.append(acc)
        out.append(new)
    return out


def rho_block(z):
    """2×2 GF(2) matrix of multiplication by ``z`` in the basis {1, θ}."""
    return [[z.u, z.v], [z.v, z.u ^ z.v]]


def rho_expand(M):
    """Replace every GF(4) entry by its 2×2 GF(2) block."""
    rows = len(M)
    cols = len(M[0]) if M else 0
    out = zeros(2 * rows, 2 * cols)
    for i in range(rows):
        for j in range(cols):
            blk = rho_block(M[i][j])
            for a in range(2):
                for b in range(2):
                    out[2 * i + a][2 * j + b] = blk[a][b]
    return out


# ---------------------------------------------------------------------------
# text format: "rows cols" then rows of ints

def format_matrix(M, ncols=None):
    n = len(M[0]) if M else (ncols or 0)
    lines = ["%d %d" % (len(M), n)]
    lines += [" ".join(str(a) for a in row) for row in M]
    return "\n".join(lines) + "\n"


def parse_matrix(text):
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    m, n = map(int, lines[0].split())
    rows = [list(map(int, ln.split())) for ln in lines[1:1 + m]]
    if len(rows) != m or any(len(r) != n for r in rows):
        raise ValueError("matrix text does not match its %dx%d header" % (m, n))
    return rows
