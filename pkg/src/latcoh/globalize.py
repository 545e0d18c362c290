"""Global lattices from a 2-adic part and a 3-adic part.

A lattice over ZA4 is fixed by its 2-adic and 3-adic completions.  The only
3-adic indecomposable that is not irreducible is Λ = Z_3 H, the pullback of
Z_3 and Z_3[θ] over F_3.  Gluing one Λ into a lattice M is therefore an
index-3 condition: keep the x in M with f(x) = g(x) mod 3, where f reads a
trivial component and g a θ-component.  Index 3 leaves the 2-adic part alone.
"""

from dataclasses import dataclass

from . import catalog as cat
from . import exactalg as ea
from . import glattice as gl
from . import graphrep as gr


class GluingError(ValueError):
    pass


@dataclass(frozen=True)
class ThreeAdicSpec:
    k1: int = 0  # Z_3
    k2: int = 0  # Z_3[θ]
    k3: int = 0  # L_3
    k: int = 0   # Λ

    @classmethod
    def from_atoms(cls, names):
        count = {n: 0 for n in cat.THREE_ADIC}
        for n in names:
            count[str(n)] += 1
        return cls(count["Z3"], count["Z3th"], count["L3_3"], count["Lam"])

    def atoms(self):
        return (["Lam"] * self.k + ["Z3"] * self.k1 + ["Z3th"] * self.k2
                + ["L3_3"] * self.k3)

    def compatible(self, rt):
        r1, r2, r3 = rt
        return self.k1 + self.k == r1 and self.k2 + self.k == r2 and self.k3 == r3

    @classmethod
    def split(cls, rt, k=0):
        r1, r2, r3 = rt
        return cls(r1 - k, r2 - k, r3, k)


# ---------------------------------------------------------------------------
# 3-adic bookkeeping

def three_adic_counts(M):
    """(#Z_3, #Z_3[θ]) summands of M ⊗ Z_3, read off Ĥ⁰ and Ĥ⁻¹."""
    a = len(gl.primary_part(gl.tate_zero(M), 3))
    b = len(gl.primary_part(gl.tate_minus_one(M), 3))
    return a, b


def lambda_count(M):
    r1, _, _ = gl.rational_type(M)
    return r1 - three_adic_counts(M)[0]


def three_part(M, n):
    """3-part of Ĥⁿ; the Sylow 3-subgroup is self-normalising and cyclic, so
    this is Ĥⁿ(C_3, M), which has period 2."""
    if n % 2 == 0:
        return gl.primary_part(gl.tate_zero(M), 3)
    return gl.primary_part(gl.tate_minus_one(M), 3)


def tate_fast(M, n):
    """Ĥⁿ assembled from the 2-local chain and the 3-part."""
    return gl.canonical(gl.tate_two_part(M, n) + three_part(M, n))


# ---------------------------------------------------------------------------
# gluing

def _functionals(M):
    """Rows h over F_3 with h∘(g-1) = 0, i.e. G-maps M → F_3."""
    n = M.rank
    I = ea.identity(n)
    cols = []
    for X in (M.A, M.B, M.S):
        cols += ea.transpose(ea.sub(X, I))
    return ea.modp_nullspace(cols, 3, n)


def _theta_part(M):
    n = M.rank
    I = ea.identity(n)
    S = M.S
    T = ea.add(ea.add(I, S), ea.matmul(S, S))
    return ea.kernel_basis(ea.sub(M.A, I) + ea.sub(M.B, I) + T, n)


def _values(H, vecs):
    return [[sum(a * b for a, b in zip(h, v)) % 3 for v in vecs] for h in H]


def _pure(H, vanish, nonzero):
    """First combination of the rows of H vanishing on ``vanish`` but not on ``nonzero``."""
    if not H:
        return None
    V = _values(H, vanish)
    W = _values(H, nonzero)
    # combinations c with c·V = 0
    combos = ea.modp_nullspace(ea.transpose(V, len(vanish)), 3, len(H)) if vanish else \
        ea.identity(len(H))
    for c in combos:
        if any(sum(c[i] * W[i][j] for i in range(len(H))) % 3 for j in range(len(nonzero))):
            return [sum(c[i] * H[i][j] for i in range(len(H))) % 3 for j in range(len(H[0]))]
    return None


def glue_once(M):
    """Index-3 sublattice trading one Z_3 and one Z_3[θ] for a Λ."""
    n = M.rank
    H = _functionals(M)
    fixed = gl.fixed_sublattice(M)
    theta = _theta_part(M)
    f = _pure(H, theta, fixed)
    g = _pure(H, fixed, theta)
    if f is None or g is None:
        raise GluingError("no trivial/θ pair left to glue")
    h = [(a - b) % 3 for a, b in zip(f, g)]
    p = next(j for j, a in enumerate(h) if a)
    inv = pow(h[p], -1, 3)
    gens = [[3 * int(i == j) for j in range(n)] for i in range(n)]
    for j in range(n):
        if j != p:
            v = [0] * n
            v[j] = 1
            v[p] = -h[j] * inv % 3
            gens.append(v)
    out, _ = gl.sublattice(M, gens, name=M.name)
    return gl.reduce_basis(out)


def glue(two_adic, spec):
    """Global lattice with 2-adic part ``two_adic`` and 3-adic part ``spec``.

    ``two_adic`` must be split 3-adically or already carry fewer Λ than asked.
    """
    rt = gl.rational_type(two_adic)
    if not spec.compatible(rt):
        raise GluingError("3-adic spec %s does not have rational type %s" % (spec, rt))
    have = lambda_count(two_adic)
    if have > spec.k:
        raise GluingError("lattice already has %d copies of Λ, asked for %d" % (have, spec.k))
    M = two_adic
    for _ in range(spec.k - have):
        M = glue_once(M)
    if lambda_count(M) != spec.k:
        raise GluingError("gluing produced %d copies of Λ, wanted %d" % (lambda_count(M), spec.k))
    return M


# ---------------------------------------------------------------------------
# families over one 2-adic lattice, and bowties

def _ctilde(rt):
    return min(rt[0], rt[1])


def enumerate_global(label):
    """Labels of all global lattices whose 2-adic part is the atom ``label``."""
    if isinstance(label, str):
        label = cat.parse_label(label)
    if not isinstance(label, (cat.Atom, cat.Tube)):
        raise cat.LabelError("enumerate_global takes a single 2-adic atom")
    rt = cat.label_rational_type(label)
    out = []
    for k in range(_ctilde(rt) + 1):
        spec = ThreeAdicSpec.split(rt, k)
        out.append(cat.Glue((label,), tuple(cat.ThreeAdic(a) for a in spec.atoms())))
    return out


def bowtie_class(rt):
    """+1, +2, -1 or -2 for the classes with c1 - c2 = ±1, ±2; else 0."""
    d = rt[0] - rt[1]
    return d if d in (1, 2, -1, -2) else 0


def bowtie_lambda_count(label):
    rts = [cat.label_rational_type(p) for p in label.parts]
    base = sum(_ctilde(rt) for rt in rts)
    return base + (1 if label.variant == "Bowtie" else 2)


def check_bowtie_classes(variant, rts):
    cls = [bowtie_class(rt) for rt in rts]
    if 0 in cls:
        i = cls.index(0)
        raise GluingError("component %d has c1 - c2 = %d; it splits off a summand of "
                          "rational type (c,c,c3) or is not indecomposable-compatible"
                          % (i + 1, rts[i][0] - rts[i][1]))
    if variant == "Bowtie":
        if not ((cls[0] > 0) != (cls[1] > 0)):
            raise GluingError("both components lean the same way (c1 - c2 = %d, %d); "
                              "the glued lattice decomposes" % tuple(cls))
    elif variant == "Bowtie2":
        if sorted(cls) != [-2, 2]:
            raise GluingError("Bowtie2 needs c1 - c2 = 2 and c2 - c1 = 2, got %d, %d" % tuple(cls))
    elif variant == "BowtieTriple":
        if not (cls[0] == 2 and cls[1] == cls[2] == -1) and \
                not (cls[0] == -2 and cls[1] == cls[2] == 1):
            raise GluingError("BowtieTriple needs classes (2,-1,-1) or (-2,1,1), got %s"
                              % (tuple(cls),))
    else:
        raise GluingError("unknown bowtie variant %r" % variant)


def bowtie_build(variant, components, seed=None):
    """Indecomposable global lattice with decomposable 2-adic part."""
    labels = [cat.parse_label(c) if isinstance(c, str) else c for c in components]
    rts = [cat.label_rational_type(p) for p in labels]
    check_bowtie_classes(variant, rts)
    label = cat.Bowtie(variant, tuple(labels))
    M = gl.direct_sum(*[cat.build(p, seed) for p in labels])
    rt = gl.rational_type(M)
    spec = ThreeAdicSpec.split(rt, bowtie_lambda_count(label))
    return glue(M, spec).with_name(str(label))


def build_global(label, seed=None):
    if isinstance(label, cat.Glue):
        M = gl.direct_sum(*[cat.build(p, seed) for p in label.two])
        spec = ThreeAdicSpec.from_atoms(label.three)
        return glue(M, spec)
    if isinstance(label, cat.Bowtie):
        return bowtie_build(label.variant, label.parts, seed)
    raise cat.LabelError("not a global label: %s" % label)


# ---------------------------------------------------------------------------
# genus fingerprints

@dataclass(frozen=True)
class GenusFingerprint:
    rational_type: tuple
    tate_window: tuple
    top: tuple  # (d1', d2') when the lattice is an A⁺-lattice, else None
    generators: tuple  # minimal 2-local generator counts

    def to_json(self):
        return {"rational_type": list(self.rational_type),
                "tate_window": [list(t) for t in self.tate_window],
                "top": list(self.top) if self.top else None,
                "generators": list(self.generators)}


def genus_fingerprint(M, radius=4):
    window = tuple(tuple(tate_fast(M, n)) for n in range(-radius, radius + 1))
    try:
        d = gr.recover_dimvector(M)
        top = (d.d1p, d.d2p)
    except (gl.LatticeError, ValueError):
        top = None
    gens = tuple(gl.top_multiplicities(M))
    return GenusFingerprint(gl.rational_type(M), window, top, gens)


def genus_equal(M, N):
    """Necessary condition for M ≅ N; not a decision procedure."""
    return genus_fingerprint(M) == genus_fingerprint(N)


# ---------------------------------------------------------------------------
# non-unique decompositions

NONUNIQUE_CASE1 = {"N1": "L1", "N1p": "P1", "N2": "L2", "N2p": "P2"}
NONUNIQUE_CASE2 = {"N1": "Tth(2,1)", "N2": "L2", "N3": "P2",
             "N1p": "Tth(3,2)", "N2p": "L1", "N3p": "P1"}


def nonunique_decomposition_check(seed=None):
    """Two decompositions of one lattice, compared by fingerprint."""
    c = NONUNIQUE_CASE1
    left1 = ["Bowtie(%s, %s)" % (c["N1"], c["N2"]), "Bowtie(%s, %s)" % (c["N1p"], c["N2p"])]
    right1 = ["Bowtie(%s, %s)" % (c["N1"], c["N2p"]), "Bowtie(%s, %s)" % (c["N1p"], c["N2"])]
    c = NONUNIQUE_CASE2
    left2 = ["BowtieTriple(%s, %s, %s)" % (c["N1"], c["N2"], c["N3"]),
             "BowtieTriple(%s, %s, %s)" % (c["N1p"], c["N2p"], c["N3p"])]
    right2 = ["Bowtie2(%s, %s)" % (c["N1"], c["N1p"]),
              "Bowtie(%s, %s)" % (c["N2p"], c["N2"]),
              "Bowtie(%s, %s)" % (c["N3p"], c["N3"])]
    report = {}
    for case, (left, right) in (("case1", (left1, right1)), ("case2", (left2, right2))):
        A = gl.direct_sum(*[cat.build(x, seed) for x in left])
        B = gl.direct_sum(*[cat.build(x, seed) for x in right])
        report[case] = {"left": left, "right": right,
                        "summands": (len(left), len(right)),
                        "fingerprint_equal": genus_equal(A, B)}
    return report
