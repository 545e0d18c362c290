"""Named lattices and the label grammar.

Labels (whitespace is ignored):

    L1 | L2 | L3 | P1 | P2, optionally with a shift  "P1^2", "L3^-1"
    B1 | B2 | trivial | Ztheta | L3std | ZH | ZG | P1inj | P2inj
    T(f, k)       homogeneous tube, f a bit list, highest degree first
    T1(i, k)      special tube of rank 2, row i in {1, 2}
    Tth(i, k)     special tube of rank 3, row i in {1, 2, 3}
    Glue({two-adic atoms}, {Z3 | Z3th | L3_3 | Lam, ...})
    Bowtie(N1, N2) | Bowtie2(N1, N2) | BowtieTriple(N1, N2, N3)
    Sum(X, Y, ...)  direct sum

A positive shift k means k steps of τ, realised as k stripped syzygies.
"""

import os
import re
from dataclasses import dataclass

from . import exactalg as ea
from . import glattice as gl
from . import graphrep as gr


class LabelError(ValueError):
    def __init__(self, message, text="", pos=None):
        if pos is not None:
            message = "%s at position %d in %r" % (message, pos, text)
        super().__init__(message)
        self.text = text
        self.pos = pos


class ExcludedParameterError(LabelError):
    """The polynomial is t+1 or t²+t+1, which index the special tubes."""


class BuildError(RuntimeError):
    pass


BASE_NAMES = ("trivial", "Ztheta", "L3std", "ZH", "ZG", "B1", "B2", "P1", "P2", "P1inj", "P2inj")
PRINCIPAL = {"L1": "trivial", "L2": "Ztheta", "L3": "L3std", "P1": "P1", "P2": "P2"}
THREE_ADIC = ("Z3", "Z3th", "L3_3", "Lam")


# ---------------------------------------------------------------------------
# label syntax tree

@dataclass(frozen=True)
class Atom:
    name: str
    shift: int = 0

    def __str__(self):
        return self.name if not self.shift else "%s^%d" % (self.name, self.shift)


@dataclass(frozen=True)
class Tube:
    kind: str  # "T", "T1" or "Tth"
    index: object  # row number, or the bit tuple of f for kind "T"
    size: int

    def __str__(self):
        if self.kind == "T":
            return "T([%s],%d)" % (",".join(str(b) for b in self.index), self.size)
        return "%s(%d,%d)" % (self.kind, self.index, self.size)


@dataclass(frozen=True)
class ThreeAdic:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Glue:
    two: tuple
    three: tuple

    def __str__(self):
        return "Glue({%s}, {%s})" % (", ".join(map(str, self.two)), ", ".join(map(str, self.three)))


@dataclass(frozen=True)
class Bowtie:
    variant: str  # "Bowtie", "Bowtie2" or "BowtieTriple"
    parts: tuple

    def __str__(self):
        return "%s(%s)" % (self.variant, ", ".join(map(str, self.parts)))


@dataclass(frozen=True)
class Sum:
    parts: tuple

    def __str__(self):
        return "Sum(%s)" % ", ".join(map(str, self.parts))


# ---------------------------------------------------------------------------
# parser

_TOKEN = re.compile(r"\s*(?:(-?\d+)|([A-Za-z][A-Za-z0-9_]*)|(.))")


def _tokenize(text):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        if m.group(0).strip() == "":
            pos = m.end()
            continue
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            out.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), start))
        else:
            out.append(("sym", m.group(3), start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None, value=None):
        tok = self.toks[self.i]
        if (kind and tok[0] != kind) or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            raise LabelError("expected %r, found %r" % (want, tok[1]), self.text, tok[2])
        self.i += 1
        return tok

    def error(self, msg):
        raise LabelError(msg, self.text, self.peek()[2])

    def label(self):
        tok = self.take("name")
        name, pos = tok[1], tok[2]
        if name in ("T", "T1", "Tth"):
            return self.tube(name, pos)
        if name == "Glue":
            self.take("sym", "(")
            two = self.braced(self.label)
            self.take("sym", ",")
            three = self.braced(self.three_adic)
            self.take("sym", ")")
            for t in two:
                if not isinstance(t, (Atom, Tube)):
                    raise LabelError("Glue takes 2-adic atoms", self.text, pos)
            return Glue(tuple(two), tuple(three))
        if name in ("Bowtie", "Bowtie2", "BowtieTriple", "Sum"):
            self.take("sym", "(")
            parts = [self.label()]
            while self.peek()[1] == ",":
                self.take("sym", ",")
                parts.append(self.label())
            self.take("sym", ")")
            if name == "Sum":
                return Sum(tuple(parts))
            want = 3 if name == "BowtieTriple" else 2
            if len(parts) != want:
                raise LabelError("%s takes %d arguments" % (name, want), self.text, pos)
            return Bowtie(name, tuple(parts))
        if name in THREE_ADIC:
            return ThreeAdic(name)
        if name in PRINCIPAL or name in BASE_NAMES:
            shift = 0
            if self.peek()[1] == "^":
                if name not in PRINCIPAL:
                    self.error("only L1, L2, L3, P1, P2 take a shift")
                self.take("sym", "^")
                shift = self.take("int")[1]
            return Atom(name, shift)
        raise LabelError("unknown name %r" % name, self.text, pos)

    def three_adic(self):
        tok = self.take("name")
        if tok[1] not in THREE_ADIC:
            raise LabelError("not a 3-adic atom: %r" % tok[1], self.text, tok[2])
        return ThreeAdic(tok[1])

    def braced(self, item):
        self.take("sym", "{")
        out = []
        if self.peek()[1] != "}":
            out.append(item())
            while self.peek()[1] == ",":
                self.take("sym", ",")
                out.append(item())
        self.take("sym", "}")
        return out

    def tube(self, kind, pos):
        self.take("sym", "(")
        if kind == "T":
            self.take("sym", "[")
            bits = [self.take("int")[1]]
            while self.peek()[1] == ",":
                self.take("sym", ",")
                bits.append(self.take("int")[1])
            self.take("sym", "]")
            index = tuple(bits)
        else:
            index = self.take("int")[1]
        self.take("sym", ",")
        size = self.take("int")[1]
        self.take("sym", ")")
        t = Tube(kind, index, size)
        _check_tube(t, self.text, pos)
        return t


def _poly_irreducible(bits):
    """Irreducibility over GF(2) of the polynomial with coefficients ``bits``."""
    f = int("".join(map(str, bits)), 2)
    deg = f.bit_length() - 1
    if deg < 1:
        return False
    for g in range(2, 1 << (deg // 2 + 1)):
        if g.bit_length() - 1 > deg // 2:
            break
        # polynomial remainder of f by g over GF(2)
        r = f
        dg = g.bit_length() - 1
        while r and r.bit_length() - 1 >= dg:
            r ^= g << (r.bit_length() - 1 - dg)
        if r == 0:
            return False
    return True


def _check_tube(t, text="", pos=None):
    if t.size < 1:
        raise LabelError("tube size must be positive", text, pos)
    if t.kind == "T":
        bits = t.index
        if any(b not in (0, 1) for b in bits) or not bits or bits[0] != 1:
            raise LabelError("f must be a monic bit list, highest degree first", text, pos)
        if bits in ((1, 1), (1, 1, 1)):
            raise ExcludedParameterError(
                "f = %s indexes a special tube, not a homogeneous one" % _poly_text(bits), text, pos)
        if not _poly_irreducible(bits):
            raise LabelError("f = %s is not irreducible over GF(2)" % _poly_text(bits), text, pos)
    elif t.kind == "T1" and t.index not in (1, 2):
        raise LabelError("T1 rows are 1 and 2", text, pos)
    elif t.kind == "Tth" and t.index not in (1, 2, 3):
        raise LabelError("Tth rows are 1, 2 and 3", text, pos)


def _poly_text(bits):
    deg = len(bits) - 1
    terms = []
    for i, b in enumerate(bits):
        e = deg - i
        if b:
            terms.append("1" if e == 0 else "t" if e == 1 else "t^%d" % e)
    return "+".join(terms) or "0"


def parse_label(text):
    p = _Parser(text)
    if p.peek()[0] == "end":
        raise LabelError("empty label", text, 0)
    out = p.label()
    if p.peek()[0] != "end":
        p.error("trailing input")
    return out


def format_label(label):
    return str(label)


# ---------------------------------------------------------------------------
# base lattices

def _permutation_lattice(images):
    """Lattice with basis permuted by a, b, σ according to ``images``."""
    mats = []
    for perm in images:
        n = len(perm)
        M = ea.zeros(n, n)
        for j, i in enumerate(perm):
            M[i][j] = 1
        mats.append(M)
    return mats


def _socle_mod2(L):
    """GF(2) basis (rows) of the Klein-fixed part of L/2L, which is its socle."""
    n = L.rank
    I = ea.identity(n)
    el = L.elements
    eqs = []
    for v in ((1, 0), (0, 1)):
        eqs += ea.gf2(ea.sub(el[(v, 0)], I))
    return ea.gf2_nullspace(eqs, n)


def minimal_overmodule(L, simple):
    """The overmodule X with 2X ⊆ L belonging to the unique simple socle summand.

    ``simple`` is 1 (trivial GF(2)) or 2 (GF(4)).  Raises BuildError unless
    the socle of L/2L has exactly one summand of that type.
    """
    n = L.rank
    soc = _socle_mod2(L)
    S = L.S
    P = ea.add(ea.add(ea.identity(n), S), ea.matmul(S, S))
    # on the socle, σ-fixed vectors are the image of 1+σ+σ², GF(4)-type the kernel
    fixed = ea.gf2_rref([ea.matvec(P, v) for v in soc], n)[0] if soc else []
    theta_part = []
    if soc:
        images = ea.gf2([ea.matvec(P, v) for v in soc])
        coeffs = ea.gf2_nullspace(ea.transpose(images, n), len(soc))
        combos = [[sum(c[i] * soc[i][j] for i in range(len(soc))) & 1 for j in range(n)]
                  for c in coeffs]
        theta_part = ea.gf2_rref(combos, n)[0] if combos else []
    part = fixed if simple == 1 else theta_part
    want = 1 if simple == 1 else 2
    if len(part) != want:
        raise BuildError("socle of L/2L has %d-dimensional %s part, expected one simple"
                         % (len(part), "trivial" if simple == 1 else "GF(4)"))
    gens = [[2 * int(i == j) for j in range(n)] for i in range(n)] + [list(v) for v in part]
    basis = ea.hnf_basis(gens)
    # X = (1/2)·span(basis), expressed in its own basis
    mats = []
    for X in (L.A, L.B, L.S):
        imgs = [ea.matvec(X, b) for b in basis]
        try:
            C = ea.solve_integral(basis, imgs)
        except ValueError:
            raise BuildError("overmodule is not G-stable") from None
        mats.append(ea.transpose(C))
    return gl.GLattice.from_matrices(*mats)


def radical_submodule(L):
    """Preimage in L of rad(L/2L) = (2L + Σ_v (v-1)L)."""
    n = L.rank
    I = ea.identity(n)
    el = L.elements
    gens = [[2 * int(i == j) for j in range(n)] for i in range(n)]
    for v in ((1, 0), (0, 1), (1, 1)):
        gens += ea.transpose(ea.sub(el[(v, 0)], I))
    basis = ea.hnf_basis(gens)
    return gl.sublattice(L, basis)[0]


def build_base(name):
    if name == "trivial":
        return gl.trivial(1).with_name("trivial")
    if name == "Ztheta":
        return gr.model("L2").with_name("Ztheta")
    if name == "L3std":
        return gr.model("L3").with_name("L3std")
    if name == "ZH":
        ident = [0, 1, 2]
        return gl.GLattice.from_matrices(*_permutation_lattice([ident, ident, [1, 2, 0]]), name="ZH")
    if name == "ZG":
        return gl.regular().with_name("ZG")
    if name in ("B1", "B2"):
        return gl.bijective(int(name[1])).lattice.with_name(name)
    if name in ("P1", "P2"):
        i = int(name[1])
        return minimal_overmodule(gl.bijective(i).lattice, i).with_name(name)
    if name in ("P1inj", "P2inj"):
        i = int(name[1])
        return radical_submodule(gl.bijective(i).lattice).with_name(name)
    raise LabelError("unknown base lattice %r" % name)


# ---------------------------------------------------------------------------
# tubes

T1_SIMPLES = {1: gr.DimVector(1, 1, 1, 1, 1), 2: gr.DimVector(1, 1, 0, 2, 0)}
TTH_SIMPLES = {1: gr.DimVector(0, 2, 0, 2, 1), 2: gr.DimVector(2, 1, 2, 2, 0),
               3: gr.DimVector(2, 1, 0, 2, 1)}


def default_seed():
    return int(os.environ.get("LATCOH_SEED", "0"))


_REP_MEMO = {}


def tube_rep(tube, seed=None):
    """Representation of a tube module.

    Regular simples come from the search at their dimension vectors; a
    module of size k is a non-split extension of the size k-1 module (as
    submodule) by the next regular simple.
    """
    seed = default_seed() if seed is None else seed
    key = (str(tube), seed)
    if key in _REP_MEMO:
        return _REP_MEMO[key]
    if tube.kind == "T":
        if len(tube.index) != 2:
            raise BuildError("homogeneous tubes are built for deg f = 1 only")
        simple = _homogeneous_simple(seed)
        rep = simple
        for step in range(1, tube.size):
            rep = gr.search_extension(rep, simple, seed=seed + step)
    else:
        simples = T1_SIMPLES if tube.kind == "T1" else TTH_SIMPLES
        r = len(simples)
        E = {i: _simple_rep(tube.kind, i, seed) for i in simples}
        rep = E[tube.index]
        for step in range(1, tube.size):
            top = E[(tube.index - 1 + step) % r + 1]
            rep = gr.search_extension(rep, top, seed=seed + step)
    _REP_MEMO[key] = rep
    return rep


def _simple_rep(kind, i, seed):
    key = ("simple", kind, i, seed)
    if key not in _REP_MEMO:
        dims = T1_SIMPLES if kind == "T1" else TTH_SIMPLES
        _REP_MEMO[key] = gr.search_indecomposable(dims[i], seed=seed)
    return _REP_MEMO[key]


def _homogeneous_simple(seed):
    """A brick of dimension ω with no maps to or from the rank-2 tube."""
    key = ("homogeneous", seed)
    if key not in _REP_MEMO:
        E = [_simple_rep("T1", i, seed) for i in (1, 2)]

        def outside(V):
            return all(not gr.rep_hom(e, V) and not gr.rep_hom(V, e) for e in E)

        _REP_MEMO[key] = gr.search_indecomposable(gr.OMEGA, seed=seed, accept=outside)
    return _REP_MEMO[key]


def tube_dimvector(tube):
    """Dimension vector of a tube module from the regular simples."""
    if tube.kind == "T":
        return gr.OMEGA * ((len(tube.index) - 1) * tube.size)
    simples = T1_SIMPLES if tube.kind == "T1" else TTH_SIMPLES
    r = len(simples)
    out = gr.DimVector()
    for step in range(tube.size):
        out = out + simples[(tube.index - 1 + step) % r + 1]
    return out


# ---------------------------------------------------------------------------
# build

_MEMO = {}


def _shifted(base_name, shift):
    key = "%s^%d" % (base_name, shift)
    if key in _MEMO:
        return _MEMO[key]
    if shift == 0:
        L = build_base(base_name)
    else:
        step = 1 if shift > 0 else -1
        prev = _shifted(base_name, shift - step)
        if step > 0:
            L = gl.strip_bijective(gl.syzygy(prev, "two_minimal"))
        else:
            L = gl.strip_bijective(gl.cosyzygy(prev, "two_minimal"))
    _MEMO[key] = L
    return L


def build(label, seed=None):
    """GLattice for a label (text or syntax tree)."""
    if isinstance(label, str):
        label = parse_label(label)
    key = (str(label), seed)
    if key in _MEMO:
        return _MEMO[key]
    try:
        L = _build(label, seed)
    except (gl.LatticeError, LookupError) as exc:
        raise BuildError("cannot build %s: %s" % (label, exc)) from exc
    L = L.with_name(str(label))
    _MEMO[key] = L
    return L


def _build(label, seed):
    if isinstance(label, Atom):
        if label.name in PRINCIPAL:
            return _shifted(PRINCIPAL[label.name], label.shift)
        return build_base(label.name)
    if isinstance(label, Tube):
        return gr.pullback_lattice(tube_rep(label, seed))
    if isinstance(label, Sum):
        return gl.direct_sum(*[build(p, seed) for p in label.parts])
    if isinstance(label, (Glue, Bowtie)):
        from . import globalize
        return globalize.build_global(label, seed)
    if isinstance(label, ThreeAdic):
        raise BuildError("3-adic atoms only occur inside Glue")
    raise LabelError("not a label: %r" % (label,))


def label_rational_type(label):
    """Rational type implied by a label, without building it."""
    if isinstance(label, str):
        label = parse_label(label)
    if isinstance(label, Atom):
        if label.shift:
            d = gr.tau_dim_shift(label.name, label.shift)
            return (d.d1, d.d2, d.d3)
        if label.name in ("L1", "trivial"):
            return (1, 0, 0)
        if label.name in ("L2", "Ztheta"):
            return (0, 1, 0)
        if label.name in ("L3", "L3std"):
            return (0, 0, 1)
        if label.name in ("P1", "B1", "P1inj"):
            base = (1, 0, 1)
        elif label.name in ("P2", "B2", "P2inj"):
            base = (0, 1, 2)
        elif label.name == "ZH":
            return (1, 1, 0)
        elif label.name == "ZG":
            return (1, 1, 3)
        else:
            raise LabelError("no rational type for %s" % label)
        return base
    if isinstance(label, Tube):
        d = tube_dimvector(label)
        return (d.d1, d.d2, d.d3)
    parts = label.two if isinstance(label, Glue) else label.parts
    out = (0, 0, 0)
    for p in parts:
        t = label_rational_type(p)
        out = tuple(a + b for a, b in zip(out, t))
    return out


def catalog_labels(max_shift=2):
    """Inventory of buildable labels at desk scale."""
    out = list(BASE_NAMES)
    for name in ("L1", "L2", "L3", "P1", "P2"):
        for k in range(-max_shift, max_shift + 1):
            if k:
                out.append("%s^%d" % (name, k))
    for kind, rows in (("T1", 2), ("Tth", 3)):
        for i in range(1, rows + 1):
            for k in (1, 2):
                out.append("%s(%d,%d)" % (kind, i, k))
    out.append("T([1,0],1)")
    return out


# ---------------------------------------------------------------------------
# conformance records

@dataclass
class ConformanceRecord:
    label: str
    degree: int
    formula: list
    oracle: list
    status: str  # "match", "paper-ambiguous-resolved" or "mismatch"
    note: str = ""

    def __post_init__(self):
        if self.status not in ("match", "paper-ambiguous-resolved", "mismatch"):
            raise ValueError("bad status %r" % self.status)
        if self.status == "mismatch" and (self.formula is None or self.oracle is None):
            raise ValueError("a mismatch record carries both values")

    def to_json(self):
        return {"label": self.label, "degree": self.degree, "formula": self.formula,
                "oracle": self.oracle, "status": self.status, "note": self.note}
