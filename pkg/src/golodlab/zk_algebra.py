"""Cellular cochains of the moment-angle complex ``Z_K`` and its real version.

The cell model has one cell ``(I, J)`` for each face ``I ∈ K`` and each
``J`` disjoint from ``I``: the ``D²`` cell in the coordinates of ``I``, the
``S¹`` cell in those of ``J``, the base point elsewhere.  Its degree is
``2|I| + |J|`` and its multidegree ``I ∪ J``.  Coboundary and product are

    d(I, J) = Σ_{j ∈ J, I ∪ j ∈ K} ε(j, J) (I ∪ j, J - j),
              ε(j, J) = (-1)^#{j' ∈ J : j' < j}
    (I, J)·(I', J') = sh(J, J') (I ∪ I', J ∪ J')   when (I ∪ J) ∩ (I' ∪ J') = ∅
                                                     and I ∪ I' ∈ K, else 0,
              sh(J, J') = (-1)^#{(a, b) ∈ J × J' : a > b}.

Because the differential preserves multidegree the complex splits into
blocks ``U ⊆ [m]`` whose cells are the pairs ``(I, U - I)`` with
``I ∈ K_U``; all heavy lifting is done block by block.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .complex_core import SimplicialComplex, fmt, full_subcomplex, lex_key, popcount, submasks, vertices
from .homology import (ChainComplex, HomologySummary, characteristic, homology,
                       reduced_chain_complex)
from .linalg import Field, IntMatrix, nullspace, rref, solve
from .taylor import TorTable

FIELD_RINGS = ("Q", "F2", "F3", "F5")


def cell_degree(I: int, J: int) -> int:
    return 2 * popcount(I) + popcount(J)


def _below(j_bit: int, J: int) -> int:
    return popcount(J & (j_bit - 1))


def epsilon(j_bit: int, J: int) -> int:
    return -1 if _below(j_bit, J) & 1 else 1


def shuffle_sign(J: int, J2: int) -> int:
    """``(-1)`` to the number of pairs ``a ∈ J, b ∈ J2`` with ``a > b``."""
    inv = 0
    for b in vertices(J2):
        inv += popcount(J >> b)
    return -1 if inv & 1 else 1


def cell_coboundary(K: SimplicialComplex, I: int, J: int) -> list:
    out = []
    rest = J
    while rest:
        j = rest & -rest
        rest ^= j
        if (I | j) in K.faces:
            out.append(((I | j, J ^ j), epsilon(j, J)))
    return out


# -- the full cochain complex ------------------------------------------------

def koszul_cells(K: SimplicialComplex) -> list:
    """All cells ``(I, J)`` ordered by degree, then lexicographically."""
    cells = [(I, J) for I in K.faces for J in submasks(K.ground & ~I)]
    return sorted(cells, key=lambda c: (cell_degree(*c), lex_key(c[0] | c[1]), lex_key(c[0])))


def koszul_cochain_complex(K: SimplicialComplex) -> ChainComplex:
    """The whole cellular cochain complex of ``Z_K`` over ℤ (``step = +1``)."""
    by_deg: dict = {}
    for c in koszul_cells(K):
        by_deg.setdefault(cell_degree(*c), []).append(c)
    index = {n: {c: i for i, c in enumerate(cs)} for n, cs in by_deg.items()}
    d = {}
    for n, cs in by_deg.items():
        tgt = index.get(n + 1)
        if not tgt:
            continue
        M = IntMatrix.zeros(len(tgt), len(cs))
        for j, (I, J) in enumerate(cs):
            for c, s in cell_coboundary(K, I, J):
                M.rows[tgt[c]][j] = s
        if M.nnz():
            d[n] = M
    return ChainComplex({n: len(cs) for n, cs in by_deg.items()}, d, +1, by_deg)


@dataclass
class Block:
    """Cochains of multidegree ``U``: cells ``(I, U - I)`` with ``I ∈ K_U``."""

    U: int
    cells: dict  # degree -> list of I (sorted lexicographically)
    complex: ChainComplex

    def cell(self, n: int, k: int) -> tuple:
        I = self.cells[n][k]
        return I, self.U & ~I


def koszul_block(K: SimplicialComplex, U: int) -> Block:
    base = popcount(U)
    by_deg: dict = {}
    for I in K.faces:
        if I & ~U == 0:
            by_deg.setdefault(base + popcount(I), []).append(I)
    for v in by_deg.values():
        v.sort(key=lex_key)
    index = {n: {I: i for i, I in enumerate(v)} for n, v in by_deg.items()}
    d = {}
    for n, Is in by_deg.items():
        tgt = index.get(n + 1)
        if not tgt:
            continue
        M = IntMatrix.zeros(len(tgt), len(Is))
        for j, I in enumerate(Is):
            J = U & ~I
            rest = J
            while rest:
                b = rest & -rest
                rest ^= b
                k = tgt.get(I | b)
                if k is not None:
                    M.rows[k][j] = epsilon(b, J)
        if M.nnz():
            d[n] = M
    return Block(U, by_deg, ChainComplex({n: len(v) for n, v in by_deg.items()}, d, +1))


def koszul_blocks(K: SimplicialComplex) -> dict:
    return {U: koszul_block(K, U) for U in sorted(submasks(K.ground))}


@dataclass(frozen=True)
class ZKCohomology:
    """``H^*(Z_K)`` assembled from the multidegree blocks."""

    ring: str
    per_block: dict  # U -> HomologySummary

    def dims(self) -> dict:
        out: dict = {}
        for H in self.per_block.values():
            for n, b in H.betti.items():
                if b:
                    out[n] = out.get(n, 0) + b
        return dict(sorted(out.items()))

    def torsion(self) -> dict:
        out: dict = {}
        for H in self.per_block.values():
            for n, t in H.torsion.items():
                out.setdefault(n, []).extend(t)
        return {n: tuple(sorted(t)) for n, t in sorted(out.items())}

    def is_free(self) -> bool:
        return not self.torsion()

    def tor_table(self) -> TorTable:
        """``β_{ℓ,U} = dim H^{2|U| - ℓ}`` of block ``U``."""
        t = TorTable()
        for U, H in self.per_block.items():
            for n, b in H.betti.items():
                if b:
                    t.entries[(2 * popcount(U) - n, U)] = b
        return t


def zk_cohomology(K: SimplicialComplex, ring: str = "Q") -> ZKCohomology:
    return ZKCohomology(ring, {U: homology(B.complex, ring, check=False)
                               for U, B in koszul_blocks(K).items()})


# -- cochain elements --------------------------------------------------------

def _normalizer(ring: str):
    p = characteristic(ring)
    if p is None:
        return int
    if p == 0:
        return Fraction
    return lambda x: (x.numerator * pow(x.denominator, -1, p) if isinstance(x, Fraction) else int(x)) % p


@dataclass
class Cochain:
    """A cellular cochain: ``terms[(I, J)]`` is the coefficient of cell ``(I, J)``."""

    K: SimplicialComplex
    ring: str
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        norm = _normalizer(self.ring)
        clean = {}
        for (I, J), c in self.terms.items():
            c = norm(c)
            if c:
                if I & J or I not in self.K.faces:
                    raise ValueError(f"({fmt(I)}, {fmt(J)}) is not a cell")
                clean[(I, J)] = c
        self.terms = clean

    @classmethod
    def cell(cls, K, ring, I, J, c=1) -> "Cochain":
        return cls(K, ring, {(I, J): c})

    @classmethod
    def unit(cls, K, ring) -> "Cochain":
        return cls(K, ring, {(0, 0): 1})

    @property
    def degree(self) -> int | None:
        degs = {cell_degree(I, J) for I, J in self.terms}
        if len(degs) > 1:
            raise ValueError("inhomogeneous cochain")
        return degs.pop() if degs else None

    @property
    def multidegrees(self) -> set:
        return {I | J for I, J in self.terms}

    def is_zero(self) -> bool:
        return not self.terms

    def _same(self, other: "Cochain") -> None:
        if self.ring != other.ring:
            raise ValueError(f"coefficient rings differ: {self.ring} vs {other.ring}")
        if self.K != other.K:
            raise ValueError("cochains live on different complexes")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._same(other)
        t = dict(self.terms)
        for c, v in other.terms.items():
            t[c] = t.get(c, 0) + v
        return Cochain(self.K, self.ring, t)

    def __neg__(self) -> "Cochain":
        return Cochain(self.K, self.ring, {c: -v for c, v in self.terms.items()})

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def scale(self, a) -> "Cochain":
        return Cochain(self.K, self.ring, {c: a * v for c, v in self.terms.items()})

    def __mul__(self, other: "Cochain") -> "Cochain":
        return cup_product(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Cochain) and self.ring == other.ring and self.terms == other.terms

    def __repr__(self) -> str:
        body = " + ".join(f"{v}·({fmt(I)},{fmt(J)})" for (I, J), v in sorted(self.terms.items()))
        return f"Cochain[{self.ring}]({body or '0'})"


def coboundary(x: Cochain) -> Cochain:
    t: dict = {}
    for (I, J), v in x.terms.items():
        for c, s in cell_coboundary(x.K, I, J):
            t[c] = t.get(c, 0) + s * v
    return Cochain(x.K, x.ring, t)


def cup_product(x: Cochain, y: Cochain) -> Cochain:
    x._same(y)
    faces = x.K.faces
    t: dict = {}
    for (I, J), a in x.terms.items():
        for (I2, J2), b in y.terms.items():
            if (I | J) & (I2 | J2) or (I | I2) not in faces:
                continue
            c = (I | I2, J | J2)
            t[c] = t.get(c, 0) + shuffle_sign(J, J2) * a * b
    return Cochain(x.K, x.ring, t)


# -- cohomology classes ------------------------------------------------------

def _field(ring: str) -> Field:
    p = characteristic(ring)
    if p is None:
        raise ValueError("cohomology representatives need a field; use Q or F<p>")
    return Field(p)


class _BlockSolver:
    """Dense linear algebra on one block, over one field."""

    def __init__(self, block: Block, F: Field):
        self.block = block
        self.F = F
        self._dense: dict = {}

    def matrix(self, n: int) -> list:
        """``d^n`` as dense rows (target cells) over columns (source cells)."""
        if n not in self._dense:
            C = self.block.complex
            M = C.differential(n)
            self._dense[n] = M.to_dense() if M.nrows and M.ncols else [[] for _ in range(M.nrows)]
        return self._dense[n]

    def vector(self, x: Cochain, n: int) -> list:
        cells = self.block.cells.get(n, [])
        pos = {I: k for k, I in enumerate(cells)}
        v = [self.F.coerce(0)] * len(cells)
        for (I, J), c in x.terms.items():
            if I | J == self.block.U:
                v[pos[I]] = self.F.coerce(c)
        return v

    def cochain(self, K, ring, n: int, v: list) -> Cochain:
        cells = self.block.cells.get(n, [])
        return Cochain(K, ring, {(I, self.block.U & ~I): c for I, c in zip(cells, v) if c})

    def representatives(self, n: int) -> list:
        """Cocycles spanning ``H^n`` of the block, picked greedily from the kernel basis."""
        dim = len(self.block.cells.get(n, []))
        if not dim:
            return []
        out_rows = self.matrix(n)
        Z = nullspace(out_rows, dim, self.F) if out_rows and out_rows[0] else \
            [[self.F.coerce(int(i == j)) for i in range(dim)] for j in range(dim)]
        prev = self.matrix(n - 1)
        B = [list(col) for col in zip(*prev)] if prev and prev[0] else []
        span, _ = rref(B, dim, self.F) if B else ([], [])
        reps = []
        rank = len(span)
        for z in Z:
            trial, _ = rref(span + [z], dim, self.F)
            if len(trial) > rank:
                span, rank = trial, len(trial)
                reps.append(z)
        return reps

    def preimage(self, n: int, v: list) -> list | None:
        """``w`` with ``d^{n-1} w = v``, or ``None``."""
        src = len(self.block.cells.get(n - 1, []))
        if not any(v):
            return [self.F.coerce(0)] * src
        if not src:
            return None
        return solve(self.matrix(n - 1), src, v, self.F)


@dataclass(frozen=True)
class CohomologyClass:
    degree: int
    multidegree: int
    representative: Cochain


def cohomology_classes(K: SimplicialComplex, ring: str = "Q") -> dict:
    """Cocycle representatives of a basis of ``H^n(Z_K)`` for each degree n.

    Representatives are chosen block by block, taking kernel vectors (from
    the reduced row-echelon nullspace, cells in lexicographic order) that
    are independent modulo coboundaries.
    """
    F = _field(ring)
    out: dict = {}
    for U, block in koszul_blocks(K).items():
        solver = _BlockSolver(block, F)
        for n in sorted(block.cells):
            for v in solver.representatives(n):
                out.setdefault(n, []).append(CohomologyClass(n, U, solver.cochain(K, ring, n, v)))
    return dict(sorted(out.items()))


class NotACocycle(ValueError):
    pass


def is_coboundary(z: Cochain) -> tuple[bool, Cochain | None]:
    """Decide whether the cocycle ``z`` is ``d(w)``; returns ``(True, w)`` or ``(False, None)``."""
    if not coboundary(z).is_zero():
        raise NotACocycle("is_coboundary needs a cocycle")
    if z.is_zero():
        return True, Cochain(z.K, z.ring)
    F = _field(z.ring)
    n = z.degree
    w = Cochain(z.K, z.ring)
    for U in sorted(z.multidegrees):
        solver = _BlockSolver(koszul_block(z.K, U), F)
        x = solver.preimage(n, solver.vector(z, n))
        if x is None:
            return False, None
        w = w + solver.cochain(z.K, z.ring, n - 1, x)
    return True, w


@dataclass(frozen=True)
class ProductWitness:
    degrees: tuple
    multidegrees: tuple
    left: Cochain
    right: Cochain
    product: Cochain

    def as_dict(self) -> dict:
        return {"degrees": list(self.degrees), "product_degree": sum(self.degrees),
                "multidegrees": [vertices(U) for U in self.multidegrees]}


@dataclass(frozen=True)
class ProductVerdict:
    ring: str
    trivial: bool
    witness: ProductWitness | None
    pairs_checked: int


def products_trivial(K: SimplicialComplex, ring: str = "Q") -> ProductVerdict:
    """Whether every product of two positive-degree basis classes is a coboundary.

    Classes in blocks with overlapping multidegrees multiply to zero on the
    nose, so only pairs of blocks with disjoint multidegrees are tested.
    The witness is the first failing pair in the order (degree, multidegree)
    of the left factor, then of the right factor.
    """
    F = _field(ring)
    blocks = koszul_blocks(K)
    solvers: dict = {}

    def solver(U):
        if U not in solvers:
            solvers[U] = _BlockSolver(blocks[U], F)
        return solvers[U]

    classes = []
    for U, block in blocks.items():
        if U == 0:
            continue
        H = homology(block.complex, ring, check=False)
        for n in sorted(H.betti):
            if H.betti[n]:
                for v in solver(U).representatives(n):
                    classes.append((n, lex_key(U), U, solver(U).cochain(K, ring, n, v)))
    classes.sort(key=lambda c: (c[0], c[1]))
    checked = 0
    for a, (n1, _, U1, x) in enumerate(classes):
        for n2, _, U2, y in classes[a + 1:]:
            if U1 & U2:
                continue
            checked += 1
            z = cup_product(x, y)
            if z.is_zero():
                continue
            s = solver(U1 | U2)
            if s.preimage(n1 + n2, s.vector(z, n1 + n2)) is None:
                return ProductVerdict(ring, False, ProductWitness((n1, n2), (U1, U2), x, y, z), checked)
    return ProductVerdict(ring, True, None, checked)


# -- Hochster / BBCG ---------------------------------------------------------

@dataclass(frozen=True)
class BettiDecomposition:
    """Reduced cohomology of every full subcomplex and the assembled ``H^*(Z_K)``.

    ``per_subset[I]`` is ``H̃^*(K_I)``; ``I = ∅`` contributes the unit in
    degree 0 through ``H̃^{-1}({∅})``.  ``dims``/``torsion`` assemble
    ``H^n(Z_K) = ⊕_I H̃^{n-|I|-1}(K_I)``.
    """

    ring: str
    per_subset: dict

    def dims(self) -> dict:
        out: dict = {}
        for I, H in self.per_subset.items():
            for j, b in H.betti.items():
                if b:
                    n = j + popcount(I) + 1
                    out[n] = out.get(n, 0) + b
        return dict(sorted(out.items()))

    def torsion(self) -> dict:
        out: dict = {}
        for I, H in self.per_subset.items():
            for j, t in H.torsion.items():
                out.setdefault(j + popcount(I) + 1, []).extend(t)
        return {n: tuple(sorted(t)) for n, t in sorted(out.items())}

    def tor_table(self) -> TorTable:
        """``β_{ℓ,I} = dim H̃^{|I|-ℓ-1}(K_I)``."""
        t = TorTable()
        for I, H in self.per_subset.items():
            for j, b in H.betti.items():
                if b:
                    t.entries[(popcount(I) - j - 1, I)] = b
        return t

    def contributions(self) -> list:
        """``(I, j, rank)`` for every nonzero free ``H̃^j(K_I)``, ``I ≠ ∅``."""
        out = []
        for I in sorted(self.per_subset, key=lex_key):
            if not I:
                continue
            for j, b in sorted(self.per_subset[I].betti.items()):
                if b:
                    out.append((I, j, b))
        return out


def hochster_table(K: SimplicialComplex, ring: str = "Q") -> BettiDecomposition:
    per = {}
    for I in submasks(K.ground):
        per[I] = homology(reduced_chain_complex(full_subcomplex(K, I)).transpose(), ring, check=False)
    return BettiDecomposition(ring, per)


def real_hochster_dims(K: SimplicialComplex, ring: str = "Q") -> dict:
    """Predicted ``dim H̃_n(RZ_K) = Σ_{I≠∅} dim H̃_{n-1}(K_I)``."""
    out: dict = {}
    for I in submasks(K.ground):
        if not I:
            continue
        H = homology(reduced_chain_complex(full_subcomplex(K, I)), ring, check=False)
        for j, b in H.betti.items():
            if b:
                out[j + 1] = out.get(j + 1, 0) + b
    return dict(sorted(out.items()))


# -- the real moment-angle complex -------------------------------------------

MAX_CUBICAL = 14


def real_cubical_complex(K: SimplicialComplex, augmented: bool = False) -> ChainComplex:
    """Cubical chains of ``RZ_K ⊆ [0, 1]^m``.

    A cell is ``(τ, f)`` with ``τ ∈ K`` the free coordinates and ``f`` the
    mask of fixed coordinates sitting at 1 (the others at 0); its dimension
    is ``|τ|``.  ``∂(τ, f) = Σ_k (-1)^k [(τ - t_k, f + t_k) - (τ - t_k, f)]``.
    With ``augmented`` a degree -1 generator receives every vertex.
    """
    if K.m > MAX_CUBICAL:
        raise ValueError(f"m = {K.m} exceeds the 3^m cell budget (m ≤ {MAX_CUBICAL})")
    by_deg: dict = {}
    for tau in K.faces:
        for f in submasks(K.ground & ~tau):
            by_deg.setdefault(popcount(tau), []).append((tau, f))
    for v in by_deg.values():
        v.sort(key=lambda c: (lex_key(c[0]), c[1]))
    index = {n: {c: i for i, c in enumerate(v)} for n, v in by_deg.items()}
    d = {}
    for n, cells in by_deg.items():
        if n == 0:
            continue
        tgt = index[n - 1]
        M = IntMatrix.zeros(len(tgt), len(cells))
        for j, (tau, f) in enumerate(cells):
            for k, t in enumerate(vertices(tau)):
                b = 1 << (t - 1)
                s = -1 if k & 1 else 1
                M.rows[tgt[(tau ^ b, f | b)]][j] = s
                M.rows[tgt[(tau ^ b, f)]][j] = -s
        d[n] = M
    dims = {n: len(v) for n, v in by_deg.items()}
    if augmented:
        dims[-1] = 1
        d[0] = IntMatrix(1, dims[0], [{j: 1 for j in range(dims[0])}])
    return ChainComplex(dims, d, -1, by_deg)


def real_zk_reduced_homology(K: SimplicialComplex, ring: str = "Q") -> HomologySummary:
    return homology(real_cubical_complex(K, augmented=True), ring, check=False)


def poincare_product(a: dict, b: dict) -> dict:
    """Künneth over a field: multiply Poincaré polynomials given as ``{degree: dim}``."""
    out: dict = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {n: v for n, v in sorted(out.items()) if v}


def unreduced(dims: dict) -> dict:
    out = dict(dims)
    out[0] = out.get(0, 0) + 1
    return {n: v for n, v in sorted(out.items()) if v}


def sphere_dims(n: int) -> dict:
    """Unreduced ``H^*(S^n)`` as ``{degree: dim}``."""
    return unreduced({n: 1}) if n > 0 else {0: 2} if n == 0 else {}

