"""Chain complexes over ℤ and their (co)homology with ℤ, ℚ or 𝔽_p coefficients.

Rings are named by short tags: ``"Z"``, ``"Q"`` and ``"F<p>"`` for a prime p
(``"F2"``, ``"F3"``, ``"F5"``, ...).  Reduced homology of the complex ``{∅}``
is ``ℤ`` in degree ``-1``, which is what lets the empty full subcomplex play
the part of ``S^{-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import isqrt

from .complex_core import SimplicialComplex, lex_key, popcount, vertices
from .linalg import IntMatrix, Lattice, SmithForm, integer_kernel, rank_mod_p, smith_normal_form

RINGS = ("Z", "Q", "F2", "F3", "F5")


def characteristic(ring: str) -> int | None:
    """``None`` for ℤ, ``0`` for ℚ, ``p`` for 𝔽_p."""
    if ring == "Z":
        return None
    if ring == "Q":
        return 0
    if ring.startswith("F") and ring[1:].isdigit():
        p = int(ring[1:])
        if p > 1 and all(p % k for k in range(2, isqrt(p) + 1)):
            return p
    raise ValueError(f"unknown coefficient ring {ring!r}; use Z, Q or F<prime>")


class ChainComplexError(ValueError):
    def __init__(self, degree: int):
        super().__init__(f"d∘d != 0 at degree {degree}")
        self.degree = degree


@dataclass
class ChainComplex:
    """Free ℤ-modules ``C_n`` with differentials ``d_n : C_n -> C_{n+step}``.

    ``step = -1`` is a chain complex, ``step = +1`` a cochain complex.  The
    matrix ``d[n]`` has one column per basis element of ``C_n``.
    """

    dims: dict
    d: dict
    step: int = -1
    labels: dict = field(default_factory=dict)

    def __post_init__(self):
        for n, M in self.d.items():
            want = (self.dims.get(n + self.step, 0), self.dims.get(n, 0))
            if M.shape != want:
                raise ValueError(f"d[{n}] has shape {M.shape}, expected {want}")

    @property
    def degrees(self) -> list[int]:
        return sorted(n for n, k in self.dims.items() if k)

    def differential(self, n: int) -> IntMatrix:
        M = self.d.get(n)
        if M is None:
            return IntMatrix.zeros(self.dims.get(n + self.step, 0), self.dims.get(n, 0))
        return M

    def check(self) -> None:
        """Raise :class:`ChainComplexError` at the first degree where ``d∘d != 0``."""
        for n in sorted(self.d):
            nxt = self.d.get(n + self.step)
            if nxt is not None and not (nxt @ self.d[n]).is_zero():
                raise ChainComplexError(n)

    def transpose(self) -> "ChainComplex":
        """The dual complex ``Hom(C, ℤ)`` with the same bases."""
        return ChainComplex(dict(self.dims),
                            {n + self.step: M.transpose() for n, M in self.d.items()},
                            -self.step, dict(self.labels))

    @cached_property
    def _smith(self) -> dict:
        return {}

    def smith(self, n: int) -> SmithForm:
        cache = self._smith
        if n not in cache:
            cache[n] = smith_normal_form(self.differential(n))
        return cache[n]

    def rank(self, n: int, p: int | None) -> int:
        if n not in self.d:
            return 0
        if p:
            return rank_mod_p(self.differential(n), p)
        return self.smith(n).rank


@dataclass(frozen=True)
class HomologySummary:
    """Per degree: Betti number and torsion invariant factors (each ≥ 2)."""

    ring: str
    betti: dict
    torsion: dict

    def nonzero(self) -> dict:
        return {n: (b, self.torsion.get(n, ())) for n, b in sorted(self.betti.items())
                if b or self.torsion.get(n)}

    def is_trivial(self) -> bool:
        return not self.nonzero()

    def is_free(self) -> bool:
        return not any(self.torsion.values())

    def dims(self) -> dict:
        return {n: b for n, b in sorted(self.betti.items()) if b}

    def __eq__(self, other) -> bool:
        return isinstance(other, HomologySummary) and self.ring == other.ring and self.nonzero() == other.nonzero()


def homology(C: ChainComplex, ring: str = "Z", check: bool = True) -> HomologySummary:
    """Homology ``ker d_n / im d_{n-step}`` in every degree.

    Over ℤ the torsion at degree n is the list of invariant factors > 1 of
    the incoming differential.  For a cochain complex this is cohomology.
    """
    if check:
        C.check()
    p = characteristic(ring)
    betti, torsion = {}, {}
    for n in sorted(C.dims):
        dim = C.dims[n]
        if not dim:
            continue
        incoming = n - C.step
        b = dim - C.rank(n, p) - C.rank(incoming, p)
        betti[n] = b
        if p is None and incoming in C.d:
            t = C.smith(incoming).torsion
            if t:
                torsion[n] = t
    return HomologySummary(ring, betti, torsion)


# -- simplicial complexes ----------------------------------------------------

def _face_index(K: SimplicialComplex) -> dict:
    by_size: dict = {}
    for f in K.faces:
        by_size.setdefault(popcount(f), []).append(f)
    return {k: sorted(v, key=lex_key) for k, v in by_size.items()}


def reduced_chain_complex(K: SimplicialComplex) -> ChainComplex:
    """Augmented simplicial chain complex of ``K``.

    ``C_n`` has the faces of size ``n + 1`` in lexicographic order (so ``C_{-1}``
    is spanned by ``∅``) and ``∂σ = Σ_k (-1)^k (σ minus its k-th smallest vertex)``.
    """
    faces = _face_index(K)
    dims = {k - 1: len(v) for k, v in faces.items()}
    index = {k: {f: i for i, f in enumerate(v)} for k, v in faces.items()}
    d = {}
    for k, fs in faces.items():
        if k == 0:
            continue
        M = IntMatrix.zeros(len(faces[k - 1]), len(fs))
        tgt = index[k - 1]
        for j, f in enumerate(fs):
            for s, v in enumerate(vertices(f)):
                M.rows[tgt[f & ~(1 << (v - 1))]][j] = -1 if s & 1 else 1
        d[k - 1] = M
    labels = {k - 1: v for k, v in faces.items()}
    return ChainComplex(dims, d, -1, labels)


def reduced_homology(K: SimplicialComplex, ring: str = "Z") -> HomologySummary:
    return homology(reduced_chain_complex(K), ring, check=False)


def reduced_cohomology(K: SimplicialComplex, ring: str = "Z") -> HomologySummary:
    """Cohomology of the dual of the augmented chain complex.

    Over ℤ the torsion appears one degree above where it sits in homology.
    """
    return homology(reduced_chain_complex(K).transpose(), ring, check=False)


def sphere_homology(dim: int, ring: str = "Z") -> HomologySummary:
    """Reduced homology of ``S^dim`` (``dim = -1`` is the empty space)."""
    return HomologySummary(ring, {dim: 1}, {})


# -- inclusions --------------------------------------------------------------

def _check_sub(Ksub: SimplicialComplex, K: SimplicialComplex) -> None:
    if Ksub.ground != K.ground:
        raise ValueError("subcomplex must live on the same ground set")
    if not Ksub.faces <= K.faces:
        raise ValueError("not a subcomplex")


def induced_inclusion_map(Ksub: SimplicialComplex, K: SimplicialComplex, n: int) -> IntMatrix:
    """Chain-level inclusion ``C_n(Ksub) -> C_n(K)`` of augmented chains."""
    _check_sub(Ksub, K)
    src = sorted((f for f in Ksub.faces if popcount(f) == n + 1), key=lex_key)
    tgt = {f: i for i, f in enumerate(sorted((f for f in K.faces if popcount(f) == n + 1), key=lex_key))}
    M = IntMatrix.zeros(len(tgt), len(src))
    for j, f in enumerate(src):
        M.rows[tgt[f]][j] = 1
    return M


def mapping_cone(Ksub: SimplicialComplex, K: SimplicialComplex) -> ChainComplex:
    """Cone of the inclusion: ``Cone_n = C_{n-1}(Ksub) ⊕ C_n(K)``, ``d(a, b) = (-∂a, a + ∂b)``."""
    _check_sub(Ksub, K)
    A, B = reduced_chain_complex(Ksub), reduced_chain_complex(K)
    lo = -1
    hi = max(max(A.dims) + 1, max(B.dims))
    dims = {n: A.dims.get(n - 1, 0) + B.dims.get(n, 0) for n in range(lo, hi + 1)}
    d = {}
    for n in range(lo, hi + 1):
        a_src, b_src = A.dims.get(n - 1, 0), B.dims.get(n, 0)
        a_tgt, b_tgt = A.dims.get(n - 2, 0), B.dims.get(n - 1, 0)
        if not (a_src + b_src) or not (a_tgt + b_tgt):
            continue
        M = IntMatrix.zeros(a_tgt + b_tgt, a_src + b_src)
        if a_src and a_tgt:
            for i, r in enumerate(A.differential(n - 1).rows):
                M.rows[i] = {j: -v for j, v in r.items()}
        if a_src:
            inc = induced_inclusion_map(Ksub, K, n - 1)
            for i, r in enumerate(inc.rows):
                M.rows[a_tgt + i].update(r)
        if b_src and n in B.d:
            for i, r in enumerate(B.d[n].rows):
                M.rows[a_tgt + i].update({a_src + j: v for j, v in r.items()})
        d[n] = M
    return ChainComplex(dims, d, -1)


@dataclass
class InclusionReport:
    """Whether ``Ksub ⊆ K`` induces isomorphisms on integral reduced homology."""

    Ksub: SimplicialComplex
    K: SimplicialComplex

    @cached_property
    def cone_homology(self) -> HomologySummary:
        return homology(mapping_cone(self.Ksub, self.K), "Z")

    @property
    def is_iso(self) -> bool:
        """All degrees at once: the mapping cone is acyclic over ℤ."""
        return self.cone_homology.is_trivial()

    def degree_is_iso(self, n: int) -> bool:
        """Exact verdict in one degree by comparing cycle and boundary lattices in ``C_n(K)``.

        Injective: cycles of ``Ksub`` bounding in ``K`` already bound in ``Ksub``.
        Surjective: every cycle of ``K`` is a cycle of ``Ksub`` plus a boundary.
        Dense integer elimination, meant for small complexes.
        """
        A, B = reduced_chain_complex(self.Ksub), reduced_chain_complex(self.K)
        dimB = B.dims.get(n, 0)
        if not dimB:
            return not A.dims.get(n, 0)
        inc = induced_inclusion_map(self.Ksub, self.K, n).to_dense()

        def push(vecs):
            # A_n coordinates -> B_n coordinates
            return [[sum(inc[i][j] * v[j] for j in range(len(v))) for i in range(dimB)] for v in vecs]

        def kernel(C, k):
            M = C.differential(k).to_dense()
            return integer_kernel(M, C.dims.get(k, 0)) if C.dims.get(k, 0) else []

        def image(C, k):
            M = C.differential(k + 1)
            return [list(col) for col in zip(*M.to_dense())] if M.ncols and M.nrows else []

        ZA = push(kernel(A, n))
        BA = push(image(A, n))
        ZB = kernel(B, n)
        BB = image(B, n)
        reach = Lattice(ZA + BB, dimB)
        if not all(z in reach for z in ZB):
            return False
        if not ZA:
            return True
        # x·ZA = y·BB  <=>  (x, y) in ker [ZA | -BB]
        cols = ZA + [[-x for x in b] for b in BB]
        rel = integer_kernel([list(r) for r in zip(*cols)], len(cols))
        boundaries_of_A = Lattice(BA, dimB)
        for v in rel:
            z = [sum(v[k] * ZA[k][i] for k in range(len(ZA))) for i in range(dimB)]
            if z not in boundaries_of_A:
                return False
        return True

    def per_degree(self) -> dict:
        top = max(max(reduced_chain_complex(self.K).dims), 0)
        return {n: self.degree_is_iso(n) for n in range(-1, top + 1)}


def is_homology_iso(Ksub: SimplicialComplex, K: SimplicialComplex) -> InclusionReport:
    _check_sub(Ksub, K)
    return InclusionReport(Ksub, K)
