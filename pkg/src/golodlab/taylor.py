"""The Taylor resolution of a Stanley-Reisner ring.

Generators ``w_S`` are indexed by bitmasks ``S`` over the positions
``1..r`` of the minimal non-faces ``N_1, ..., N_r`` and ordered by
``(|S|, S)``.  ``w_S`` has multidegree ``N_S = ⋃_{i∈S} N_i``.  The
differential is

    d(w_S) = Σ_k (-1)^(k+1) v_{N_{i_k} - ⋃_{j≠k} N_{i_j}} w_{S - i_k}

for ``S = {i_1 < ... < i_ℓ}``, with ``v_∅ = 1``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .complex_core import fmt, is_antichain, lex_key, popcount, private_vertices, vertices
from .homology import ChainComplex, homology
from .linalg import IntMatrix


def _check_antichain(mnfs: Sequence[int]) -> None:
    if any(N == 0 for N in mnfs) or len(set(mnfs)) != len(mnfs) or not is_antichain(mnfs):
        raise ValueError("minimal non-faces must be a non-empty antichain of non-empty sets")


def generators(r: int, ell: int) -> list[int]:
    return sorted((S for S in range(1 << r) if popcount(S) == ell))


def multidegrees(mnfs: Sequence[int]) -> list[int]:
    """``N_S`` for every ``S ⊆ [r]``, indexed by the bitmask ``S``."""
    r = len(mnfs)
    U = [0] * (1 << r)
    for S in range(1, 1 << r):
        low = S & -S
        U[S] = U[S ^ low] | mnfs[low.bit_length() - 1]
    return U


@dataclass
class MonomialMatrix:
    """Matrix with entries ``sign · v_A``; ``entries[(row, col)] = (sign, A)``.

    Absent keys are zero entries.  ``rows``/``cols`` are the generator masks.
    """

    rows: list
    cols: list
    entries: dict = field(default_factory=dict)

    def unit_entries(self) -> list:
        return [(i, j) for (i, j), (_, A) in sorted(self.entries.items()) if A == 0]

    def column(self, j: int) -> dict:
        return {i: e for (i, jj), e in self.entries.items() if jj == j}


def taylor_differential(mnfs: Sequence[int], ell: int) -> MonomialMatrix:
    """``d : R^{-ℓ} -> R^{-ℓ+1}`` as a monomial matrix."""
    mnfs = list(mnfs)
    _check_antichain(mnfs)
    r = len(mnfs)
    if not 1 <= ell <= r:
        raise ValueError(f"degree {ell} outside 1..{r}")
    cols = generators(r, ell)
    rows = generators(r, ell - 1)
    row_of = {T: i for i, T in enumerate(rows)}
    U = multidegrees(mnfs)
    M = MonomialMatrix(rows, cols)
    for j, S in enumerate(cols):
        for k, i in enumerate(vertices(S)):
            T = S & ~(1 << (i - 1))
            M.entries[(row_of[T], j)] = (1 if k % 2 == 0 else -1, mnfs[i - 1] & ~U[T])
    return M


def compose_is_zero(outer: MonomialMatrix, inner: MonomialMatrix) -> bool:
    """Check ``outer ∘ inner = 0`` as polynomials.

    Monomials multiply by adding exponent vectors, so overlapping supports
    are kept as genuine squares rather than merged as masks.
    """
    by_row: dict = {}
    for (i, j), e in outer.entries.items():
        by_row.setdefault(j, []).append((i, e))
    acc: dict = {}
    for (k, j), (s1, A) in inner.entries.items():
        for i, (s2, B) in by_row.get(k, ()):
            mono = tuple(sorted((Counter(vertices(A)) + Counter(vertices(B))).items()))
            key = (i, j, mono)
            acc[key] = acc.get(key, 0) + s1 * s2
    return not any(acc.values())


@dataclass(frozen=True)
class MinimalityVerdict:
    """Outcome of both minimality tests.

    On success ``private`` holds the smallest private vertex of each minimal
    non-face; on failure ``witness`` is the 1-based index of the first
    minimal non-face covered by the others and ``unit_entry`` the first
    unit entry ``(S, i)`` found in the differential (``w_S -> w_{S - i}``).
    """

    minimal: bool
    witness: int | None
    private: tuple
    unit_entry: tuple | None
    by_criterion: bool
    by_unit_scan: bool

    @property
    def agree(self) -> bool:
        return self.by_criterion == self.by_unit_scan


def unit_entry_scan(mnfs: Sequence[int]) -> tuple | None:
    """First ``(S, i)`` with a unit entry of the Taylor differential, scanning every degree.

    Exhaustive over all ``2^r`` generators, so keep ``r`` small.
    """
    mnfs = list(mnfs)
    r = len(mnfs)
    if r > 20:
        raise ValueError("unit scan is exponential in r; refusing r > 20")
    for ell in range(1, r + 1):
        M = taylor_differential(mnfs, ell)
        for (i, j), (_, A) in sorted(M.entries.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            if A == 0:
                S, T = M.cols[j], M.rows[i]
                return S, (S ^ T).bit_length()
    return None


def is_minimal_taylor(mnfs: Sequence[int]) -> MinimalityVerdict:
    """Minimality of the Taylor resolution, decided twice.

    Once by the private-vertex criterion and once by looking for a unit
    entry anywhere in the differential.  Disagreement is a bug, not a
    verdict, and raises ``AssertionError``.
    """
    mnfs = list(mnfs)
    if mnfs:
        _check_antichain(mnfs)
    priv = private_vertices(mnfs)
    crit = not isinstance(priv, int)
    unit = unit_entry_scan(mnfs)
    scan = unit is None
    if crit != scan:
        raise AssertionError(f"minimality tests disagree on {[fmt(N) for N in mnfs]}")
    return MinimalityVerdict(crit, None if crit else priv, tuple(priv) if crit else (),
                             unit, crit, scan)


@dataclass
class TorTable:
    """Multigraded Betti numbers ``β_{ℓ,I}`` of ``𝕜[K]``; zero entries omitted."""

    entries: dict = field(default_factory=dict)

    def __getitem__(self, key) -> int:
        return self.entries.get(key, 0)

    def total(self) -> int:
        return sum(self.entries.values())

    def by_degree(self) -> dict:
        out: dict = {}
        for (ell, _), b in self.entries.items():
            out[ell] = out.get(ell, 0) + b
        return dict(sorted(out.items()))

    def zk_dims(self) -> dict:
        """Dimensions of ``H^n(Z_K)`` with ``n = 2|I| - ℓ``."""
        out: dict = {}
        for (ell, I), b in self.entries.items():
            n = 2 * popcount(I) - ell
            out[n] = out.get(n, 0) + b
        return dict(sorted(out.items()))

    def records(self) -> list:
        return [{"l": ell, "I": vertices(I), "beta": b}
                for (ell, I), b in sorted(self.entries.items(), key=lambda kv: (kv[0][0], lex_key(kv[0][1])))]

    def __eq__(self, other) -> bool:
        return isinstance(other, TorTable) and {k: v for k, v in self.entries.items() if v} == \
            {k: v for k, v in other.entries.items() if v}


def betti_from_taylor(mnfs: Sequence[int], ring: str = "Q") -> TorTable:
    """Tor of ``𝕜[K]`` as the homology of the Taylor complex tensored with ``𝕜``.

    Only unit entries survive the tensor product, and they connect
    generators of equal multidegree, so the complex splits into one small
    block per multidegree.
    """
    mnfs = list(mnfs)
    if mnfs:
        _check_antichain(mnfs)
    r = len(mnfs)
    U = multidegrees(mnfs)
    groups: dict = {}
    for S in range(1 << r):
        groups.setdefault(U[S], []).append(S)
    table = TorTable()
    for I, gens in groups.items():
        by_ell: dict = {}
        for S in sorted(gens):
            by_ell.setdefault(popcount(S), []).append(S)
        index = {ell: {S: k for k, S in enumerate(v)} for ell, v in by_ell.items()}
        d = {}
        for ell, cols in by_ell.items():
            tgt = index.get(ell - 1)
            if not tgt:
                continue
            M = IntMatrix.zeros(len(tgt), len(cols))
            for j, S in enumerate(cols):
                for k, i in enumerate(vertices(S)):
                    T = S & ~(1 << (i - 1))
                    if T in tgt:
                        M.rows[tgt[T]][j] = 1 if k % 2 == 0 else -1
            if M.nnz():
                d[ell] = M
        C = ChainComplex({ell: len(v) for ell, v in by_ell.items()}, d, -1)
        H = homology(C, ring, check=False)
        for ell, b in H.betti.items():
            if b:
                table.entries[(ell, I)] = b
    return table
