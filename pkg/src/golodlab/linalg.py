"""Exact linear algebra over ℤ, ℚ and prime fields.

Matrices are sparse: :class:`IntMatrix` keeps one ``{column: value}`` dict per
row with arbitrary-precision ``int`` entries.  Everything here is exact;
nothing goes through floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


@dataclass
class IntMatrix:
    nrows: int
    ncols: int
    rows: list = field(default_factory=list)

    def __post_init__(self):
        if not self.rows:
            self.rows = [{} for _ in range(self.nrows)]
        if len(self.rows) != self.nrows:
            raise ValueError("row count does not match nrows")
        for r in self.rows:
            for c in r:
                if not 0 <= c < self.ncols:
                    raise ValueError(f"column index {c} out of range")

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls(nrows, ncols, [{} for _ in range(nrows)])

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]], ncols: int | None = None) -> "IntMatrix":
        n = len(dense[0]) if dense else (ncols or 0)
        rows = [{j: int(v) for j, v in enumerate(row) if v} for row in dense]
        return cls(len(dense), n, rows)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                out[i][j] = v
        return out

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i].get(j, 0)

    def __setitem__(self, ij, v):
        i, j = ij
        if v:
            self.rows[i][j] = v
        else:
            self.rows[i].pop(j, None)

    def transpose(self) -> "IntMatrix":
        t = IntMatrix.zeros(self.ncols, self.nrows)
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                t.rows[j][i] = v
        return t

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = IntMatrix.zeros(self.nrows, other.ncols)
        for i, r in enumerate(self.rows):
            acc: dict = {}
            for k, a in r.items():
                for j, b in other.rows[k].items():
                    acc[j] = acc.get(j, 0) + a * b
            out.rows[i] = {j: v for j, v in acc.items() if v}
        return out

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def is_zero(self) -> bool:
        return not any(self.rows)

    def nnz(self) -> int:
        return sum(map(len, self.rows))

    def permuted(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "IntMatrix":
        """Matrix with ``out[row_perm[i], col_perm[j]] = self[i, j]``."""
        out = IntMatrix.zeros(self.nrows, self.ncols)
        for i, r in enumerate(self.rows):
            out.rows[row_perm[i]] = {col_perm[j]: v for j, v in r.items()}
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, IntMatrix) and self.shape == other.shape
                and all(a == b for a, b in zip(self.rows, other.rows)))


# -- Smith normal form -------------------------------------------------------

@dataclass(frozen=True)
class SmithForm:
    """Nonzero diagonal of the Smith normal form, ``d_1 | d_2 | ...``."""

    factors: tuple

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def torsion(self) -> tuple:
        return tuple(d for d in self.factors if d > 1)

    def rank_mod(self, p: int) -> int:
        return sum(1 for d in self.factors if d % p)


def _invariant_factors(diag: Iterable[int]) -> tuple:
    """Turn an arbitrary nonzero diagonal into its divisibility chain."""
    ds = sorted(abs(d) for d in diag if d)
    if all(d == 1 for d in ds):
        return tuple(ds)
    # (a, b) -> (gcd, lcm) until every entry divides the next
    n = len(ds)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(i + 1, n):
                a, b = ds[i], ds[j]
                if b % a:
                    g = gcd(a, b)
                    ds[i], ds[j] = g, a // g * b
                    changed = True
        ds.sort()
    return tuple(ds)


def smith_normal_form(A: IntMatrix) -> SmithForm:
    """Invariant factors of ``A``.

    Sparse elimination that always pivots on an entry of least absolute
    value, taking the sparsest row among ties.  Unit pivots are eliminated
    directly; a larger pivot is first used to reduce its row and column
    by Euclidean steps until it divides both.
    """
    rows = {i: dict(r) for i, r in enumerate(A.rows) if r}
    cols: dict = {}
    for i, r in rows.items():
        for j in r:
            cols.setdefault(j, set()).add(i)
    diag = []

    def row_axpy(dst: int, src: int, q: int):
        # rows[dst] -= q * rows[src]
        rd = rows[dst]
        for j, v in rows[src].items():
            nv = rd.get(j, 0) - q * v
            if nv:
                if j not in rd:
                    cols[j].add(dst)
                rd[j] = nv
            else:
                if j in rd:
                    del rd[j]
                    cols[j].discard(dst)

    def col_axpy(dst: int, src: int, q: int):
        # column dst -= q * column src
        for i in list(cols[src]):
            r = rows[i]
            nv = r.get(dst, 0) - q * r[src]
            if nv:
                if dst not in r:
                    cols.setdefault(dst, set()).add(i)
                r[dst] = nv
            else:
                if dst in r:
                    del r[dst]
                    cols[dst].discard(i)

    def drop(i: int, j: int):
        for c in rows[i]:
            cols[c].discard(i)
        del rows[i]
        for k in list(cols.get(j, ())):
            rows[k].pop(j, None)
        cols.pop(j, None)

    while True:
        for i in [i for i, r in rows.items() if not r]:
            del rows[i]
        if not rows:
            break
        best = None
        for i, r in rows.items():
            for j, v in r.items():
                key = (abs(v), len(r) + len(cols[j]))
                if best is None or key < best[0]:
                    best = (key, i, j)
            if best[0][0] == 1 and best[0][1] <= 2:
                break
        _, i, j = best
        piv = rows[i][j]
        if abs(piv) == 1:
            for k in list(cols[j]):
                if k != i:
                    row_axpy(k, i, rows[k][j] * piv)
            diag.append(1)
            drop(i, j)
            continue
        clean = True
        for k in list(cols[j]):
            if k != i:
                q = rows[k][j] // piv
                row_axpy(k, i, q)
                if j in rows[k]:
                    clean = False
        if not clean:
            continue
        for c in [c for c in rows[i] if c != j]:
            q = rows[i][c] // piv
            col_axpy(c, j, q)
            if c in rows[i]:
                clean = False
        if not clean:
            continue
        diag.append(piv)
        drop(i, j)
    return SmithForm(_invariant_factors(diag))


# -- ranks over prime fields -------------------------------------------------

def rank_mod_p(A: IntMatrix, p: int) -> int:
    """Rank over 𝔽_p by sparse Gaussian elimination on reduced rows."""
    if p == 2:
        return _rank_f2(A)
    pivots: dict = {}  # leading column -> normalised row (leading entry 1)
    rank = 0
    for r in A.rows:
        row = {j: v % p for j, v in r.items() if v % p}
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                inv = pow(row[lead], -1, p)
                pivots[lead] = {j: v * inv % p for j, v in row.items()}
                rank += 1
                break
            f = row[lead]
            for j, v in prow.items():
                nv = (row.get(j, 0) - f * v) % p
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
    return rank


def _rank_f2(A: IntMatrix) -> int:
    pivots: dict = {}
    rank = 0
    for r in A.rows:
        x = 0
        for j, v in r.items():
            if v & 1:
                x |= 1 << j
        while x:
            lead = x & -x
            y = pivots.get(lead)
            if y is None:
                pivots[lead] = x
                rank += 1
                break
            x ^= y
    return rank


def rank(A: IntMatrix, p: int = 0) -> int:
    """Rank over ℚ (``p == 0``) or over 𝔽_p."""
    if p:
        return rank_mod_p(A, p)
    return smith_normal_form(A).rank


# -- dense linear algebra over a field ---------------------------------------

@dataclass(frozen=True)
class Field:
    """ℚ when ``p == 0``, otherwise 𝔽_p.  Elements are ``Fraction`` or ``int`` mod p."""

    p: int

    def coerce(self, x):
        if self.p:
            if isinstance(x, Fraction):
                return x.numerator * pow(x.denominator, -1, self.p) % self.p
            return int(x) % self.p
        return Fraction(x)

    def inv(self, x):
        return pow(x, -1, self.p) if self.p else 1 / x

    def __str__(self) -> str:
        return f"F{self.p}" if self.p else "Q"


def rref(rows: Sequence[Sequence], ncols: int, F: Field) -> tuple[list[list], list[int]]:
    """Reduced row echelon form of a dense matrix; returns ``(nonzero rows, pivot columns)``."""
    M = [[F.coerce(x) for x in r] for r in rows]
    p = F.p
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = F.inv(M[r][c])
        M[r] = [x * inv % p for x in M[r]] if p else [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                if p:
                    M[i] = [(a - f * b) % p for a, b in zip(M[i], M[r])]
                else:
                    M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int, F: Field) -> list[list]:
    """Basis of ``{x : A x = 0}``, one vector per free column in increasing order."""
    R, pivots = rref(rows, ncols, F)
    pset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pset:
            continue
        v = [F.coerce(0)] * ncols
        v[free] = F.coerce(1)
        for row, pc in zip(R, pivots):
            v[pc] = (-row[free]) % F.p if F.p else -row[free]
        basis.append(v)
    return basis


def solve(rows: Sequence[Sequence], ncols: int, b: Sequence, F: Field) -> list | None:
    """One solution ``x`` of ``A x = b`` (free variables zero), or ``None``."""
    aug = [list(r) + [bi] for r, bi in zip(rows, b)]
    R, pivots = rref(aug, ncols + 1, F)
    if pivots and pivots[-1] == ncols:
        return None
    x = [F.coerce(0)] * ncols
    for row, pc in zip(R, pivots):
        x[pc] = row[ncols]
    return x


# -- integer lattices --------------------------------------------------------

def integer_row_echelon(vectors: Sequence[Sequence[int]], extra: Sequence[Sequence[int]] | None = None):
    """Row-echelon form over ℤ by unimodular row operations.

    ``extra`` rows, if given, receive the same operations (they track the
    transform).  Returns ``(echelon rows, pivot columns, extra rows)`` with
    zero rows moved to the end of both lists.
    """
    M = [list(v) for v in vectors]
    X = [list(v) for v in extra] if extra is not None else [[] for _ in M]
    ncols = len(M[0]) if M else 0
    pivots = []
    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, len(M)) if M[i][c]]
            if not nz:
                break
            k = min(nz, key=lambda i: abs(M[i][c]))
            M[r], M[k] = M[k], M[r]
            X[r], X[k] = X[k], X[r]
            done = True
            for i in range(r + 1, len(M)):
                if M[i][c]:
                    q = M[i][c] // M[r][c]
                    M[i] = [a - q * b for a, b in zip(M[i], M[r])]
                    X[i] = [a - q * b for a, b in zip(X[i], X[r])]
                    if M[i][c]:
                        done = False
            if done:
                break
        if r < len(M) and M[r][c]:
            pivots.append(c)
            r += 1
    return M, pivots, X


def integer_kernel(dense: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """A ℤ-basis of ``{x ∈ ℤ^n : A x = 0}``."""
    n = ncols
    cols = [[dense[i][j] for i in range(len(dense))] for j in range(n)]
    ident = [[int(i == j) for i in range(n)] for j in range(n)]
    if not dense:
        return ident
    E, piv, X = integer_row_echelon(cols, ident)
    return [X[i] for i in range(len(piv), n)]


class Lattice:
    """The ℤ-span of a list of integer vectors, kept in echelon form."""

    def __init__(self, vectors: Sequence[Sequence[int]], dim: int):
        self.dim = dim
        vs = [list(v) for v in vectors if any(v)]
        E, piv, _ = integer_row_echelon(vs) if vs else ([], [], [])
        self.basis = E[:len(piv)]
        self.pivots = piv

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __contains__(self, v: Sequence[int]) -> bool:
        b = list(v)
        for row, c in zip(self.basis, self.pivots):
            if b[c] % row[c]:
                return False
            q = b[c] // row[c]
            if q:
                b = [x - q * y for x, y in zip(b, row)]
        return not any(b)
