"""Reference computations that do not reuse any of the library's algorithms.

Each one is deliberately naive: determinants by fraction-free Bareiss
elimination, invariant factors from gcds of minors, homology by rank
counting over dense lists, random chain complexes with prescribed torsion.
Library types appear only as containers for randomly generated inputs.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd

from golodlab.homology import ChainComplex
from golodlab.linalg import IntMatrix
from golodlab.zk_algebra import Cochain, cell_degree, koszul_cells


def det(M):
    """Exact integer determinant (Bareiss)."""
    A = [list(r) for r in M]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def determinant_divisors(M):
    """``d_k`` = gcd of all k×k minors, for k = 1 .. rank."""
    rows, cols = len(M), len(M[0]) if M else 0
    out = []
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for R in combinations(range(rows), k):
            for C in combinations(range(cols), k):
                g = gcd(g, det([[M[i][j] for j in C] for i in R]))
        if g == 0:
            break
        out.append(g)
    return out


def invariant_factors_by_minors(M):
    d = determinant_divisors(M)
    return [d[0]] + [d[k] // d[k - 1] for k in range(1, len(d))] if d else []


def rank_mod(M, p):
    """Rank over 𝔽_p (p prime) or ℚ (p = 0) of a dense integer matrix, by plain Gaussian elimination."""
    A = [[Fraction(x) if not p else x % p for x in r] for r in M]
    r = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(r + 1, len(A)):
            if A[i][c]:
                if p:
                    f = A[i][c] * pow(A[r][c], -1, p)
                    A[i] = [(a - f * b) % p for a, b in zip(A[i], A[r])]
                else:
                    f = A[i][c] / A[r][c]
                    A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        r += 1
    return r


def random_matrix(rng, max_size=6, lo=-4, hi=4, density=0.6):
    n, m = rng.randint(1, max_size), rng.randint(1, max_size)
    return [[rng.randint(lo, hi) if rng.random() < density else 0 for _ in range(m)] for _ in range(n)]


def _unimodular(rng, n, steps=None):
    """A random unimodular matrix and its inverse, as products of elementary operations."""
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps or 3 * n):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        q = rng.randint(-2, 2)
        # U <- E U with E = I + q e_ij ; V <- V E^{-1}
        U[i] = [a + q * b for a, b in zip(U[i], U[j])]
        for r in V:
            r[j] -= q * r[i]
    return U, V


def _mul(A, B):
    return [[sum(a * b for a, b in zip(r, c)) for c in zip(*B)] for r in A]


def random_chain_complex(rng):
    """A three-term chain complex ``C_2 -> C_1 -> C_0`` with planted torsion in ``H_1``.

    Returns the complex and the expected ``{n: (betti, torsion)}``.
    """
    torsion = sorted(rng.choice([2, 2, 3, 4, 5, 6, 9, 10]) for _ in range(rng.randint(0, 2)))
    # make a divisibility chain so the planted factors are the invariant factors
    chain = []
    for t in torsion:
        chain.append(t if not chain else chain[-1] * t)
    free_b = rng.randint(0, 2)     # planted boundaries with coefficient 1
    free_h1 = rng.randint(0, 2)    # free part of H_1
    image1 = rng.randint(0, 2)     # rank of d_1
    n1 = len(chain) + free_b + free_h1 + image1
    extra2 = rng.randint(0, 2)     # kernel of d_2 -> H_2
    n2 = len(chain) + free_b + extra2
    n0 = image1 + rng.randint(0, 2)
    # in the adapted basis: d_2 = diag(1.., chain..) into the first coordinates, d_1 maps the last image1 coords
    D2 = [[0] * n2 for _ in range(n1)]
    for k, t in enumerate([1] * free_b + chain):
        D2[k][k] = t
    D1 = [[0] * n1 for _ in range(n0)]
    for k in range(image1):
        D1[k][n1 - image1 + k] = 1
    U, Uinv = _unimodular(rng, n1)
    P2, _ = _unimodular(rng, n2)
    P0, _ = _unimodular(rng, n0)
    d2 = _mul(_mul(U, D2), P2) if n1 and n2 else [[0] * n2 for _ in range(n1)]
    d1 = _mul(_mul(P0, D1), Uinv) if n0 and n1 else [[0] * n1 for _ in range(n0)]
    dims = {0: n0, 1: n1, 2: n2}
    d = {}
    if n0 and n1:
        d[1] = IntMatrix.from_dense(d1, n1)
    if n1 and n2:
        d[2] = IntMatrix.from_dense(d2, n2)
    expected = {0: (n0 - image1, ()), 1: (free_h1, tuple(chain)), 2: (extra2, ())}
    return ChainComplex(dims, d, -1), expected


def random_complex_facets(rng, m, k_max=4, n_facets=None):
    n_facets = n_facets or rng.randint(1, 2 * m)
    return [rng.sample(range(1, m + 1), rng.randint(1, min(k_max, m))) for _ in range(n_facets)]


RP2_FACETS = [[1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
              [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6]]


def random_cochain(rng, K, ring, degree=None, max_terms=4):
    """A random homogeneous cochain on the cell model of ``Z_K``."""
    cells = koszul_cells(K)
    if degree is None:
        degree = cell_degree(*rng.choice(cells))
    pool = [c for c in cells if cell_degree(*c) == degree]
    while True:
        picks = rng.sample(pool, min(len(pool), rng.randint(1, max_terms)))
        x = Cochain(K, ring, {c: rng.choice([-2, -1, 1, 2, 3]) for c in picks})
        if not x.is_zero():  # coefficients may vanish mod p
            return x
