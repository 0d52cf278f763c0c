"""Bitset simplicial complexes and minimal non-face combinatorics.

Vertices are 1-based labels ``1..64``; a subset of vertices is stored as an
``int`` mask with vertex ``i`` on bit ``i - 1``.  A complex carries its ground
set explicitly so that ghost vertices (ground vertices that are not faces) and
full subcomplexes with their original labels are both representable.

>>> K = from_facets(4, [{1, 2}, {2, 3}, {3, 4}, {1, 4}])
>>> len(K.faces)
9
>>> [sorted(vertices(N)) for N in minimal_nonfaces(K)]
[[1, 3], [2, 4]]
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

MAX_VERTICES = 64

MaskLike = Union[int, Iterable[int]]


# -- masks -------------------------------------------------------------------

def mask(vs: MaskLike) -> int:
    """Mask of an iterable of 1-based labels; an ``int`` is taken as a mask."""
    if isinstance(vs, int):
        if vs < 0 or vs >> MAX_VERTICES:
            raise ValueError(f"mask {vs:#x} out of range")
        return vs
    out = 0
    for v in vs:
        if not isinstance(v, int) or v < 1 or v > MAX_VERTICES:
            raise ValueError(f"vertex label {v!r} out of range 1..{MAX_VERTICES}")
        out |= 1 << (v - 1)
    return out


def vertices(m: int) -> list[int]:
    """Sorted labels of the vertices in mask ``m``."""
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length())
        m ^= low
    return out


def popcount(m: int) -> int:
    return m.bit_count()


def full_mask(n: int) -> int:
    return (1 << n) - 1


def submasks(m: int) -> Iterator[int]:
    """All submasks of ``m`` including ``0`` and ``m``."""
    sub = m
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & m


def lex_key(m: int) -> tuple[int, ...]:
    return tuple(vertices(m))


def is_antichain(masks: Sequence[int]) -> bool:
    for i, a in enumerate(masks):
        for b in masks[i + 1:]:
            if a & b == a or a & b == b:
                return False
    return True


def minimal_elements(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal members, deduplicated, in lexicographic order."""
    ms = sorted(set(masks), key=popcount)
    out: list[int] = []
    for a in ms:
        if not any(b & a == b for b in out):
            out.append(a)
    return sorted(out, key=lex_key)


def fmt(m: int) -> str:
    return "{" + ",".join(map(str, vertices(m))) + "}"


# -- complexes ---------------------------------------------------------------

@dataclass(frozen=True)
class SimplicialComplex:
    """A downward-closed family of faces on an explicit ground set.

    ``faces`` always contains the empty face; the void complex is not
    representable.  Equality compares ground set and faces, i.e. labelled
    equality.
    """

    ground: int
    faces: frozenset

    def __post_init__(self):
        if self.ground >> MAX_VERTICES:
            raise ValueError("ground set exceeds 64 vertices")
        if 0 not in self.faces:
            raise ValueError("a complex must contain the empty face")
        for f in self.faces:
            if f & ~self.ground:
                raise ValueError(f"face {fmt(f)} leaves the ground set")

    @property
    def m(self) -> int:
        """Number of ground vertices."""
        return popcount(self.ground)

    @property
    def vertex_labels(self) -> list[int]:
        return vertices(self.ground)

    def __contains__(self, face: int) -> bool:
        return face in self.faces

    def __len__(self) -> int:
        return len(self.faces)

    @property
    def dimension(self) -> int:
        return max(popcount(f) for f in self.faces) - 1

    def facets(self) -> list[int]:
        fs = self.faces
        out = []
        for f in fs:
            if not any((f | b) in fs for b in _bits(self.ground & ~f)):
                out.append(f)
        return sorted(out, key=lex_key)

    def ghost_vertices(self) -> int:
        return sum(b for b in _bits(self.ground) if b not in self.faces)

    def faces_of_size(self, k: int) -> list[int]:
        return sorted((f for f in self.faces if popcount(f) == k), key=lex_key)

    def is_downward_closed(self) -> bool:
        return all((f ^ b) in self.faces for f in self.faces for b in _bits(f))

    def __repr__(self) -> str:
        return (f"SimplicialComplex(ground={fmt(self.ground)}, "
                f"facets=[{', '.join(fmt(f) for f in self.facets())}])")


def _bits(m: int) -> Iterator[int]:
    while m:
        low = m & -m
        yield low
        m ^= low


def from_facets(m: int, facets: Iterable[MaskLike], *, ground: int | None = None) -> SimplicialComplex:
    """Smallest complex on ``[m]`` (or on ``ground``) containing ``facets``."""
    g = full_mask(m) if ground is None else ground
    faces = {0}
    for f in facets:
        f = mask(f)
        if f & ~g:
            raise ValueError(f"facet {fmt(f)} has a vertex outside the ground set")
        if f in faces:
            continue
        faces.update(submasks(f))
    return SimplicialComplex(g, frozenset(faces))


def faces_avoiding(ground: int, mnfs: Sequence[int]) -> frozenset:
    """Faces of the complex on ``ground`` with minimal non-faces ``mnfs``.

    Depth-first over faces in increasing-vertex order, so the cost is
    proportional to the number of faces rather than ``2**|ground|``.
    """
    by_top: dict[int, list[int]] = {}
    for N in mnfs:
        by_top.setdefault(1 << (N.bit_length() - 1), []).append(N)
    verts = list(_bits(ground))
    faces = [0]
    stack = [(0, 0)]
    while stack:
        face, start = stack.pop()
        for idx in range(start, len(verts)):
            b = verts[idx]
            new = face | b
            # only non-faces whose largest vertex is b can newly appear
            if any(N & new == N for N in by_top.get(b, ())):
                continue
            faces.append(new)
            stack.append((new, idx + 1))
    return frozenset(faces)


def from_minimal_nonfaces(m: int, mnfs: Iterable[MaskLike], *, ground: int | None = None) -> SimplicialComplex:
    """The complex on ``[m]`` (or ``ground``) whose minimal non-faces are ``mnfs``."""
    g = full_mask(m) if ground is None else ground
    ms = [mask(N) for N in mnfs]
    if any(N == 0 for N in ms):
        raise ValueError("the empty set cannot be a minimal non-face")
    if any(N & ~g for N in ms):
        raise ValueError("minimal non-face leaves the ground set")
    if len(set(ms)) != len(ms) or not is_antichain(ms):
        raise ValueError("minimal non-faces must form an antichain")
    return SimplicialComplex(g, faces_avoiding(g, ms))


def minimal_nonfaces(K: SimplicialComplex) -> list[int]:
    """Non-faces all of whose codimension-one subsets are faces, sorted lexicographically."""
    fs = K.faces
    found = set()
    for f in fs:
        for b in _bits(K.ground & ~f):
            N = f | b
            if N in fs or N in found:
                continue
            if all((N ^ c) in fs for c in _bits(N)):
                found.add(N)
    return sorted(found, key=lex_key)


def full_subcomplex(K: SimplicialComplex, I: MaskLike) -> SimplicialComplex:
    """``K_I``: faces of ``K`` inside ``I``, keeping the original labels."""
    I = mask(I)
    if I & ~K.ground:
        raise ValueError("I must be a subset of the ground set")
    return SimplicialComplex(I, frozenset(f for f in K.faces if f & ~I == 0))


def compress_labels(K: SimplicialComplex) -> tuple[SimplicialComplex, list[int]]:
    """Relabel the ground set of ``K`` to ``1..n``.

    Returns the relabelled complex and ``labels`` with ``labels[k - 1]`` the
    original label of new vertex ``k``.
    """
    labels = K.vertex_labels
    pos = {1 << (v - 1): 1 << k for k, v in enumerate(labels)}

    def relabel(f: int) -> int:
        out = 0
        for b in _bits(f):
            out |= pos[b]
        return out

    return SimplicialComplex(full_mask(len(labels)), frozenset(map(relabel, K.faces))), labels


def relabel(K: SimplicialComplex, mapping: dict[int, int]) -> SimplicialComplex:
    """Apply a vertex relabelling ``old label -> new label`` (a bijection on the ground set)."""
    bitmap = {1 << (old - 1): 1 << (new - 1) for old, new in mapping.items()}

    def go(f: int) -> int:
        out = 0
        for b in _bits(f):
            out |= bitmap[b]
        return out

    return SimplicialComplex(go(K.ground), frozenset(map(go, K.faces)))


def link(K: SimplicialComplex, sigma: MaskLike) -> SimplicialComplex:
    """``lk_K(sigma)`` on the ground set ``ground - sigma``."""
    s = mask(sigma)
    if s not in K.faces:
        raise ValueError(f"{fmt(s)} is not a face")
    return SimplicialComplex(K.ground & ~s,
                             frozenset(f for f in K.faces if f & s == 0 and (f | s) in K.faces))


def deletion(K: SimplicialComplex, v: int) -> SimplicialComplex:
    """``dl_K(v)``: faces avoiding ``v``, on the ground set without ``v``."""
    b = mask([v])
    if not b & K.ground:
        raise ValueError(f"vertex {v} is not in the ground set")
    return SimplicialComplex(K.ground & ~b, frozenset(f for f in K.faces if not f & b))


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    if K.ground & L.ground:
        raise ValueError("join needs disjoint ground sets")
    return SimplicialComplex(K.ground | L.ground,
                             frozenset(a | b for a in K.faces for b in L.faces))


def simplex(S: MaskLike) -> SimplicialComplex:
    """The full simplex ``Δ^S``."""
    s = mask(S)
    return SimplicialComplex(s, frozenset(submasks(s)))


def boundary_simplex(S: MaskLike) -> SimplicialComplex:
    """``∂Δ^S``: all proper subsets of ``S``."""
    s = mask(S)
    return SimplicialComplex(s, frozenset(f for f in submasks(s) if f != s))


def point_complex(ground: int = 0) -> SimplicialComplex:
    """The complex ``{∅}`` on ``ground`` (every vertex a ghost)."""
    return SimplicialComplex(ground, frozenset({0}))


# -- sequences of subsets and K(N) -------------------------------------------

@dataclass(frozen=True)
class NonFaceSequence:
    """An ordered sequence ``(N_1, ..., N_r)`` of subsets of a ground set ``W``.

    Duplicates and empty entries are allowed.
    """

    ground: int
    entries: tuple

    def __post_init__(self):
        for N in self.entries:
            if N & ~self.ground:
                raise ValueError(f"entry {fmt(N)} is not a subset of W={fmt(self.ground)}")

    @classmethod
    def of(cls, W: MaskLike, entries: Iterable[MaskLike]) -> "NonFaceSequence":
        return cls(mask(W), tuple(mask(N) for N in entries))

    @property
    def r(self) -> int:
        return len(self.entries)

    def union(self) -> int:
        u = 0
        for N in self.entries:
            u |= N
        return u

    def covers(self) -> bool:
        return self.union() == self.ground

    def __repr__(self) -> str:
        return f"NonFaceSequence(W={fmt(self.ground)}, ({', '.join(map(fmt, self.entries))}))"


@dataclass(frozen=True)
class KN:
    """``K(N)`` together with the labelling used to build it.

    ``relabel`` maps each original vertex of ``W`` to its label in
    ``complex``; ``apex[i]`` is the label of the added vertex ``a_{i+1}``.
    """

    complex: SimplicialComplex
    relabel: dict
    apex: tuple

    @property
    def minimal_nonfaces(self) -> list[int]:
        return minimal_nonfaces(self.complex)


def kn_with_labels(seq: NonFaceSequence, apex: Sequence[int]) -> SimplicialComplex:
    """``K(N)`` on ``W ⊔ apex`` without relabelling ``W``.

    ``apex`` lists the label of ``a_i`` for each entry, disjoint from ``W``.
    """
    if len(apex) != seq.r:
        raise ValueError("need one apex vertex per entry")
    a = [mask([v]) for v in apex]
    A = sum(a)
    if popcount(A) != seq.r or A & seq.ground:
        raise ValueError("apex vertices must be distinct and outside W")
    tilde = [N | b for N, b in zip(seq.entries, a)]
    g = seq.ground | A
    return SimplicialComplex(g, faces_avoiding(g, tilde))


def build_KN(seq: NonFaceSequence) -> KN:
    """Build ``K(N)`` with ``W`` relabelled to ``1..|W|`` and ``a_i = |W| + i``."""
    w = vertices(seq.ground)
    r = seq.r
    if len(w) + r > MAX_VERTICES:
        raise ValueError(f"|W| + r = {len(w) + r} exceeds {MAX_VERTICES} vertices")
    ren = {v: k + 1 for k, v in enumerate(w)}
    entries = tuple(mask(ren[v] for v in vertices(N)) for N in seq.entries)
    apex = tuple(range(len(w) + 1, len(w) + r + 1))
    K = kn_with_labels(NonFaceSequence(full_mask(len(w)), entries), apex)
    return KN(K, ren, apex)


class NotMinimalTaylor(ValueError):
    """Raised when a construction needs a minimal Taylor resolution and the complex has none.

    ``index`` is the 1-based position of an offending minimal non-face.
    """

    def __init__(self, index: int, nonface: int):
        super().__init__(f"minimal non-face #{index} {fmt(nonface)} lies in the union of the others")
        self.index = index
        self.nonface = nonface


def private_vertices(mnfs: Sequence[int]) -> list[int] | int:
    """Smallest private vertex of each entry, or the 1-based index of the first entry without one."""
    out = []
    for i, N in enumerate(mnfs):
        others = 0
        for k, M in enumerate(mnfs):
            if k != i:
                others |= M
        priv = N & ~others
        if not priv:
            return i + 1
        out.append((priv & -priv).bit_length())
    return out


def recover_sequence(K: SimplicialComplex) -> tuple[NonFaceSequence, tuple]:
    """Write a minimal-Taylor complex as ``K(N)``.

    Returns ``(N, apex)`` with ``kn_with_labels(N, apex) == K``; ``apex[i]`` is
    the smallest vertex of ``N_i`` lying in no other minimal non-face.
    """
    mnfs = minimal_nonfaces(K)
    priv = private_vertices(mnfs)
    if isinstance(priv, int):
        raise NotMinimalTaylor(priv, mnfs[priv - 1])
    A = mask(priv)
    seq = NonFaceSequence(K.ground & ~A, tuple(N & ~mask([a]) for N, a in zip(mnfs, priv)))
    return seq, tuple(priv)


@dataclass(frozen=True)
class LinkCheck:
    """Predicted and directly computed link/deletion of a vertex of ``K(N)``."""

    sequence: NonFaceSequence
    apex_set: int
    predicted: SimplicialComplex
    expected: SimplicialComplex

    @property
    def agrees(self) -> bool:
        return self.predicted == self.expected


def _to_kn_labels(seq: NonFaceSequence, kn: KN, N: int) -> int:
    return mask(kn.relabel[v] for v in vertices(N))


def link_KN(seq: NonFaceSequence, w: int) -> LinkCheck:
    """``N_w = (N_i - w)`` over ``W - w``; ``lk_{K(N)}(w)`` should equal ``K(N_w)``."""
    b = mask([w])
    if not b & seq.ground:
        raise ValueError(f"{w} is not in W")
    Nw = NonFaceSequence(seq.ground & ~b, tuple(N & ~b for N in seq.entries))
    kn = build_KN(seq)
    wk = kn.relabel[w]
    expected = link(kn.complex, mask([wk]))
    shifted = NonFaceSequence(mask(kn.relabel[v] for v in vertices(Nw.ground)),
                              tuple(_to_kn_labels(seq, kn, N) for N in Nw.entries))
    predicted = kn_with_labels(shifted, kn.apex)
    return LinkCheck(Nw, 0, predicted, expected)


def deletion_KN(seq: NonFaceSequence, w: int) -> LinkCheck:
    """``N̂_w = (N_i : w ∉ N_i)`` and ``A_w = {a_i : w ∈ N_i}``.

    ``dl_{K(N)}(w)`` should equal ``K(N̂_w) * Δ^{A_w}``.  ``apex_set`` is
    ``A_w`` in the labels of ``build_KN(seq)``.
    """
    b = mask([w])
    if not b & seq.ground:
        raise ValueError(f"{w} is not in W")
    keep = [i for i, N in enumerate(seq.entries) if not N & b]
    Nhat = NonFaceSequence(seq.ground & ~b, tuple(seq.entries[i] for i in keep))
    kn = build_KN(seq)
    expected = deletion(kn.complex, kn.relabel[w])
    A = mask(kn.apex[i] for i, N in enumerate(seq.entries) if N & b)
    shifted = NonFaceSequence(mask(kn.relabel[v] for v in vertices(Nhat.ground)),
                              tuple(_to_kn_labels(seq, kn, N) for N in Nhat.entries))
    predicted = join(kn_with_labels(shifted, [kn.apex[i] for i in keep]), simplex(A))
    return LinkCheck(Nhat, A, predicted, expected)


def disjointify(seq: NonFaceSequence) -> NonFaceSequence:
    """``M_i = N_i - (N_1 ∪ ... ∪ N_{i-1})``."""
    seen = 0
    out = []
    for N in seq.entries:
        out.append(N & ~seen)
        seen |= N
    return NonFaceSequence(seq.ground, tuple(out))


# -- canonical forms ---------------------------------------------------------

def canonical_antichain(m: int, mnfs: Sequence[int]) -> tuple:
    """Lexicographically least relabelling of ``mnfs`` under permutations of ``[m]``."""
    from itertools import permutations

    best = None
    for perm in permutations(range(m)):
        img = []
        for N in mnfs:
            out = 0
            for v in vertices(N):
                out |= 1 << perm[v - 1]
            img.append(out)
        key = tuple(sorted(img))
        if best is None or key < best:
            best = key
    return best if best is not None else ()
