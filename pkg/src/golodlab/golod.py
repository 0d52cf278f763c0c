"""Checking the Golod equivalences on complexes with a minimal Taylor resolution.

For such a complex the following are tested against one another:

* any two minimal non-faces intersect;
* all binary products in ``H^+(Z_K)`` vanish, over ℚ, 𝔽_2, 𝔽_3, 𝔽_5;
* ``H^*(Z_K; ℤ)`` is free, the cell-model and full-subcomplex Betti numbers
  match, and products vanish (the cohomological shadow of ``Z_K`` being a
  wedge of spheres).

A disagreement is reported as ``consistent = False``; it is never smoothed
over.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .complex_core import (NonFaceSequence, NotMinimalTaylor, SimplicialComplex, boundary_simplex, build_KN,
                           canonical_antichain, disjointify, full_mask, full_subcomplex, join, kn_with_labels,
                           lex_key, minimal_nonfaces, popcount, private_vertices, recover_sequence,
                           from_minimal_nonfaces, submasks, vertices)
from .homology import HomologySummary, is_homology_iso, reduced_homology, sphere_homology
from .taylor import is_minimal_taylor
from .zk_algebra import FIELD_RINGS, BettiDecomposition, hochster_table, products_trivial, zk_cohomology

PRODUCT_RINGS = FIELD_RINGS


def pairwise_intersecting(mnfs: Sequence[int]) -> tuple[bool, tuple | None]:
    """``(True, None)`` if every two entries meet, else ``(False, (i, j))`` 1-based, first in lex order."""
    for i, j in combinations(range(len(mnfs)), 2):
        if not mnfs[i] & mnfs[j]:
            return False, (i + 1, j + 1)
    return True, None


@dataclass(frozen=True)
class JoinObstruction:
    """Disjoint minimal non-faces whose full subcomplex is ``∂Δ^I * ∂Δ^J``."""

    I: int
    J: int
    certified: bool


def join_obstruction(K: SimplicialComplex) -> JoinObstruction | None:
    mnfs = minimal_nonfaces(K)
    priv = private_vertices(mnfs)
    if isinstance(priv, int):
        raise NotMinimalTaylor(priv, mnfs[priv - 1])
    ok, pair = pairwise_intersecting(mnfs)
    if ok:
        return None
    I, J = mnfs[pair[0] - 1], mnfs[pair[1] - 1]
    certified = full_subcomplex(K, I | J) == join(boundary_simplex(I), boundary_simplex(J))
    return JoinObstruction(I, J, certified)


@dataclass(frozen=True)
class WedgeSummand:
    """One free summand ``H̃^j(K_I)`` of rank ``multiplicity``; sphere of dimension ``j + |I| + 1``."""

    I: int
    degree: int
    multiplicity: int

    @property
    def sphere_dim(self) -> int:
        return self.degree + popcount(self.I) + 1


@dataclass(frozen=True)
class WedgePrediction:
    summands: tuple
    free: bool
    # None when K has no minimal Taylor resolution (no prediction made)
    matches_kn_prediction: bool | None

    def sphere_list(self) -> list:
        """Sorted ``[dimension, multiplicity]`` pairs."""
        acc: dict = {}
        for s in self.summands:
            acc[s.sphere_dim] = acc.get(s.sphere_dim, 0) + s.multiplicity
        return [[d, k] for d, k in sorted(acc.items())]


def predicted_full_subcomplex_homology(K: SimplicialComplex, I: int) -> HomologySummary:
    """Homology of ``K_I`` for a minimal-Taylor ``K``, read off from ``K_I = K(N)``.

    ``K_I`` has a sphere's homology ``S^{|W|-1}`` when the entries cover
    ``W``, and is acyclic otherwise.
    """
    seq, _ = recover_sequence(full_subcomplex(K, I))
    if seq.covers():
        return sphere_homology(popcount(seq.ground) - 1)
    return HomologySummary("Z", {}, {})


def wedge_prediction(K: SimplicialComplex, table: BettiDecomposition | None = None) -> WedgePrediction:
    """Sphere summands of ``Z_K`` from the integral cohomology of full subcomplexes."""
    table = table or hochster_table(K, "Z")
    summands = tuple(WedgeSummand(I, j, b) for I, j, b in table.contributions())
    free = not any(H.torsion for H in table.per_subset.values())
    mnfs = minimal_nonfaces(K)
    match = None
    if not isinstance(private_vertices(mnfs), int):
        match = True
        for I in submasks(K.ground):
            if I and predicted_full_subcomplex_homology(K, I) != reduced_homology(full_subcomplex(K, I)):
                match = False
                break
    return WedgePrediction(summands, free, match)


@dataclass
class TheoremReport:
    """Everything checked for one complex; see :func:`verify_theorem`."""

    m: int
    minimal_nonfaces: list
    minimal_taylor: bool
    minimal_taylor_witness: object
    cond2_pairwise: bool | None = None
    cond2_witness: tuple | None = None
    join_obstruction: JoinObstruction | None = None
    products: dict = field(default_factory=dict)
    product_witness: dict | None = None
    cohomology_free: bool | None = None
    additive_match: bool | None = None
    wedge_list: list = field(default_factory=list)
    wedge_certificate: bool | None = None
    consistent: bool = True
    definitive: bool = False
    problems: list = field(default_factory=list)

    @property
    def golod(self) -> bool | None:
        return self.cond2_pairwise if self.definitive else None

    def as_dict(self) -> dict:
        jo = self.join_obstruction
        return {
            "m": self.m,
            "minimal_non_faces": [vertices(N) for N in self.minimal_nonfaces],
            "minimal_taylor": self.minimal_taylor,
            "minimal_taylor_witness": self.minimal_taylor_witness,
            "definitive": self.definitive,
            "cond2_pairwise": self.cond2_pairwise,
            "cond2_witness": list(self.cond2_witness) if self.cond2_witness else None,
            "join_obstruction": None if jo is None else
            {"I": vertices(jo.I), "J": vertices(jo.J), "certified": jo.certified},
            "products_trivial": dict(self.products),
            "product_witness": self.product_witness,
            "cohomology_free": self.cohomology_free,
            "additive_match": self.additive_match,
            "wedge_list": self.wedge_list,
            "cohomological_wedge_certificate": self.wedge_certificate,
            "consistent": self.consistent,
            "problems": list(self.problems),
        }


def verify_theorem(K: SimplicialComplex, strict: bool = True, rings: Sequence[str] = PRODUCT_RINGS) -> TheoremReport:
    """Check the equivalent Golod conditions on ``K``.

    With ``strict`` a complex without a minimal Taylor resolution raises
    :class:`NotMinimalTaylor`; otherwise the report is filled in but marked
    non-definitive and is consistent by default.
    """
    mnfs = minimal_nonfaces(K)
    mt = is_minimal_taylor(mnfs)
    rep = TheoremReport(K.m, mnfs, mt.minimal, list(mt.private) if mt.minimal else mt.witness)
    if not mt.minimal and strict:
        raise NotMinimalTaylor(mt.witness, mnfs[mt.witness - 1])

    rep.cond2_pairwise, rep.cond2_witness = pairwise_intersecting(mnfs)
    for ring in rings:
        v = products_trivial(K, ring)
        rep.products[ring] = v.trivial
        if not v.trivial and rep.product_witness is None:
            rep.product_witness = {"ring": ring, **v.witness.as_dict()}
    products_all = all(rep.products.values())
    rep.products["Z"] = products_all

    zk = zk_cohomology(K, "Z")
    hz = hochster_table(K, "Z")
    rep.cohomology_free = zk.is_free()
    rep.additive_match = (zk.dims() == hz.dims() and zk.torsion() == hz.torsion()
                          and zk_cohomology(K, "Q").dims() == hochster_table(K, "Q").dims())
    wp = wedge_prediction(K, hz)
    rep.wedge_list = wp.sphere_list()
    rep.wedge_certificate = rep.cohomology_free and rep.additive_match and products_all

    if not mt.minimal:
        return rep
    rep.definitive = True
    if wp.matches_kn_prediction is False:
        rep.problems.append("full-subcomplex homology differs from the K(N) prediction")
    if not rep.additive_match:
        rep.problems.append("cell-model Betti numbers differ from the full-subcomplex sum")
    if rep.cond2_pairwise:
        if not products_all:
            rep.problems.append("pairwise-intersecting but a product is nonzero")
        if not rep.wedge_certificate:
            rep.problems.append("pairwise-intersecting but no wedge certificate")
    else:
        rep.join_obstruction = join_obstruction(K)
        if not rep.join_obstruction.certified:
            rep.problems.append("disjoint minimal non-faces without a join full subcomplex")
        for ring in rings:
            if rep.products[ring]:
                rep.problems.append(f"disjoint minimal non-faces but products vanish over {ring}")
        if rep.wedge_certificate:
            rep.problems.append("disjoint minimal non-faces but a wedge certificate was issued")
    rep.consistent = not rep.problems
    return rep


# -- Prop: homotopy type of K(N) ---------------------------------------------

@dataclass
class KNHomotopyReport:
    sequence: NonFaceSequence
    covers: bool
    homology: HomologySummary
    expected: HomologySummary
    disjointified: NonFaceSequence
    inclusion_checked: bool
    inclusion_iso: bool | None

    @property
    def ok(self) -> bool:
        return self.homology == self.expected and self.inclusion_iso is not False

    def as_dict(self) -> dict:
        return {
            "W": popcount(self.sequence.ground),
            "covers": self.covers,
            "homology": {str(n): {"betti": b, "torsion": list(t)} for n, (b, t) in self.homology.nonzero().items()},
            "expected_sphere": popcount(self.sequence.ground) - 1 if self.covers else None,
            "disjointified": [vertices(M) for M in self.disjointified.entries],
            "inclusion_checked": self.inclusion_checked,
            "inclusion_iso": self.inclusion_iso,
            "ok": self.ok,
        }


def verify_KN_homotopy(seq: NonFaceSequence) -> KNHomotopyReport:
    """Integral homology of ``K(N)`` against ``S^{|W|-1}`` or a point, plus ``K(M) ⊆ K(N)``.

    ``M`` is the disjointified sequence; when it still covers ``W`` the
    inclusion ``K(M) ⊆ K(N)`` (same apex labels) must be a homology
    isomorphism, checked through the mapping cone.
    """
    kn = build_KN(seq)
    H = reduced_homology(kn.complex)
    covers = seq.covers()
    expected = sphere_homology(popcount(seq.ground) - 1) if covers else HomologySummary("Z", {}, {})
    M = disjointify(seq)
    iso = None
    checked = M.covers()
    if checked:
        ren = kn.relabel
        shifted = NonFaceSequence(full_mask(len(ren)),
                                  tuple(sum(1 << (ren[v] - 1) for v in vertices(x)) for x in M.entries))
        KM = kn_with_labels(shifted, kn.apex)
        iso = is_homology_iso(KM, kn.complex).is_iso
    return KNHomotopyReport(seq, covers, H, expected, M, checked, iso)


# -- instance families -------------------------------------------------------

def antichains(m: int) -> Iterator[tuple]:
    """Every antichain of non-empty subsets of ``[m]``, as sorted tuples of masks."""
    subsets = sorted(range(1, 1 << m), key=lambda s: (popcount(s), s))

    def extend(start: int, chosen: list):
        yield tuple(sorted(chosen, key=lex_key))
        for k in range(start, len(subsets)):
            s = subsets[k]
            # later subsets are never smaller, so only "s contains a chosen set" can clash
            if any(c & s == c for c in chosen):
                continue
            chosen.append(s)
            yield from extend(k + 1, chosen)
            chosen.pop()

    yield from extend(0, [])


def random_antichain(rng: random.Random, m: int, r_max: int = 6, size_weights: Sequence[float] | None = None) -> tuple:
    """Draw ``r ≤ r_max`` random subsets and keep the inclusion-minimal ones."""
    r = rng.randint(0, r_max)
    weights = size_weights or [1.0 / k for k in range(1, m + 1)]
    picks = set()
    for _ in range(r):
        k = rng.choices(range(1, m + 1), weights=weights[:m])[0]
        picks.add(sum(1 << (v - 1) for v in rng.sample(range(1, m + 1), k)))
    out = [s for s in picks if not any(t != s and t & s == t for t in picks)]
    return tuple(sorted(out, key=lex_key))


def random_sequence(rng: random.Random, w_max: int = 6, r_max: int = 5) -> NonFaceSequence:
    """A random ``N`` over ``W = [w]`` with empty and repeated entries likely."""
    w = rng.randint(0, w_max)
    r = rng.randint(0, r_max)
    entries = []
    for _ in range(r):
        roll = rng.random()
        if roll < 0.15:
            entries.append(0)
        elif roll < 0.3 and entries:
            entries.append(rng.choice(entries))
        else:
            entries.append(sum(1 << v for v in range(w) if rng.random() < 0.5))
    return NonFaceSequence(full_mask(w), tuple(entries))


def enumerate_instances(m: int, mode: str = "exhaustive", filter: str = "all", seed: int = 0,
                        count: int = 100, dedupe: bool = False, r_max: int = 6,
                        min_m: int = 1) -> Iterator[SimplicialComplex]:
    """Stream complexes on ``[m]`` given by antichains of minimal non-faces.

    ``exhaustive`` walks every antichain (``m ≤ 5``); ``random`` draws
    ``count`` instances with vertex count uniform in ``min_m..m`` from a seeded
    generator.  ``filter="minimal-taylor"`` keeps complexes with a minimal
    Taylor resolution (rejection sampling in random mode).
    """
    if mode not in ("exhaustive", "random"):
        raise ValueError(f"unknown mode {mode!r}")
    if filter not in ("all", "minimal-taylor"):
        raise ValueError(f"unknown filter {filter!r}")

    def keep(mnfs) -> bool:
        return filter == "all" or not isinstance(private_vertices(mnfs), int)

    if mode == "exhaustive":
        if not 0 <= m <= 5:
            raise ValueError("exhaustive enumeration supports m ≤ 5")
        seen = set()
        for A in antichains(m):
            if not keep(A):
                continue
            if dedupe:
                key = canonical_antichain(m, A)
                if key in seen:
                    continue
                seen.add(key)
            yield from_minimal_nonfaces(m, A)
        return

    if not 1 <= min_m <= m:
        raise ValueError("random mode needs 1 ≤ min_m ≤ m")
    rng = random.Random(seed)
    made = 0
    while made < count:
        mm = rng.randint(min_m, m)
        A = random_antichain(rng, mm, r_max)
        if keep(A):
            made += 1
            yield from_minimal_nonfaces(mm, A)
