import random
from itertools import combinations

import pytest
from hypothesis import given

from golodlab.complex_core import (NonFaceSequence, NotMinimalTaylor, boundary_simplex, build_KN, canonical_antichain,
                                   compress_labels, deletion, deletion_KN, disjointify, from_facets,
                                   from_minimal_nonfaces, full_subcomplex, is_antichain, join, kn_with_labels, link,
                                   link_KN, mask,
                                   minimal_elements, minimal_nonfaces, point_complex, recover_sequence, simplex,
                                   submasks, vertices)
from golodlab.golod import antichains, random_antichain
from golodlab.taylor import is_minimal_taylor

from strategies import antichains as antichain_st, complexes, sequences


def brute_mnfs(K):
    """Scan every subset of the ground set: non-faces all of whose facets-by-one-vertex are faces."""
    out = []
    for N in range(1, 1 << K.m):
        if N & ~K.ground or N in K.faces:
            continue
        if all((N & ~(1 << (v - 1))) in K.faces for v in vertices(N)):
            out.append(N)
    return sorted(out, key=lambda s: vertices(s))


# -- construction examples ---------------------------------------------------

def test_full_simplex_has_eight_faces():
    K = from_facets(3, [[1, 2, 3]])
    assert len(K.faces) == 8
    assert minimal_nonfaces(K) == []


def test_two_points_boundary():
    K = from_facets(2, [[1], [2]])
    assert K.faces == frozenset({0, 1, 2})
    assert K == from_minimal_nonfaces(2, [[1, 2]])


def test_four_cycle_faces(four_cycle):
    assert len(four_cycle.faces) == 9
    assert minimal_nonfaces(four_cycle) == [mask([1, 3]), mask([2, 4])]
    assert from_minimal_nonfaces(4, [[1, 3], [2, 4]]) == four_cycle


def test_ghost_vertices():
    K = from_minimal_nonfaces(1, [[1]])
    assert K.faces == frozenset({0})
    assert K.ghost_vertices() == 1
    E = from_facets(2, [])
    assert minimal_nonfaces(E) == [mask([1]), mask([2])]


def test_from_facets_rejects_out_of_range():
    with pytest.raises(ValueError):
        from_facets(2, [[1, 3]])


def test_from_minimal_nonfaces_rejects_bad_input():
    with pytest.raises(ValueError):
        from_minimal_nonfaces(3, [[1, 2], [1, 2, 3]])
    with pytest.raises(ValueError):
        from_minimal_nonfaces(3, [0])


# -- subcomplexes, links, joins ----------------------------------------------

def test_full_subcomplex_examples(four_cycle):
    K13 = full_subcomplex(four_cycle, mask([1, 3]))
    assert K13 == boundary_simplex(mask([1, 3]))
    assert full_subcomplex(four_cycle, four_cycle.ground) == four_cycle
    assert full_subcomplex(four_cycle, 0).faces == frozenset({0})


def test_compress_labels_keeps_structure(four_cycle):
    K = full_subcomplex(four_cycle, mask([2, 4]))
    C, labels = compress_labels(K)
    assert labels == [2, 4]
    assert C == boundary_simplex(mask([1, 2]))


def test_link_deletion_join_examples(four_cycle):
    assert link(four_cycle, mask([1])).faces == frozenset({0, mask([2]), mask([4])})
    assert join(boundary_simplex(mask([1, 3])), boundary_simplex(mask([2, 4]))) == four_cycle
    assert deletion(simplex(mask([1, 2, 3])), 3) == simplex(mask([1, 2]))
    with pytest.raises(ValueError):
        link(four_cycle, mask([1, 3]))


# -- K(N) ----------------------------------------------------------------------

def test_build_KN_examples():
    kn = build_KN(NonFaceSequence.of([1], [[1]]))
    assert kn.minimal_nonfaces == [mask([1, 2])]
    assert kn.apex == (2,)

    kn = build_KN(NonFaceSequence.of([1], [[]]))
    assert kn.minimal_nonfaces == [mask([2])]
    assert kn.complex.ghost_vertices() == mask([2])
    assert kn.complex.facets() == [mask([1])]

    kn = build_KN(NonFaceSequence.of([1, 2], [[1, 2], [1]]))
    assert kn.minimal_nonfaces == [mask([1, 2, 3]), mask([1, 4])]


def test_build_KN_relabels_ground():
    kn = build_KN(NonFaceSequence.of([3, 5], [[5]]))
    assert kn.relabel == {3: 1, 5: 2}
    assert kn.minimal_nonfaces == [mask([2, 3])]


def test_build_KN_vertex_cap():
    with pytest.raises(ValueError):
        build_KN(NonFaceSequence.of(range(1, 61), [[1]] * 5))


def test_recover_sequence_examples(four_cycle):
    seq, apex = recover_sequence(from_minimal_nonfaces(2, [[1, 2]]))
    assert (seq.ground, seq.entries, apex) == (mask([2]), (mask([2]),), (1,))

    seq, apex = recover_sequence(simplex(mask([1, 2, 3])))
    assert seq.ground == mask([1, 2, 3]) and seq.entries == ()

    seq, apex = recover_sequence(four_cycle)
    assert seq.ground == mask([3, 4])
    assert seq.entries == (mask([3]), mask([4]))
    assert apex == (1, 2)


def test_recover_sequence_refuses_non_minimal():
    with pytest.raises(NotMinimalTaylor) as e:
        recover_sequence(from_minimal_nonfaces(3, [[1, 2], [2, 3], [1, 3]]))
    assert e.value.index == 1


def test_link_KN_examples():
    seq = NonFaceSequence.of([1, 2], [[1, 2], [1]])
    chk = link_KN(seq, 1)
    assert chk.sequence.ground == mask([2])
    assert chk.sequence.entries == (mask([2]), 0)
    assert chk.agrees

    chk = deletion_KN(seq, 2)
    assert chk.sequence.entries == (mask([1]),)
    assert chk.apex_set == mask([3])  # a_1 carries label |W| + 1 = 3
    assert chk.agrees


def test_link_KN_empty_sequence():
    seq = NonFaceSequence.of([1], [])
    assert link_KN(seq, 1).predicted.faces == frozenset({0})
    assert deletion_KN(seq, 1).agrees


def test_disjointify_examples():
    assert disjointify(NonFaceSequence.of([1, 2, 3], [[1, 2], [2, 3]])).entries == (mask([1, 2]), mask([3]))
    s = NonFaceSequence.of([1, 2, 3], [[1], [2, 3]])
    assert disjointify(s) == s
    assert disjointify(NonFaceSequence.of([1], [[1], [1]])).entries == (mask([1]), 0)


# -- properties ----------------------------------------------------------------

@pytest.mark.parametrize("m", range(0, 5))
def test_round_trip_exhaustive(m):
    for A in antichains(m):
        K = from_minimal_nonfaces(m, A)
        assert K.is_downward_closed()
        got = minimal_nonfaces(K)
        assert got == list(A)
        assert got == brute_mnfs(K)
        assert from_minimal_nonfaces(m, got) == K


def test_round_trip_random_up_to_seven(rng):
    for _ in range(200):
        m = rng.randint(1, 7)
        K = from_minimal_nonfaces(m, random_antichain(rng, m))
        mnfs = minimal_nonfaces(K)
        assert is_antichain(mnfs)
        assert mnfs == brute_mnfs(K)
        assert from_minimal_nonfaces(m, mnfs) == K


@given(complexes(max_m=6))
def test_link_mnfs_are_minimal_differences(K):
    mnfs = minimal_nonfaces(K)
    for sigma in sorted(K.faces)[:6]:
        L = link(K, sigma)
        assert minimal_nonfaces(L) == minimal_elements(N & ~sigma for N in mnfs)


@given(sequences())
def test_link_and_deletion_of_KN(seq):
    for w in vertices(seq.ground):
        assert link_KN(seq, w).agrees
        assert deletion_KN(seq, w).agrees


@given(sequences())
def test_disjointify_properties(seq):
    M = disjointify(seq)
    assert M.union() == seq.union()
    assert all(a & b == 0 for a, b in combinations(M.entries, 2))
    assert all(x & ~y == 0 for x, y in zip(M.entries, seq.entries))


@given(sequences(max_w=5, max_r=5))
def test_KN_is_minimal_taylor(seq):
    kn = build_KN(seq)
    assert is_minimal_taylor(kn.minimal_nonfaces).minimal


@given(antichain_st(max_m=6))
def test_recover_then_rebuild(m_mnfs):
    m, mnfs = m_mnfs
    if not is_minimal_taylor(mnfs).minimal:
        return
    K = from_minimal_nonfaces(m, mnfs)
    seq, apex = recover_sequence(K)
    assert kn_with_labels(seq, apex) == K


def test_canonical_antichain_is_permutation_invariant():
    rng = random.Random(3)
    for _ in range(50):
        A = random_antichain(rng, 4, r_max=4)
        perm = list(range(1, 5))
        rng.shuffle(perm)
        B = [mask(perm[v - 1] for v in vertices(N)) for N in A]
        assert canonical_antichain(4, A) == canonical_antichain(4, B)


def test_submasks_and_point_complex():
    assert sorted(submasks(mask([1, 3]))) == [0, 1, 4, 5]
    assert point_complex().faces == frozenset({0})
