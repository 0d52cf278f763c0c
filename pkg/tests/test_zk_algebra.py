import random

import pytest

from golodlab.complex_core import (boundary_simplex, from_facets, from_minimal_nonfaces, join, mask, minimal_elements,
                                   minimal_nonfaces, relabel, simplex)
from golodlab.homology import homology
from golodlab.taylor import betti_from_taylor
from golodlab.zk_algebra import (FIELD_RINGS, Cochain, NotACocycle, coboundary, cohomology_classes, cup_product,
                                 epsilon, hochster_table, is_coboundary, koszul_cochain_complex, poincare_product,
                                 products_trivial, real_cubical_complex, real_hochster_dims,
                                 real_zk_reduced_homology, shuffle_sign, sphere_dims, unreduced, zk_cohomology)

from oracles import RP2_FACETS, random_cochain

M = mask


def test_sign_helpers():
    assert epsilon(M([3]), M([1, 2, 3])) == 1
    assert epsilon(M([2]), M([1, 2, 3])) == -1
    assert shuffle_sign(M([2]), M([1])) == -1
    assert shuffle_sign(M([1]), M([2])) == 1
    assert shuffle_sign(M([2, 3]), M([1])) == 1


# -- additive structure --------------------------------------------------------

def test_ghost_point_agrees_with_full_subcomplex_sum():
    K = from_minimal_nonfaces(1, [[1]])
    for ring in ("Q", "F2", "Z"):
        assert zk_cohomology(K, ring).dims() == hochster_table(K, ring).dims()
    # Z_K is the circle here: the cell (∅, {1}) is a cocycle that is not a coboundary
    assert zk_cohomology(K, "Q").dims() == {0: 1, 1: 1}


def test_two_vertex_boundary_is_three_sphere():
    K = boundary_simplex(M([1, 2]))
    assert zk_cohomology(K).dims() == {0: 1, 3: 1}


@pytest.mark.parametrize("m", [1, 2, 3])
def test_full_simplex_contractible(m):
    assert zk_cohomology(simplex((1 << m) - 1), "Z").dims() == {0: 1}


def test_hochster_examples(four_cycle):
    two_points = from_facets(2, [[1], [2]])
    assert hochster_table(two_points, "Q").dims() == {0: 1, 3: 1}
    assert hochster_table(four_cycle, "Q").dims() == {0: 1, 3: 2, 6: 1}
    assert hochster_table(simplex(M([1, 2, 3])), "Q").dims() == {0: 1}


def test_koszul_dd_zero_random():
    rng = random.Random(1)
    for _ in range(40):
        m = rng.randint(1, 6)
        K = from_facets(m, [rng.sample(range(1, m + 1), rng.randint(1, m)) for _ in range(rng.randint(1, m))])
        koszul_cochain_complex(K).check()


def test_blocks_reassemble_full_complex(four_cycle):
    whole = homology(koszul_cochain_complex(four_cycle), "Q")
    assert whole.dims() == zk_cohomology(four_cycle, "Q").dims()


def test_torsion_appears_for_projective_plane():
    K = from_facets(6, RP2_FACETS)
    H = hochster_table(K, "Z")
    # H̃^2(RP^2) = Z/2 for I = [6] sits at n = 2 + 6 + 1
    assert H.torsion() == {9: (2,)}
    assert zk_cohomology(K, "Z").torsion() == {9: (2,)}


# -- products ------------------------------------------------------------------

def test_unit_is_neutral():
    rng = random.Random(4)
    K = boundary_simplex(M([1, 2, 3]))
    for _ in range(20):
        x = random_cochain(rng, K, "Q")
        assert Cochain.unit(K, "Q") * x == x
        assert x * Cochain.unit(K, "Q") == x


def test_overlapping_multidegrees_multiply_to_zero(four_cycle):
    x = Cochain.cell(four_cycle, "Q", 0, M([1, 3]))
    y = Cochain.cell(four_cycle, "Q", 0, M([1]))
    assert (x * y).is_zero()


def test_ring_mismatch_rejected(four_cycle):
    with pytest.raises(ValueError):
        Cochain.unit(four_cycle, "Q") * Cochain.unit(four_cycle, "F2")


def test_four_cycle_generators_multiply_nontrivially(four_cycle):
    for ring in FIELD_RINGS:
        classes = cohomology_classes(four_cycle, ring)
        assert [c.degree for c in classes[3]] == [3, 3]
        a, b = classes[3]
        assert {a.multidegree, b.multidegree} == {M([1, 3]), M([2, 4])}
        z = a.representative * b.representative
        assert z.degree == 6
        assert is_coboundary(z) == (False, None)
        v = products_trivial(four_cycle, ring)
        assert not v.trivial
        assert v.witness.degrees == (3, 3)


def test_products_trivial_examples():
    assert products_trivial(from_facets(2, [[1], [2]]), "Q").trivial
    assert products_trivial(simplex(M([1, 2, 3])), "F2").trivial
    assert products_trivial(from_minimal_nonfaces(4, [[1, 2, 3], [1, 4]]), "F3").trivial


def test_cohomology_classes_examples():
    assert list(cohomology_classes(simplex(M([1, 2])), "Q")) == [0]
    cls = cohomology_classes(boundary_simplex(M([1, 2])), "Q")
    assert sorted(cls) == [0, 3]
    assert cls[3][0].multidegree == M([1, 2])


def test_coboundaries_are_detected():
    rng = random.Random(8)
    K = from_minimal_nonfaces(4, [[1, 2], [3, 4]])
    for ring in ("Q", "F3"):
        for _ in range(20):
            w = random_cochain(rng, K, ring)
            z = coboundary(w)
            ok, cert = is_coboundary(z)
            assert ok and coboundary(cert) == z


def test_is_coboundary_rejects_non_cocycle():
    K = boundary_simplex(M([1, 2]))
    with pytest.raises(NotACocycle):
        is_coboundary(Cochain.cell(K, "Q", 0, M([1])))


def test_leibniz_and_commutativity():
    rng = random.Random(21)
    for _ in range(60):
        m = rng.randint(2, 5)
        mnfs = [M(rng.sample(range(1, m + 1), rng.randint(1, m))) for _ in range(rng.randint(0, 3))]
        K = from_minimal_nonfaces(m, minimal_elements(mnfs))
        ring = rng.choice(["Q", "F2", "F3", "Z"])
        x, y = random_cochain(rng, K, ring), random_cochain(rng, K, ring)
        sign = -1 if x.degree & 1 else 1
        assert coboundary(x * y) == coboundary(x) * y + (x * coboundary(y)).scale(sign)
        assert x * y == (y * x).scale(-1 if x.degree * y.degree & 1 else 1)
        assert coboundary(coboundary(x)).is_zero()


def test_cup_product_preserves_multidegree_additivity(four_cycle):
    x = Cochain.cell(four_cycle, "Q", 0, M([1, 3]))
    y = Cochain.cell(four_cycle, "Q", M([2]), M([4]))
    assert (x * y).multidegrees == {M([1, 2, 3, 4])}
    assert cup_product(x, y).degree == x.degree + y.degree


# -- real moment-angle complex -------------------------------------------------

@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_real_boundary_simplex_is_sphere(m):
    K = boundary_simplex((1 << m) - 1)
    assert real_zk_reduced_homology(K, "Q").dims() == {m - 1: 1}
    assert real_zk_reduced_homology(K, "Z").is_free()


def test_real_full_simplex_contractible():
    assert real_zk_reduced_homology(simplex(M([1, 2, 3])), "Z").is_trivial()


def test_real_cubical_dd_zero():
    rng = random.Random(5)
    for _ in range(30):
        m = rng.randint(1, 5)
        K = from_facets(m, [rng.sample(range(1, m + 1), rng.randint(1, m)) for _ in range(rng.randint(1, m))])
        real_cubical_complex(K, augmented=True).check()


def test_real_join_is_product():
    K = boundary_simplex(M([1, 2]))
    L = relabel(from_facets(3, [[1, 2], [2, 3]]), {1: 3, 2: 4, 3: 5})
    L2 = relabel(boundary_simplex(M([1, 2, 3])), {1: 3, 2: 4, 3: 5})
    for other in (L, L2):
        J = join(K, other)
        lhs = unreduced(real_zk_reduced_homology(J, "Q").dims())
        rhs = poincare_product(unreduced(real_zk_reduced_homology(K, "Q").dims()),
                               unreduced(real_zk_reduced_homology(other, "Q").dims()))
        assert lhs == rhs


def test_real_oracle_random():
    rng = random.Random(6)
    for _ in range(30):
        m = rng.randint(1, 5)
        K = from_facets(m, [rng.sample(range(1, m + 1), rng.randint(1, m)) for _ in range(rng.randint(1, m))])
        assert real_zk_reduced_homology(K, "Q").dims() == real_hochster_dims(K, "Q")


def test_real_cubical_budget():
    with pytest.raises(ValueError):
        real_cubical_complex(simplex((1 << 15) - 1))


def test_sphere_dims_helpers():
    assert sphere_dims(3) == {0: 1, 3: 1}
    assert sphere_dims(0) == {0: 2}
    assert poincare_product(sphere_dims(1), sphere_dims(1)) == {0: 1, 1: 2, 2: 1}


def test_three_oracles_agree_small():
    rng = random.Random(12)
    for _ in range(25):
        m = rng.randint(1, 5)
        K = from_facets(m, [rng.sample(range(1, m + 1), rng.randint(1, m)) for _ in range(rng.randint(1, m))])
        t = betti_from_taylor(minimal_nonfaces(K), "Q")
        assert t == hochster_table(K, "Q").tor_table() == zk_cohomology(K, "Q").tor_table()
