"""
Why the square is not Golod
===========================

The boundary of a square has two disjoint minimal non-faces, ``{1,3}`` and
``{2,4}``.  Its moment-angle complex is ``S^3 × S^3``, and the two
three-dimensional classes multiply to the top class.
"""

from golodlab.complex_core import from_facets, minimal_nonfaces, vertices
from golodlab.golod import join_obstruction, verify_theorem
from golodlab.zk_algebra import cohomology_classes, hochster_table, is_coboundary, zk_cohomology

K = from_facets(4, [[1, 2], [2, 3], [3, 4], [1, 4]])
print("minimal non-faces:", [vertices(N) for N in minimal_nonfaces(K)])

# The cell model and the full-subcomplex sum agree on the Betti numbers.
print("H*(Z_K; Q) from cells:            ", zk_cohomology(K, "Q").dims())
print("H*(Z_K; Q) from full subcomplexes:", hochster_table(K, "Q").dims())

# Pick cocycle representatives of the degree-3 classes and multiply them.
a, b = cohomology_classes(K, "Q")[3]
print("degree-3 generators live over", vertices(a.multidegree), "and", vertices(b.multidegree))
z = a.representative * b.representative
print("product:", z)
print("is it a coboundary?", is_coboundary(z)[0])

# The disjoint pair spans a join of two boundaries of simplices.
jo = join_obstruction(K)
print("join obstruction:", vertices(jo.I), vertices(jo.J), "certified:", jo.certified)

rep = verify_theorem(K)
print("pairwise intersecting:", rep.cond2_pairwise)
print("products trivial per ring:", rep.products)
print("consistent:", rep.consistent)
