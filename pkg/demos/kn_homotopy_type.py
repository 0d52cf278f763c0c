"""
Building K(N) and reading off its homotopy type
===============================================

Every complex with a minimal Taylor resolution is ``K(N)`` for a sequence
``N`` of subsets of a ground set ``W``: each ``N_i`` gets a fresh vertex
``a_i`` and the sets ``N_i ∪ {a_i}`` become the minimal non-faces.  Its
homology is that of ``S^{|W|-1}`` when the ``N_i`` cover ``W`` and zero
otherwise.
"""

from golodlab.complex_core import NonFaceSequence, build_KN, disjointify, recover_sequence, vertices
from golodlab.golod import verify_KN_homotopy
from golodlab.homology import reduced_homology

N = NonFaceSequence.of([1, 2, 3], [[1, 2], [2, 3], [3]])
kn = build_KN(N)
print("K(N) minimal non-faces:", [vertices(x) for x in kn.minimal_nonfaces])
print("apex labels a_i:", kn.apex)
print("reduced homology:", reduced_homology(kn.complex).nonzero())

# Disjointifying keeps the union, so K(M) ⊆ K(N) should be a homology isomorphism.
M = disjointify(N)
print("disjointified:", [vertices(x) for x in M.entries])
rep = verify_KN_homotopy(N)
print("covers W:", rep.covers, " inclusion iso:", rep.inclusion_iso, " ok:", rep.ok)

# Drop vertex 1 from the union and the complex becomes acyclic.
N2 = NonFaceSequence.of([1, 2, 3], [[2, 3], [3]])
print("non-covering sequence:", reduced_homology(build_KN(N2).complex).nonzero() or "acyclic")

# Going back: the smallest private vertex of each non-face is its apex.
seq, apex = recover_sequence(kn.complex)
print("recovered ground set:", vertices(seq.ground), "entries:", [vertices(x) for x in seq.entries],
      "apex:", apex)
