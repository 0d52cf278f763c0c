"""
A census of small complexes
===========================

Walk every antichain of minimal non-faces on up to four vertices, keep
those with a minimal Taylor resolution, and sort them by whether their
minimal non-faces pairwise intersect.  For each Golod complex the moment-angle
complex has the cohomology of a wedge of spheres, listed here.
"""

from collections import Counter

from golodlab.complex_core import vertices
from golodlab.golod import enumerate_instances, verify_theorem

tally = Counter()
for m in range(1, 5):
    for K in enumerate_instances(m, "exhaustive", "minimal-taylor", dedupe=True):
        rep = verify_theorem(K)
        tally[(m, rep.golod)] += 1
        if m == 4 and rep.golod:
            spheres = " ∨ ".join(f"S^{d}" + (f"×{k}" if k > 1 else "") for d, k in rep.wedge_list) or "point"
            print([vertices(N) for N in rep.minimal_nonfaces], "->", spheres)
        assert rep.consistent, rep.problems

print()
for m in range(1, 5):
    print(f"m={m}: {tally[(m, True)]} Golod, {tally[(m, False)]} not Golod (up to relabelling)")
