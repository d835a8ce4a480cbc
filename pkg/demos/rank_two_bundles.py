"""
Bundles as cokernels
====================

A rank-2 bundle with c1 = (1,1), its dual, and Hom spaces between bundles of
this kind, all computed from a presentation by forms.
"""

from quadric_sheaves.sheaf import (Presentation, chern, dual, handle, hom_cohomology,
                                   is_indecomposable)

# E = coker(O(-1,-1) -> O^3) for three general (1,1)-forms
E = Presentation.generic([(-1, -1)], [(0, 0)] * 3, seed=11, locally_free=True)
print(chern(E))
print("h(E)      =", handle(E).cohomology())
print("h(E^dual) =", handle(dual(E, True)).cohomology())

# two such bundles from different forms are not isomorphic
E2 = Presentation.generic([(-1, -1)], [(0, 0)] * 3, seed=12, locally_free=True)
print("Hom(E2,E):", hom_cohomology(E2, E))
print("End(E):   ", hom_cohomology(E, E))

# the rank-3 cousin and the two mixed Hom spaces
T = Presentation.generic([(-1, -1)], [(0, 0)] * 4, seed=13, locally_free=True)
print("Hom(T,E): ", hom_cohomology(T, E))
print("Hom(E,T): ", hom_cohomology(E, T))

# End(E) is local, a direct sum is not
print(is_indecomposable(E), is_indecomposable(Presentation.direct_sum(E, T)))
