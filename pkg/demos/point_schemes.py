"""
Points, ideals and global generation
====================================

Eight points cut out by two (2,2)-forms, what happens when one is dropped,
and a small randomized search over seven-point sets.
"""

from quadric_sheaves.points import (cayley_bacharach, complete_intersection_8,
                                    general_points, gg_ideal_report, ideal_cohomology,
                                    length7_search)

Z8, (f, g) = complete_intersection_8(seed=1)
print("h(I_Z(2,2)) =", ideal_cohomology(Z8, (2, 2)))
print("gg:", gg_ideal_report(Z8, (2, 2)))
print("CB(0,0):", cayley_bacharach(Z8, (0, 0)))

# removing a point leaves the pencil with an extra base point
Z7 = Z8.without(0)
print("gg after removing a point:", gg_ideal_report(Z7, (2, 2)))

# six general points impose independent conditions on (1,2)- and (2,1)-forms
Z6 = general_points(6, seed=2)
print(ideal_cohomology(Z6, (1, 2)), ideal_cohomology(Z6, (2, 1)))

res = length7_search(200, seed=0, structured=10)
print(res["summary"], "counterexamples:", len(res["counterexamples"]))
