"""
Cohomology of line bundles on the quadric
=========================================

Closed-form dimensions, an explicit monomial basis, and the Cech complex
that checks both.
"""

from quadric_sheaves.cech import line_oracle
from quadric_sheaves.cox import BiForm, CohClass, basis, format_monomial, h_line, mult

# h^i(O(a,b)) on a small grid; rows are a, columns are b
for i in range(3):
    print(f"h^{i}")
    for a in range(-3, 3):
        print("  ", " ".join(f"{h_line(i, (a, b)):2d}" for b in range(-3, 3)))

# H^1(O(0,-2)) is one-dimensional, spanned by a single Laurent monomial
print([format_monomial(m) for m in basis(1, (0, -2))])

# the Cech complex agrees with the closed form
assert all(h_line(i, (a, b)) == line_oracle(i, (a, b))
           for i in range(3) for a in range(-4, 5) for b in range(-4, 5))

# multiplication by t0 takes H^1(O(0,-3)) onto H^1(O(0,-2))
t0 = BiForm(0, 1, {(0, 1): 1})
for k in range(h_line(1, (0, -3))):
    print(mult(t0, CohClass.basis_vector(1, (0, -3), k)))
