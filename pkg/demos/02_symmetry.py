"""
Diagonal symmetries of a monomial derivation
============================================

d(x) = t^2, d(y) = z*t, d(z) = y^2, d(t) = x*y.  A weight vector w mod 8
with shift c gives sigma = diag(z8^w) satisfying sigma^-1 d sigma = z8^c d.
"""

from darbouxcert import (
    DiagonalAutomorphism,
    conjugate,
    find_symmetry_weights,
    generic_cofactor_vanishes,
    paper_derivation,
    wd,
)
from darbouxcert.darboux import as_weight_solution, eliminate_cofactors
from darbouxcert.exactnum import ZETA

d = paper_derivation()
beta = d.exponent_matrix()
print("w_d =", wd(beta))

sols = find_symmetry_weights(beta, 8)
print(len(sols), "solutions modulo 8")

sol = as_weight_solution((3, 5, 3, 1), 1, 8)
print(sol in sols)

sigma = DiagonalAutomorphism.from_weights((3, 5, 3, 1), 8)
print(conjugate(sigma, d) == d.scale(ZETA))
for img in conjugate(sigma, d).images:
    print("  ", img)

# averaging a generic linear cofactor over the orbit leaves nothing
print(generic_cofactor_vanishes(sigma, ZETA, 8))
print(eliminate_cofactors(d, sol).flags())
