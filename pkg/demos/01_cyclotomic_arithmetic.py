"""
Exact arithmetic in Q(z8)
=========================

Elements are rational 4-vectors in the basis 1, z8, z8^2, z8^3 with
z8^4 = -1.  Nothing is ever rounded.
"""

from fractions import Fraction

from darbouxcert.exactnum import ZETA, Cyc8, format_cyc8, parse_cyc8, root_of_unity_sum, zeta_pow

# z8 has order 8
print([format_cyc8(zeta_pow(k)) for k in range(8)])
print(ZETA**8 == 1)

# inverses come from a small exact linear solve
a = parse_cyc8("1/2 - 3*z8^2 + z8^3")
print(format_cyc8(a.inverse()), a * a.inverse() == 1)

# sums of powers of z8: 8 when r = 0 mod 8, zero otherwise
for r in range(9):
    print(r, format_cyc8(root_of_unity_sum(r)))

# rationals embed unchanged
print(Cyc8(Fraction(2, 3)) + 1 == Fraction(5, 3))
