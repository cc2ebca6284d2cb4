"""
Controls
========

Three small derivations whose answers are known in advance.
"""

from darbouxcert import certify_darboux_free, constants_basis, is_normal, wd
from darbouxcert.derivation import Derivation, jouanolou_derivation
from darbouxcert.multipoly import VarContext, parse_poly

# rotation: x^2 - y^2 is a constant
xy = VarContext(("x", "y"))
rot = Derivation([parse_poly("y", xy), parse_poly("x", xy)])
print(constants_basis(rot, 2))

# Euler: every coordinate is Darboux with cofactor 1
euler = Derivation(VarContext(("x", "y", "z", "t")).gens())
cert = certify_darboux_free(euler, 1, 8)
print(cert.verdict.value, cert.witness)

# Jouanolou s=2: normal, w_d = 7, and no symmetry usable over Q(z8)
j = jouanolou_derivation(2)
beta = j.exponent_matrix()
print(wd(beta), is_normal(beta))
print(certify_darboux_free(j, 1, 7).verdict.value)
