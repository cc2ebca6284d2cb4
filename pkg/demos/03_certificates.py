"""
Bounded-degree certificates
===========================

Eliminating the cofactor reduces the Darboux question to polynomial
constants of degree up to m*D.  For this derivation the constants space is
not empty: x*z - y*t is one, so the run ends with a counterexample.
"""

from darbouxcert import certify_darboux_free, constants_basis, paper_derivation
from darbouxcert.derivation import apply

d = paper_derivation()

for p in range(1, 5):
    print(p, [str(b) for b in constants_basis(d, p)])

f = constants_basis(d, 2)[0]
print("d(f) =", apply(d, f))

cert = certify_darboux_free(d, 2, 8)
print(cert.verdict.value, cert.witness)
print([row["nullity"] for row in cert.nullities])

# the certificate JSON is canonical and identical across thread counts;
# worker processes need the main guard
if __name__ == "__main__":
    print(cert.to_json() == certify_darboux_free(d, 2, 8, threads=4).to_json())
