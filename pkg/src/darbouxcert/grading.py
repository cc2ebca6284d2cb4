"""Weight gradings over Z and Z/m, and diagonal-symmetry discovery."""

import itertools
from dataclasses import dataclass

from .derivation import ExponentMatrix

#: Upper bound on m**n candidates examined by :func:`find_symmetry_weights`.
ENUMERATION_CAP = 2**20


class EnumerationCapError(ValueError):
    pass


@dataclass(frozen=True)
class WeightVector:
    """Integer weights per variable; ``modulus == 0`` means a Z-grading."""

    weights: tuple
    modulus: int = 0

    def __post_init__(self):
        if self.modulus < 0:
            raise ValueError("modulus must be nonnegative")
        w = tuple(int(v) for v in self.weights)
        if self.modulus:
            w = tuple(v % self.modulus for v in w)
        object.__setattr__(self, "weights", w)

    @classmethod
    def standard(cls, n):
        return cls((1,) * n)

    def __len__(self):
        return len(self.weights)

    def to_dict(self):
        return {"weights": list(self.weights), "modulus": self.modulus}


def weighted_degree(mono, w):
    if len(mono) != len(w.weights):
        raise ValueError("arity mismatch between monomial and weights")
    s = sum(a * b for a, b in zip(mono, w.weights))
    return s % w.modulus if w.modulus else s


def _check_arity(poly, w):
    if poly.ctx.arity != len(w.weights):
        raise ValueError(f"{len(w.weights)} weights for {poly.ctx.arity} variables")


def homogeneous_components(poly, w):
    """Split ``poly`` by weighted degree; keys in increasing order."""
    _check_arity(poly, w)
    buckets = {}
    for e, c in poly.items():
        buckets.setdefault(weighted_degree(e, w), {})[e] = c
    return {deg: type(poly)(poly.ctx, buckets[deg], poly.domain) for deg in sorted(buckets)}


def is_homogeneous(poly, w):
    return len(homogeneous_components(poly, w)) <= 1


def derivation_homogeneity(d, w):
    """Common degree shift s of ``d`` under ``w``, or None.

    Zero images impose no constraint; the zero derivation has shift 0.
    """
    shifts = set()
    for i, img in enumerate(d.images):
        _check_arity(img, w)
        comps = homogeneous_components(img, w)
        if not comps:
            continue
        if len(comps) > 1:
            return None
        (deg,) = comps
        s = deg - w.weights[i]
        shifts.add(s % w.modulus if w.modulus else s)
    if len(shifts) > 1:
        return None
    return shifts.pop() if shifts else 0


def standard_degree(d):
    return derivation_homogeneity(d, WeightVector.standard(d.ctx.arity))


@dataclass(frozen=True)
class SymmetrySolution:
    """Weights and shift with w_i - w.beta_i = shift (mod m) for every i."""

    weights: WeightVector
    shift: int

    @property
    def modulus(self):
        return self.weights.modulus

    def is_trivial(self):
        return self.shift == 0 and not any(self.weights.weights)

    def to_dict(self):
        return {"weights": list(self.weights.weights), "shift": self.shift,
                "modulus": self.modulus}


def find_symmetry_weights(beta, m):
    """All (w, c) in (Z/m)^n x Z/m solving the symmetry congruences.

    Exhaustive over (Z/m)^n in lexicographic order; the shift is then
    determined by the first row.
    """
    beta = beta if isinstance(beta, ExponentMatrix) else ExponentMatrix(beta)
    if m < 1:
        raise ValueError("modulus must be at least 1")
    n = beta.n
    if m**n > ENUMERATION_CAP:
        raise EnumerationCapError(
            f"{m}^{n} candidates exceeds the cap {ENUMERATION_CAP}; use a smaller modulus")
    alpha = beta.alpha()
    out = []
    for w in itertools.product(range(m), repeat=n):
        # w_i - w.beta_i = -(alpha w)_i
        c = -sum(a * b for a, b in zip(alpha[0], w)) % m
        if all(-sum(a * b for a, b in zip(alpha[i], w)) % m == c for i in range(1, n)):
            out.append(SymmetrySolution(WeightVector(w, m), c))
    return out
