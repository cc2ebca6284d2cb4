"""Diagonal automorphisms with root-of-unity scalars, conjugation of
derivations, orbit products and averaged cofactors."""

from .derivation import Derivation, apply, is_darboux_pair
from .exactnum import ONE, Cyc8, zeta_pow
from .multipoly import QZ8, ContextMismatchError


class OrderMismatchError(ValueError):
    pass


class ConjugationError(ValueError):
    """The automorphism does not conjugate d to eps * d."""


class NotDarbouxError(ValueError):
    pass


class DiagonalAutomorphism:
    """x_i -> scalars[i] * x_i with nonzero scalars in Q(zeta8)."""

    __slots__ = ("scalars",)

    def __init__(self, scalars):
        scalars = tuple(s if isinstance(s, Cyc8) else Cyc8(s) for s in scalars)
        if any(not s for s in scalars):
            raise ValueError("automorphism scalars must be nonzero")
        self.scalars = scalars

    def __reduce__(self):
        return (DiagonalAutomorphism, (self.scalars,))

    @classmethod
    def identity(cls, n):
        return cls([ONE] * n)

    @classmethod
    def from_weights(cls, weights, modulus=8):
        """Scalars zeta_m**w_i realised in Q(zeta8); needs m | 8."""
        if modulus < 1 or 8 % modulus:
            raise ValueError(f"modulus {modulus} does not divide 8; not realisable in Q(z8)")
        step = 8 // modulus
        return cls([zeta_pow(step * w) for w in weights])

    def __len__(self):
        return len(self.scalars)

    def __call__(self, f):
        return apply_auto(self, f)

    def __eq__(self, other):
        if not isinstance(other, DiagonalAutomorphism):
            return NotImplemented
        return self.scalars == other.scalars

    def __hash__(self):
        return hash(self.scalars)

    def __mul__(self, other):
        """Composition; diagonal maps commute."""
        if not isinstance(other, DiagonalAutomorphism):
            return NotImplemented
        if len(other) != len(self):
            raise ContextMismatchError("automorphisms of different arity")
        return DiagonalAutomorphism([a * b for a, b in zip(self.scalars, other.scalars)])

    def __pow__(self, k):
        return DiagonalAutomorphism([s**k for s in self.scalars])

    def inverse(self):
        return DiagonalAutomorphism([s.inverse() for s in self.scalars])

    def is_identity(self):
        return all(s == 1 for s in self.scalars)

    def extend(self, k):
        """Fix ``k`` extra trailing variables."""
        return DiagonalAutomorphism(self.scalars + (ONE,) * k)

    def scalar_strings(self):
        return [str(s) for s in self.scalars]

    def __repr__(self):
        return f"DiagonalAutomorphism({self.scalar_strings()})"


def reference_automorphism():
    """x -> z^3 x, y -> z^5 y, z -> z^3 z, t -> z t with z = zeta8."""
    return DiagonalAutomorphism.from_weights((3, 5, 3, 1), 8)


def apply_auto(s, f):
    if len(s) != f.ctx.arity:
        raise ContextMismatchError(f"{len(s)} scalars for {f.ctx.arity} variables")
    return f.substitute_diagonal(s.scalars)


def inverse(s):
    return s.inverse()


def conjugate(s, d):
    """The derivation s^-1 o d o s."""
    if len(s) != d.ctx.arity:
        raise ContextMismatchError(f"{len(s)} scalars for {d.ctx.arity} variables")
    inv = s.inverse()
    images = []
    for i, a in enumerate(s.scalars):
        images.append(apply_auto(inv, d.images[i].scale(a)))
    return Derivation(images, d.ctx)


def orbit_product(s, f, order):
    """prod_{i < order} s^i(f), factors multiplied with i ascending."""
    if order < 1:
        raise ValueError("order must be at least 1")
    if not (s**order).is_identity():
        raise OrderMismatchError(f"automorphism does not have order dividing {order}")
    result = f.ctx.one(QZ8)
    power = DiagonalAutomorphism.identity(len(s))
    for _ in range(order):
        result = result * apply_auto(power, f)
        power = power * s
    return result


def averaged_cofactor(s, eps, lam, order):
    """sum_{i < order} eps^i * s^i(lam)."""
    if order < 1:
        raise ValueError("order must be at least 1")
    eps = eps if isinstance(eps, Cyc8) else Cyc8(eps)
    total = lam.ctx.zero(QZ8)
    power = DiagonalAutomorphism.identity(len(s))
    weight = ONE
    for _ in range(order):
        total = total + apply_auto(power, lam).scale(weight)
        power = power * s
        weight = weight * eps
    return total


def generic_cofactor(ctx):
    """k1*x1 + ... + kn*xn over ``ctx`` extended by symbols k1..kn."""
    n = ctx.arity
    ext = ctx.extend(f"k{j}" for j in range(1, n + 1))
    gens = ext.gens(QZ8)
    lam = ext.zero(QZ8)
    for j in range(n):
        lam = lam + gens[n + j] * gens[j]
    return lam


def generic_cofactor_vanishes(s, eps, order, ctx=None):
    """True iff the averaged generic linear cofactor is identically zero."""
    from .derivation import default_context

    ctx = ctx or default_context(len(s))
    lam = generic_cofactor(ctx)
    return averaged_cofactor(s.extend(ctx.arity), eps, lam, order).is_zero()


def cofactor_sums(s, eps, order):
    """Per-variable factor sum_i eps^i * s_j^i multiplying k_j * x_j."""
    eps = eps if isinstance(eps, Cyc8) else Cyc8(eps)
    sums = []
    for a in s.scalars:
        total = Cyc8()
        term = ONE
        for _ in range(order):
            total = total + term
            term = term * eps * a
        sums.append(total)
    return sums


def product_rule_check(d, s, eps, pair, order):
    """Check d(orbit product) == averaged cofactor * orbit product exactly.

    Raises ConjugationError if s^-1 d s != eps * d, NotDarbouxError if
    ``pair`` is not a Darboux pair of d.
    """
    eps = eps if isinstance(eps, Cyc8) else Cyc8(eps)
    if conjugate(s, d) != d.scale(eps):
        raise ConjugationError(f"conjugation by {s} does not give {eps} * d")
    if not is_darboux_pair(d, pair):
        raise NotDarbouxError(f"({pair.f}, {pair.cofactor}) is not a Darboux pair")
    fbar = orbit_product(s, pair.f, order)
    lbar = averaged_cofactor(s, eps, pair.cofactor, order)
    return apply(d, fbar) == lbar * fbar

