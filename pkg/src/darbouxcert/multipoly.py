"""Sparse multivariate polynomials over Q or Q(zeta8).

A :class:`Poly` is an immutable map from exponent tuples to nonzero
coefficients, tied to a :class:`VarContext` and a coefficient domain
(:data:`QQ` or :data:`QZ8`).  Terms are printed in graded reverse
lexicographic order, leading term first.
"""

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import ZETA, ZETA_NAME, Cyc8, as_rational, format_cyc8
from .exprparse import evaluate

MAX_EXPONENT = 2**16 - 1

#: Degree of the zero polynomial.
NEG_INFINITY = -math.inf

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class ContextMismatchError(ValueError):
    pass


class ExponentOverflowError(OverflowError):
    pass


class _Domain:
    def __init__(self, name, rank):
        self.name = name
        self.rank = rank

    def __repr__(self):
        return self.name

    def __reduce__(self):
        return (_domain_by_name, (self.name,))

    def convert(self, c):
        if self is QZ8:
            return c if isinstance(c, Cyc8) else Cyc8(c)
        if isinstance(c, Cyc8):
            return c.to_rational()
        return as_rational(c)

    def accepts(self, c):
        if isinstance(c, Cyc8):
            return self is QZ8 or c.is_rational()
        return isinstance(c, (int, Fraction)) and not isinstance(c, bool)


QQ = _Domain("QQ", 0)
QZ8 = _Domain("QQ(z8)", 1)


def _domain_by_name(name):
    return QQ if name == "QQ" else QZ8


def domain_of(c):
    return QZ8 if isinstance(c, Cyc8) else QQ


def join_domains(a, b):
    return a if a.rank >= b.rank else b


@dataclass(frozen=True)
class VarContext:
    """Ordered, fixed list of variable names."""

    names: tuple

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for name in names:
            if not isinstance(name, str) or not _IDENT.match(name):
                raise ValueError(f"invalid variable name {name!r}")
            if name == ZETA_NAME:
                raise ValueError(f"{ZETA_NAME!r} is reserved for the root of unity")

    @property
    def arity(self):
        return len(self.names)

    def index(self, var):
        if isinstance(var, int):
            if not 0 <= var < len(self.names):
                raise ValueError(f"variable index {var} out of range")
            return var
        try:
            return self.names.index(var)
        except ValueError:
            raise ValueError(f"unknown variable {var!r}") from None

    def gen(self, var, domain=None):
        i = self.index(var)
        e = tuple(1 if j == i else 0 for j in range(self.arity))
        return Poly(self, {e: 1}, domain or QQ)

    def gens(self, domain=None):
        return tuple(self.gen(i, domain) for i in range(self.arity))

    def zero(self, domain=None):
        return Poly(self, {}, domain or QQ)

    def one(self, domain=None):
        return self.constant(1, domain)

    def constant(self, c, domain=None):
        domain = domain or domain_of(c)
        return Poly(self, {(0,) * self.arity: c}, domain)

    def extend(self, extra):
        return VarContext(self.names + tuple(extra))


def grevlex_key(e):
    """Sort key; larger key means larger monomial in grevlex."""
    return (sum(e), tuple(-a for a in reversed(e)))


def mono_mul(a, b):
    e = tuple(x + y for x, y in zip(a, b))
    for x in e:
        if x > MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent {x} exceeds {MAX_EXPONENT}")
    return e


class Poly:
    """Immutable sparse polynomial.

    ``terms`` maps exponent tuples to coefficients; zero coefficients are
    dropped on construction.
    """

    __slots__ = ("ctx", "domain", "_terms", "_hash")

    def __init__(self, ctx, terms=None, domain=None):
        terms = terms or {}
        if domain is None:
            domain = QQ
            for c in terms.values():
                domain = join_domains(domain, domain_of(c))
        clean = {}
        n = ctx.arity
        for e, c in terms.items():
            e = tuple(e)
            if len(e) != n:
                raise ContextMismatchError(f"monomial {e} has wrong arity for {ctx.names}")
            for x in e:
                if not isinstance(x, int) or x < 0:
                    raise ValueError(f"bad exponent {x!r} in {e}")
                if x > MAX_EXPONENT:
                    raise ExponentOverflowError(f"exponent {x} exceeds {MAX_EXPONENT}")
            c = domain.convert(c)
            if c:
                clean[e] = c
        self.ctx = ctx
        self.domain = domain
        self._terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, ctx, terms, domain):
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.domain = domain
        obj._terms = terms
        obj._hash = None
        return obj

    def __reduce__(self):
        return (Poly, (self.ctx, self._terms, self.domain))

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def coeff(self, e):
        return self._terms.get(tuple(e), self.domain.convert(0))

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self):
        return all(not any(e) for e in self._terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.coeff((0,) * self.ctx.arity)

    def total_degree(self):
        if not self._terms:
            return NEG_INFINITY
        return max(sum(e) for e in self._terms)

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda kv: grevlex_key(kv[0]), reverse=True)

    def is_monomial(self):
        return len(self._terms) == 1

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ctx != self.ctx:
                raise ContextMismatchError(f"{other.ctx.names} vs {self.ctx.names}")
            return other
        if isinstance(other, (int, Fraction, Cyc8)) and not isinstance(other, bool):
            return self.ctx.constant(other)
        return None

    def to_domain(self, domain):
        if domain is self.domain:
            return self
        return Poly(self.ctx, self._terms, domain)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        domain = join_domains(self.domain, other.domain)
        a, b = self.to_domain(domain), other.to_domain(domain)
        if len(a._terms) < len(b._terms):
            a, b = b, a
        out = dict(a._terms)
        for e, c in b._terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Poly._from_clean(self.ctx, out, domain)

    __radd__ = __add__

    def __neg__(self):
        return Poly._from_clean(self.ctx, {e: -c for e, c in self._terms.items()}, self.domain)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyc8)) and not isinstance(other, bool):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        domain = join_domains(self.domain, other.domain)
        a, b = self.to_domain(domain), other.to_domain(domain)
        out = {}
        for ea, ca in a._terms.items():
            for eb, cb in b._terms.items():
                e = mono_mul(ea, eb)
                v = out.get(e)
                out[e] = ca * cb if v is None else v + ca * cb
        return Poly._from_clean(self.ctx, {e: c for e, c in out.items() if c}, domain)

    __rmul__ = __mul__

    def scale(self, c):
        domain = join_domains(self.domain, domain_of(c))
        c = domain.convert(c)
        if not c:
            return self.ctx.zero(domain)
        src = self.to_domain(domain)
        return Poly._from_clean(self.ctx, {e: c * v for e, v in src._terms.items()}, domain)

    def __truediv__(self, other):
        if isinstance(other, Poly):
            if not other.is_constant() or other.is_zero():
                raise TypeError("can only divide by a nonzero constant")
            other = other.constant_value()
        if isinstance(other, (int, Fraction, Cyc8)) and not isinstance(other, bool):
            if not other:
                raise ZeroDivisionError("polynomial division by zero")
            return self.scale(_reciprocal(other))
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = self.ctx.one(self.domain)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            if other.ctx != self.ctx:
                return False
            return self._terms == other._terms
        if isinstance(other, (int, Fraction, Cyc8)) and not isinstance(other, bool):
            return self == self.ctx.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self._terms.items())))
        return self._hash

    # -- calculus and substitution -----------------------------------------

    def derivative(self, var):
        i = self.ctx.index(var)
        out = {}
        for e, c in self._terms.items():
            k = e[i]
            if k:
                out[e[:i] + (k - 1,) + e[i + 1:]] = c * k
        return Poly._from_clean(self.ctx, out, self.domain)

    def substitute_diagonal(self, scalars):
        """Image under ``x_i -> scalars[i] * x_i``."""
        scalars = list(scalars)
        if len(scalars) != self.ctx.arity:
            raise ContextMismatchError("one scalar per variable required")
        domain = self.domain
        for s in scalars:
            domain = join_domains(domain, domain_of(s))
        scalars = [domain.convert(s) for s in scalars]
        powers = [{} for _ in scalars]
        out = {}
        for e, c in self._terms.items():
            v = domain.convert(c)
            for i, k in enumerate(e):
                if k:
                    p = powers[i].get(k)
                    if p is None:
                        p = powers[i][k] = scalars[i] ** k
                    v = v * p
            if v:
                out[e] = v
        return Poly._from_clean(self.ctx, out, domain)

    # -- text ---------------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r}, vars={list(self.ctx.names)})"


def _reciprocal(c):
    return c.inverse() if isinstance(c, Cyc8) else 1 / Fraction(c)


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def scale(c, a):
    return a.scale(c)


def partial_derivative(a, var):
    return a.derivative(var)


def total_degree(a):
    return a.total_degree()


def substitute_diagonal(a, scalars):
    return a.substitute_diagonal(scalars)


def _format_coeff(c):
    """Return (negative, text, atomic) for a nonzero coefficient."""
    if isinstance(c, Cyc8):
        nz = [k for k, v in enumerate(c.coords) if v]
        if len(nz) == 1:
            neg = c.coords[nz[0]] < 0
            return neg, format_cyc8(-c if neg else c), True
        return False, f"({format_cyc8(c)})", False
    return c < 0, str(abs(c)), True


def _format_monomial(e, names):
    parts = []
    for name, k in zip(names, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_poly(a):
    """Deterministic canonical text, grevlex order, coefficient first."""
    out = []
    for e, c in a.sorted_terms():
        neg, ctext, _ = _format_coeff(c)
        mono = _format_monomial(e, a.ctx.names)
        if not mono:
            body = ctext
        elif ctext == "1":
            body = mono
        else:
            body = f"{ctext}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out) or "0"


def parse_poly(text, ctx, domain=None):
    """Parse ``text`` over ``ctx``.

    With ``domain=QZ8`` the identifier ``z8`` denotes the root of unity.
    The result is in ``domain`` (QQ by default).
    """
    domain = domain or QQ
    names = {name: ctx.gen(name, domain) for name in ctx.names}
    if domain is QZ8:
        names[ZETA_NAME] = ctx.constant(ZETA)
    value = evaluate(text, names)
    if not isinstance(value, Poly):
        value = ctx.constant(value, domain)
    return value.to_domain(domain)
