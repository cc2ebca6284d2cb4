"""Exact numbers: rationals and the eighth cyclotomic field Q(zeta8).

Rationals are :class:`fractions.Fraction`, which already keeps
``gcd(num, den) == 1`` with a positive denominator.  :class:`Cyc8` stores the
four power-basis coordinates of ``c0 + c1*z + c2*z^2 + c3*z^3`` where ``z`` is
a fixed primitive eighth root of unity, reduced by ``z^4 = -1``.
"""

from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction

ZETA_NAME = "z8"


def as_rational(value):
    """Coerce an int or Fraction to Fraction; floats are refused."""
    if isinstance(value, bool) or not isinstance(value, _RationalABC):
        raise TypeError(f"expected an exact rational, got {type(value).__name__}")
    return Fraction(value)


def format_rational(q):
    return str(Fraction(q))


class Cyc8:
    """Element of Q(zeta8) in the power basis 1, z, z^2, z^3.

    Instances are immutable and hashable. Arithmetic accepts ints and
    Fractions on either side.
    """

    __slots__ = ("_c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        object.__setattr__(self, "_c", tuple(as_rational(v) for v in (c0, c1, c2, c3)))

    def __setattr__(self, name, value):
        raise AttributeError("Cyc8 is immutable")

    def __reduce__(self):
        return (Cyc8, self._c)

    @classmethod
    def _raw(cls, coords):
        obj = object.__new__(cls)
        object.__setattr__(obj, "_c", tuple(coords))
        return obj

    @property
    def coords(self):
        return self._c

    @staticmethod
    def _lift(value):
        if isinstance(value, Cyc8):
            return value
        if isinstance(value, _RationalABC) and not isinstance(value, bool):
            return Cyc8._raw((Fraction(value), _ZERO, _ZERO, _ZERO))
        return None

    def is_rational(self):
        return self._c[1] == self._c[2] == self._c[3] == 0

    def to_rational(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self._c[0]

    def __bool__(self):
        return any(self._c)

    def __eq__(self, other):
        other = Cyc8._lift(other)
        if other is None:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self.is_rational():
            return hash(self._c[0])
        return hash(self._c)

    def __neg__(self):
        return Cyc8._raw(tuple(-a for a in self._c))

    def __pos__(self):
        return self

    def __add__(self, other):
        other = Cyc8._lift(other)
        if other is None:
            return NotImplemented
        return Cyc8._raw(tuple(a + b for a, b in zip(self._c, other._c)))

    __radd__ = __add__

    def __sub__(self, other):
        other = Cyc8._lift(other)
        if other is None:
            return NotImplemented
        return Cyc8._raw(tuple(a - b for a, b in zip(self._c, other._c)))

    def __rsub__(self, other):
        other = Cyc8._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = Cyc8._lift(other)
        if other is None:
            return NotImplemented
        out = [_ZERO] * 4
        for i, a in enumerate(self._c):
            if not a:
                continue
            for j, b in enumerate(other._c):
                if not b:
                    continue
                k = i + j
                if k < 4:
                    out[k] += a * b
                else:
                    out[k - 4] -= a * b
        return Cyc8._raw(out)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse, found by solving ``self * x = 1``."""
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta8)")
        nonzero = [k for k, v in enumerate(self._c) if v]
        if len(nonzero) == 1:
            # (c z^k)^-1 = c^-1 z^-k = -c^-1 z^(4-k) for k > 0
            k = nonzero[0]
            out = [_ZERO] * 4
            if k == 0:
                out[0] = 1 / self._c[0]
            else:
                out[4 - k] = -1 / self._c[k]
            return Cyc8._raw(out)
        # column j holds the coordinates of self * z^j
        cols = []
        power = Cyc8._raw((_ONE, _ZERO, _ZERO, _ZERO))
        for _ in range(4):
            cols.append((self * power)._c)
            power = power * ZETA
        aug = [[cols[j][i] for j in range(4)] + [_ONE if i == 0 else _ZERO] for i in range(4)]
        return Cyc8._raw(_solve4(aug))

    def __truediv__(self, other):
        other = Cyc8._lift(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = Cyc8._lift(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        base = self
        if n < 0:
            base, n = self.inverse(), -n
        result = ONE
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self):
        return f"Cyc8({str(self)!r})"

    def __str__(self):
        return format_cyc8(self)


def _solve4(aug):
    """Gauss-Jordan on a 4x5 augmented rational matrix with full rank."""
    n = 4
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


_ZERO = Fraction(0)
_ONE = Fraction(1)
ONE = Cyc8(1)
ZERO_CYC = Cyc8()
ZETA = Cyc8(0, 1)


def cyc_add(a, b):
    return Cyc8._lift(a) + b


def cyc_mul(a, b):
    return Cyc8._lift(a) * b


def cyc_inv(a):
    return Cyc8._lift(a).inverse()


def zeta_pow(r):
    """zeta8**r for any integer r, folding signs through z^4 = -1."""
    k = r % 8
    coords = [_ZERO] * 4
    if k < 4:
        coords[k] = _ONE
    else:
        coords[k - 4] = -_ONE
    return Cyc8._raw(coords)


def root_of_unity_sum(r):
    """Sum of zeta8**(r*i) for i = 0..7: 0 unless 8 divides r, then 8."""
    total = ZERO_CYC
    for i in range(8):
        total = total + zeta_pow(r * i)
    return total


def format_cyc8(a):
    """Canonical text ``a0 + a1*z8 + a2*z8^2 + a3*z8^3``, zero terms omitted."""
    parts = []
    for k, c in enumerate(a.coords):
        if not c:
            continue
        sym = "" if k == 0 else (ZETA_NAME if k == 1 else f"{ZETA_NAME}^{k}")
        mag = abs(c)
        if not sym:
            body = str(mag)
        elif mag == 1:
            body = sym
        else:
            body = f"{mag}*{sym}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(parts) or "0"


def parse_cyc8(text):
    """Parse any expression in ``z8`` and rationals into canonical form."""
    from .exprparse import evaluate

    value = evaluate(text, {ZETA_NAME: ZETA})
    return Cyc8._lift(value)
