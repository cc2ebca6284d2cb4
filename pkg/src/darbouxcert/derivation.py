"""Polynomial derivations, monomial derivations and Darboux pairs."""

from dataclasses import dataclass

from .multipoly import ContextMismatchError, Poly, VarContext, join_domains, mono_mul


class NotMonomialError(ValueError):
    pass


def default_context(n):
    """x, y, z, t for up to four variables, x1..xn beyond that."""
    if n <= 4:
        return VarContext(tuple("xyzt"[:n]))
    return VarContext(tuple(f"x{i}" for i in range(1, n + 1)))


@dataclass(frozen=True)
class ExponentMatrix:
    """Row i is the exponent vector of the monomial d(x_i)."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("exponent matrix must be square and nonempty")
        if any(v < 0 for r in rows for v in r):
            raise ValueError("exponents must be nonnegative")

    @property
    def n(self):
        return len(self.rows)

    def alpha(self):
        """beta - I."""
        return [[v - (i == j) for j, v in enumerate(row)] for i, row in enumerate(self.rows)]

    def to_lists(self):
        return [list(r) for r in self.rows]


def _as_exponent_matrix(beta):
    return beta if isinstance(beta, ExponentMatrix) else ExponentMatrix(beta)


class Derivation:
    """A derivation of k[X], given by the images of the variables."""

    __slots__ = ("ctx", "images")

    def __init__(self, images, ctx=None):
        images = tuple(images)
        if ctx is None:
            if not images:
                raise ValueError("derivation needs at least one variable")
            ctx = images[0].ctx
        if len(images) != ctx.arity:
            raise ContextMismatchError(f"{len(images)} images for {ctx.arity} variables")
        for img in images:
            if img.ctx != ctx:
                raise ContextMismatchError("all images must share one context")
        self.ctx = ctx
        self.images = images

    def __reduce__(self):
        return (Derivation, (self.images, self.ctx))

    @property
    def domain(self):
        dom = self.images[0].domain
        for img in self.images[1:]:
            dom = join_domains(dom, img.domain)
        return dom

    def __call__(self, f):
        return apply(self, f)

    def __eq__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        return self.ctx == other.ctx and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def scale(self, c):
        return Derivation([img.scale(c) for img in self.images], self.ctx)

    def __rmul__(self, c):
        return self.scale(c)

    def is_monomial(self):
        return all(img.is_monomial() for img in self.images)

    def exponent_matrix(self):
        """Exponent matrix of a monomial derivation (coefficients ignored)."""
        rows = []
        for name, img in zip(self.ctx.names, self.images):
            if not img.is_monomial():
                raise NotMonomialError(f"d({name}) = {img} is not a single monomial")
            (e,) = img._terms
            rows.append(e)
        return ExponentMatrix(rows)

    def image_strings(self):
        return [str(img) for img in self.images]

    def __repr__(self):
        inner = ", ".join(f"d({n})={img}" for n, img in zip(self.ctx.names, self.images))
        return f"Derivation({inner})"


def apply(d, f):
    """sum_i d(x_i) * df/dx_i, computed term by term."""
    if f.ctx != d.ctx:
        raise ContextMismatchError(f"{f.ctx.names} vs {d.ctx.names}")
    domain = join_domains(d.domain, f.domain)
    n = d.ctx.arity
    out = {}
    images = [img.to_domain(domain)._terms for img in d.images]
    for e, c in f._terms.items():
        c = domain.convert(c)
        for i in range(n):
            k = e[i]
            if not k or not images[i]:
                continue
            lowered = e[:i] + (k - 1,) + e[i + 1:]
            ck = c * k
            for ei, ci in images[i].items():
                m = mono_mul(lowered, ei)
                v = out.get(m)
                out[m] = ck * ci if v is None else v + ck * ci
    return Poly._from_clean(d.ctx, {m: v for m, v in out.items() if v}, domain)


def from_exponent_matrix(beta, ctx=None):
    beta = _as_exponent_matrix(beta)
    ctx = ctx or default_context(beta.n)
    if ctx.arity != beta.n:
        raise ContextMismatchError(f"{beta.n}x{beta.n} matrix for {ctx.arity} variables")
    return Derivation([Poly(ctx, {row: 1}) for row in beta.rows], ctx)


def wd(beta):
    """det(beta - I) by Bareiss fraction-free elimination."""
    a = _as_exponent_matrix(beta).alpha()
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_normal(beta):
    beta = _as_exponent_matrix(beta)
    return all(beta.rows[i][i] == 0 for i in range(beta.n)) and wd(beta) != 0


@dataclass(frozen=True)
class DarbouxPair:
    """Candidate Darboux polynomial ``f`` with cofactor ``cofactor``."""

    f: Poly
    cofactor: Poly

    def __post_init__(self):
        if self.f.total_degree() < 1:
            raise ValueError("a Darboux polynomial must be nonconstant")
        if self.f.ctx != self.cofactor.ctx:
            raise ContextMismatchError("f and cofactor must share a context")


def is_darboux_pair(d, pair):
    if pair.f.total_degree() < 1:
        return False
    return apply(d, pair.f) == pair.cofactor * pair.f


REFERENCE_BETA = ExponentMatrix(((0, 0, 0, 2), (0, 0, 1, 1), (0, 2, 0, 0), (1, 1, 0, 0)))


def paper_derivation():
    """d(x) = t^2, d(y) = z*t, d(z) = y^2, d(t) = x*y."""
    return from_exponent_matrix(REFERENCE_BETA, VarContext(("x", "y", "z", "t")))


def jouanolou_beta(s):
    return ExponentMatrix(((0, 0, s), (s, 0, 0), (0, s, 0)))


def jouanolou_derivation(s):
    """d(x) = z^s, d(y) = x^s, d(z) = y^s."""
    return from_exponent_matrix(jouanolou_beta(s), VarContext(("x", "y", "z")))
