"""Independent reference computations used only by the tests."""

import itertools
from fractions import Fraction

import sympy


def det_cofactor(a):
    """Laplace expansion along the first row."""
    n = len(a)
    if n == 1:
        return a[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        total += (-1) ** j * a[0][j] * det_cofactor(minor)
    return total


def sympy_expr(poly):
    """Rational polynomial as a sympy expression over symbols named like the context."""
    syms = sympy.symbols(poly.ctx.names)
    if poly.ctx.arity == 1:
        syms = (syms,)
    expr = sympy.Integer(0)
    for e, c in poly.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, k in zip(syms, e):
            term *= s**k
        expr += term
    return sympy.expand(expr)


def sympy_nullity(mat):
    dense = [[sympy.Rational(v.numerator, v.denominator) for v in row] for row in mat.to_dense()]
    if not dense:
        return mat.ncols
    return len(sympy.Matrix(dense).nullspace())


def brute_symmetries(images, m):
    """(w, c) with every monomial of d(x_i) of weighted degree w_i - c mod m.

    Works on the image polynomials directly rather than an exponent matrix.
    """
    n = len(images)
    out = []
    for w in itertools.product(range(m), repeat=n):
        shifts = set()
        for i, img in enumerate(images):
            for e, _ in img.items():
                shifts.add((w[i] - sum(a * b for a, b in zip(w, e))) % m)
        if len(shifts) == 1:
            out.append((w, shifts.pop()))
    return out


def cyc8_from_complex_free_sum(r):
    """Sum of zeta^(r*i) using the 8 explicit power-basis vectors of zeta^k."""
    table = {0: (1, 0, 0, 0), 1: (0, 1, 0, 0), 2: (0, 0, 1, 0), 3: (0, 0, 0, 1),
             4: (-1, 0, 0, 0), 5: (0, -1, 0, 0), 6: (0, 0, -1, 0), 7: (0, 0, 0, -1)}
    total = [Fraction(0)] * 4
    for i in range(8):
        for k, v in enumerate(table[(r * i) % 8]):
            total[k] += v
    return tuple(total)
