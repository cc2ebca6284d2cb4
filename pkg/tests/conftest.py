import pytest
from hypothesis import strategies as st

from darbouxcert.exactnum import Cyc8
from darbouxcert.multipoly import QQ, QZ8, Poly, VarContext

XYZT = VarContext(("x", "y", "z", "t"))

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def ctx4():
    return XYZT


small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
nonzero_rationals = small_rationals.filter(bool)

cyc8s = st.builds(Cyc8, small_rationals, small_rationals, small_rationals, small_rationals)
nonzero_cyc8s = cyc8s.filter(bool)


def monomials(n, max_exp=3):
    return st.tuples(*[st.integers(0, max_exp)] * n)


def polys(ctx=XYZT, domain=QQ, max_terms=4, max_exp=3):
    coeff = nonzero_rationals if domain is QQ else nonzero_cyc8s
    return st.dictionaries(monomials(ctx.arity, max_exp), coeff, max_size=max_terms).map(
        lambda terms: Poly(ctx, terms, domain))


qz8_polys = polys(domain=QZ8, max_terms=3, max_exp=2)
