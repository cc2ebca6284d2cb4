"""Bounded-degree Darboux searches and Darboux-free certificates.

The certificate follows the symmetry-averaging argument: if a diagonal
automorphism ``sigma`` of order m satisfies ``sigma^-1 d sigma = eps d`` and
the averaged linear cofactor vanishes identically, then any Darboux
polynomial F of degree k yields the polynomial constant
``prod_i sigma^i(F)`` of degree m*k.  An empty space of polynomial constants
in every degree 1..m*D therefore rules out Darboux polynomials of degree at
most D.
"""

import enum
import itertools
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .autom import DiagonalAutomorphism, conjugate, generic_cofactor_vanishes
from .derivation import DarbouxPair, apply, is_darboux_pair
from .exactnum import Cyc8, zeta_pow
from .grading import SymmetrySolution, WeightVector, find_symmetry_weights, standard_degree
from .multipoly import QQ, Poly, grevlex_key, mono_mul
from .linalg import ExactMatrix, dense_nullspace, nullspace

#: Largest system (in columns) handed to the dense oracle.
ORACLE_MAX_COLUMNS = 200


class InvariantViolation(RuntimeError):
    """An internal cross-check failed; results must not be trusted."""


class InhomogeneousError(ValueError):
    pass


# -- assembly -----------------------------------------------------------------

def monomials_of_degree(n, p):
    """All exponent vectors of total degree p, increasing in grevlex."""
    out = []
    for combo in itertools.combinations_with_replacement(range(n), p):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=grevlex_key)
    return out


def monomials_up_to(n, maxdeg, mindeg=0):
    out = []
    for p in range(mindeg, maxdeg + 1):
        out.extend(monomials_of_degree(n, p))
    return out


def _rational_images(d):
    try:
        return [img.to_domain(QQ)._terms for img in d.images]
    except ValueError:
        raise ValueError("linear systems are assembled over Q; d has irrational coefficients") from None


def _rational_terms(poly):
    try:
        return poly.to_domain(QQ)._terms
    except ValueError:
        raise ValueError(f"{poly} has irrational coefficients") from None


def _image_of_monomial(images, e):
    """d(X^e) as a term dict, for rational images given as term dicts."""
    out = {}
    for i, k in enumerate(e):
        if not k or not images[i]:
            continue
        lowered = e[:i] + (k - 1,) + e[i + 1:]
        for ei, ci in images[i].items():
            m = mono_mul(lowered, ei)
            out[m] = out.get(m, 0) + k * ci
    return out


def assemble(d, sources, cofactor=None):
    """Matrix of F -> d(F) - cofactor*F on span(sources).

    Column j is source monomial j; rows are the target monomials that
    occur, sorted increasingly in grevlex.
    """
    images = _rational_images(d)
    lam = _rational_terms(cofactor) if cofactor is not None else {}
    columns = []
    targets = set()
    for e in sources:
        col = _image_of_monomial(images, e)
        for el, cl in lam.items():
            m = mono_mul(e, el)
            col[m] = col.get(m, 0) - cl
        col = {m: v for m, v in col.items() if v}
        columns.append(col)
        targets.update(col)
    order = sorted(targets, key=grevlex_key)
    index = {m: i for i, m in enumerate(order)}
    rows = [{} for _ in order]
    for j, col in enumerate(columns):
        for m, v in col.items():
            rows[index[m]][j] = v
    return ExactMatrix(len(order), len(sources), rows)


def _vectors_to_polys(ctx, sources, vectors):
    return [Poly(ctx, {sources[j]: v for j, v in enumerate(vec) if v}, QQ) for vec in vectors]


def _require_homogeneous(d):
    s = standard_degree(d)
    if s is None:
        raise InhomogeneousError(
            "derivation is not homogeneous in the standard grading; "
            "use constants_basis_inhomogeneous")
    return s


# -- searches -----------------------------------------------------------------

def constants_basis(d, p):
    """Basis of the homogeneous polynomial constants of degree p.

    Each basis element is monic in grevlex (its largest monomial has
    coefficient 1) and is rechecked with ``apply(d, B) == 0``.
    """
    if p < 0:
        raise ValueError("degree must be nonnegative")
    _require_homogeneous(d)
    sources = monomials_of_degree(d.ctx.arity, p)
    basis = _vectors_to_polys(d.ctx, sources, nullspace(assemble(d, sources)))
    for b in basis:
        if not apply(d, b).is_zero():
            raise InvariantViolation(f"basis element {b} is not a constant")
    return basis


def constants_basis_inhomogeneous(d, maxdeg):
    """Nonconstant polynomial constants of degree <= maxdeg, modulo k.

    The degree-0 monomial is left out of the source space, which quotients
    out the ground field.
    """
    if maxdeg < 0:
        raise ValueError("degree must be nonnegative")
    sources = monomials_up_to(d.ctx.arity, maxdeg, mindeg=1)
    basis = _vectors_to_polys(d.ctx, sources, nullspace(assemble(d, sources)))
    for b in basis:
        if not apply(d, b).is_zero():
            raise InvariantViolation(f"basis element {b} is not a constant")
    return basis


def darboux_basis_fixed_cofactor(d, lam, p):
    """Basis of degree-p homogeneous F with d(F) = lam * F."""
    if p < 0:
        raise ValueError("degree must be nonnegative")
    s = _require_homogeneous(d)
    if lam.ctx != d.ctx:
        raise ValueError("cofactor lives over a different context")
    if not lam.is_zero():
        degs = {sum(e) for e, _ in lam.items()}
        if degs != {s}:
            raise ValueError(f"cofactor must be homogeneous of degree {s} (or zero)")
    sources = monomials_of_degree(d.ctx.arity, p)
    basis = _vectors_to_polys(d.ctx, sources, nullspace(assemble(d, sources, lam)))
    for b in basis:
        if apply(d, b) != lam * b:
            raise InvariantViolation(f"basis element {b} fails d(F) = lam*F")
    return basis


# -- cofactor elimination -----------------------------------------------------

@dataclass(frozen=True)
class EliminationReport:
    """Which coefficients k_j of a linear cofactor the symmetry kills.

    ``sums[j]`` is sum_{i<m} eps^i * sigma_j^i, the factor multiplying
    k_j * x_j in the averaged cofactor.
    """

    variables: tuple
    sums: tuple
    eliminated: tuple
    is_symmetry: bool = True

    @property
    def forced_zero(self):
        """Every k_j is killed; meaningful only when ``is_symmetry``."""
        return all(self.eliminated)

    def flags(self):
        return dict(zip(self.variables, self.eliminated))


def symmetry_automorphism(sol):
    """The diagonal automorphism and eps realising ``sol`` in Q(zeta8)."""
    m = sol.modulus
    sigma = DiagonalAutomorphism.from_weights(sol.weights.weights, m)
    return sigma, zeta_pow((8 // m) * sol.shift)


def _satisfies(beta, sol):
    m = sol.modulus
    w = sol.weights.weights
    for i, row in enumerate(beta.rows):
        if (w[i] - sum(a * b for a, b in zip(w, row)) - sol.shift) % m:
            return False
    return True


def eliminate_cofactors(d, sol):
    """Per-variable elimination verdicts for a degree-1 derivation.

    The verdicts are pure root-of-unity arithmetic and are computed for any
    weights; ``is_symmetry`` records whether ``sol`` actually satisfies the
    symmetry congruences of ``d``, which the averaging argument needs.
    """
    s = standard_degree(d)
    if s != 1:
        raise ValueError(
            f"cofactor elimination needs a homogeneous derivation of degree 1, got {s}")
    beta = d.exponent_matrix()
    if len(sol.weights) != beta.n:
        raise ValueError("symmetry arity does not match the derivation")
    m = sol.modulus
    c = sol.shift
    if 8 % m == 0:
        step = 8 // m
        sums = []
        for wj in sol.weights.weights:
            total = Cyc8()
            for i in range(m):
                total = total + zeta_pow(step * (c + wj) * i)
            sums.append(total)
        eliminated = tuple(not v for v in sums)
        sigma, eps = symmetry_automorphism(sol)
        if generic_cofactor_vanishes(sigma, eps, m, d.ctx) != all(eliminated):
            raise InvariantViolation("elimination flags disagree with the generic cofactor check")
    else:
        # sum of the m-th roots of unity raised to (c + w_j)
        sums = [m if (c + wj) % m == 0 else 0 for wj in sol.weights.weights]
        eliminated = tuple(v == 0 for v in sums)
    return EliminationReport(d.ctx.names, tuple(sums), eliminated, _satisfies(beta, sol))


# -- certificates -------------------------------------------------------------

class Verdict(str, enum.Enum):
    CERTIFIED = "CERTIFIED"
    INCONCLUSIVE = "INCONCLUSIVE"
    COUNTEREXAMPLE = "COUNTEREXAMPLE"


CERTIFICATE_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "additionalProperties": False,
    "required": ["derivation", "standard_degree", "symmetry", "elimination",
                 "cofactor_forced_zero", "constants_degree_bound", "nullities",
                 "darboux_free_degree_bound", "verdict", "witness", "notes"],
    "properties": {
        "derivation": {
            "type": "object",
            "required": ["vars", "images"],
            "additionalProperties": False,
            "properties": {
                "vars": {"type": "array", "items": {"type": "string"}},
                "images": {"type": "array", "items": {"type": "string"}},
            },
        },
        "standard_degree": {"type": ["integer", "null"]},
        "symmetry": {
            "type": ["object", "null"],
            "required": ["weights", "shift", "modulus"],
            "additionalProperties": False,
            "properties": {
                "weights": {"type": "array", "items": {"type": "integer"}},
                "shift": {"type": "integer"},
                "modulus": {"type": "integer", "minimum": 1},
            },
        },
        "elimination": {"type": ["object", "null"],
                        "additionalProperties": {"type": "boolean"}},
        "cofactor_forced_zero": {"type": "boolean"},
        "constants_degree_bound": {"type": "integer", "minimum": 0},
        "nullities": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["degree", "columns", "nullity"],
                "additionalProperties": False,
                "properties": {
                    "degree": {"type": "integer", "minimum": 1},
                    "columns": {"type": "integer", "minimum": 0},
                    "nullity": {"type": "integer", "minimum": 0},
                },
            },
        },
        "darboux_free_degree_bound": {"type": ["integer", "null"]},
        "verdict": {"enum": [v.value for v in Verdict]},
        "witness": {
            "type": ["object", "null"],
            "required": ["f", "cofactor"],
            "additionalProperties": False,
            "properties": {"f": {"type": "string"}, "cofactor": {"type": "string"}},
        },
        "notes": {"type": "array", "items": {"type": "string"}},
        "timings": {"type": "array", "items": {"type": "number"}},
    },
}


@dataclass
class Certificate:
    derivation: dict
    standard_degree: int
    symmetry: dict
    elimination: dict
    cofactor_forced_zero: bool
    constants_degree_bound: int
    nullities: list
    darboux_free_degree_bound: int
    verdict: Verdict
    witness: dict = None
    notes: list = field(default_factory=list)
    timings: list = None

    def to_dict(self):
        out = {
            "derivation": self.derivation,
            "standard_degree": self.standard_degree,
            "symmetry": self.symmetry,
            "elimination": self.elimination,
            "cofactor_forced_zero": self.cofactor_forced_zero,
            "constants_degree_bound": self.constants_degree_bound,
            "nullities": self.nullities,
            "darboux_free_degree_bound": self.darboux_free_degree_bound,
            "verdict": Verdict(self.verdict).value,
            "witness": self.witness,
            "notes": list(self.notes),
        }
        if self.timings is not None:
            out["timings"] = list(self.timings)
        return out

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data):
        data = dict(data)
        data["verdict"] = Verdict(data["verdict"])
        return cls(**data)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def _constants_level(d, p, oracle):
    start = time.perf_counter()
    sources = monomials_of_degree(d.ctx.arity, p)
    mat = assemble(d, sources)
    vecs = nullspace(mat)
    if oracle and mat.ncols <= ORACLE_MAX_COLUMNS and dense_nullspace(mat) != vecs:
        raise InvariantViolation(f"sparse and dense nullspaces differ at degree {p}")
    basis = _vectors_to_polys(d.ctx, sources, vecs)
    for b in basis:
        if not apply(d, b).is_zero():
            raise InvariantViolation(f"basis element {b} is not a constant")
    return p, len(sources), basis, time.perf_counter() - start


def constants_levels(d, degrees, threads=1, oracle=False):
    """Constants of each degree in ``degrees``, as (p, columns, basis, seconds).

    With threads > 1 the levels run in a process pool; results keep the
    order of ``degrees``.
    """
    degrees = list(degrees)
    if threads > 1 and len(degrees) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(_constants_level, itertools.repeat(d), degrees,
                                 itertools.repeat(oracle)))
    return [_constants_level(d, p, oracle) for p in degrees]


def _variable_witness(d):
    """A coordinate x_j dividing d(x_j) is a Darboux polynomial."""
    gens = d.ctx.gens()
    for j, img in enumerate(d.images):
        if img.is_zero():
            continue
        if all(e[j] >= 1 for e, _ in img.items()):
            lowered = {e[:j] + (e[j] - 1,) + e[j + 1:]: c for e, c in img.items()}
            pair = DarbouxPair(gens[j], Poly(d.ctx, lowered, img.domain))
            if is_darboux_pair(d, pair):
                return pair
            raise InvariantViolation(f"{d.ctx.names[j]} divides its image but is not Darboux")
    return None


def certify_darboux_free(d, D, m=8, *, threads=1, oracle_check=False, symmetry=None,
                         timings=False):
    """Certify that ``d`` has no Darboux polynomial of degree <= D.

    ``symmetry`` optionally pins the SymmetrySolution to use; by default the
    first eliminating one in lexicographic order is taken.  The result is
    COUNTEREXAMPLE whenever a verified Darboux pair turns up, CERTIFIED when
    the cofactor is eliminated and no constants exist in degrees 1..m*D,
    and INCONCLUSIVE otherwise.
    """
    if D < 1:
        raise ValueError("degree bound D must be at least 1")
    if m < 2:
        raise ValueError("modulus must be at least 2")
    beta = d.exponent_matrix()
    s = standard_degree(d)
    if s is None:
        raise InhomogeneousError("derivation is not homogeneous in the standard grading")
    notes = []
    witness = _variable_witness(d)

    chosen = None
    report = None
    if s != 1:
        notes.append(f"cofactor elimination needs degree 1; derivation has degree {s}")
    elif 8 % m:
        notes.append(f"modulus {m} does not divide 8; the symmetry cannot be "
                     "checked exactly in Q(z8)")
    else:
        solutions = find_symmetry_weights(beta, m)
        if symmetry is not None:
            if symmetry not in solutions:
                raise ValueError(f"{symmetry} is not a symmetry of d modulo {m}")
            solutions = [symmetry]
        for sol in solutions:
            rep = eliminate_cofactors(d, sol)
            if rep.forced_zero:
                chosen, report = sol, rep
                break
        if chosen is None:
            notes.append(f"no symmetry modulo {m} forces the cofactor to vanish")
        else:
            sigma, eps = symmetry_automorphism(chosen)
            if conjugate(sigma, d) != d.scale(eps):
                raise InvariantViolation("conjugation recheck failed")
            if not generic_cofactor_vanishes(sigma, eps, m, d.ctx):
                raise InvariantViolation("generic cofactor recheck failed")

    N = m * D
    levels = constants_levels(d, range(1, N + 1), threads, oracle_check)
    nullities = [{"degree": p, "columns": ncols, "nullity": len(basis)}
                 for p, ncols, basis, _ in levels]
    if witness is None:
        for p, _, basis, _ in levels:
            if basis:
                witness = DarbouxPair(basis[0], d.ctx.zero())
                break

    if witness is not None:
        if not is_darboux_pair(d, witness):
            raise InvariantViolation("witness failed the Darboux check")
        verdict = Verdict.COUNTEREXAMPLE
    elif chosen is not None:
        verdict = Verdict.CERTIFIED
        _recheck_random_level(d, levels, D, m)
    else:
        verdict = Verdict.INCONCLUSIVE

    return Certificate(
        derivation={"vars": list(d.ctx.names), "images": d.image_strings()},
        standard_degree=s,
        symmetry=chosen.to_dict() if chosen is not None else None,
        elimination=report.flags() if report is not None else None,
        cofactor_forced_zero=report is not None and report.forced_zero,
        constants_degree_bound=N,
        nullities=nullities,
        darboux_free_degree_bound=D if verdict is Verdict.CERTIFIED else None,
        verdict=verdict,
        witness=({"f": str(witness.f), "cofactor": str(witness.cofactor)}
                 if witness is not None else None),
        notes=notes,
        timings=[round(t, 6) for *_, t in levels] if timings else None,
    )


def _recheck_random_level(d, levels, D, m):
    """Re-solve one seeded-random small level with the dense oracle."""
    small = [p for p, ncols, _, _ in levels if ncols <= ORACLE_MAX_COLUMNS]
    if not small:
        return
    rng = random.Random(f"{d.image_strings()}|{D}|{m}")
    p = rng.choice(small)
    sources = monomials_of_degree(d.ctx.arity, p)
    dense = dense_nullspace(assemble(d, sources))
    if len(dense) != len(levels[p - 1][2]):
        raise InvariantViolation(f"dense oracle disagrees at degree {p}")


def as_weight_solution(weights, shift, modulus):
    return SymmetrySolution(WeightVector(weights, modulus), shift)

