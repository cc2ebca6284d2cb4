"""JSON input specs for derivations and automorphisms.

Derivation specs come in two forms::

    {"vars": ["x", "y", "z", "t"], "images": ["t^2", "z*t", "y^2", "x*y"]}
    {"vars": ["x", "y", "z", "t"], "beta": [[0, 0, 0, 2], ...]}

``vars`` may be omitted in the ``beta`` form. Automorphism specs are
``{"scalars": ["z8^3", "z8^5", "z8^3", "z8"]}`` or
``{"weights": [3, 5, 3, 1], "modulus": 8}``.
"""

import json
import sys

from .autom import DiagonalAutomorphism
from .derivation import Derivation, ExponentMatrix, default_context, from_exponent_matrix
from .exactnum import parse_cyc8
from .multipoly import QQ, QZ8, VarContext, parse_poly


class SpecError(ValueError):
    pass


def read_json(path):
    if path == "-":
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _context(obj, n=None):
    if "vars" not in obj:
        if n is None:
            raise SpecError("spec needs a 'vars' list")
        return default_context(n)
    names = obj["vars"]
    if not isinstance(names, list) or not all(isinstance(v, str) for v in names):
        raise SpecError("'vars' must be a list of strings")
    return VarContext(tuple(names))


def _downgrade(poly):
    if poly.domain is QZ8 and all(c.is_rational() for _, c in poly.items()):
        return poly.to_domain(QQ)
    return poly


def derivation_from_spec(obj):
    if not isinstance(obj, dict):
        raise SpecError("derivation spec must be a JSON object")
    has_images, has_beta = "images" in obj, "beta" in obj
    if has_images == has_beta:
        raise SpecError("derivation spec needs exactly one of 'images' or 'beta'")
    if has_beta:
        try:
            beta = ExponentMatrix(obj["beta"])
        except (TypeError, ValueError) as exc:
            raise SpecError(f"bad 'beta': {exc}") from None
        ctx = _context(obj, beta.n)
        if ctx.arity != beta.n:
            raise SpecError(f"{len(ctx.names)} vars for a {beta.n}x{beta.n} beta")
        return from_exponent_matrix(beta, ctx)
    ctx = _context(obj)
    images = obj["images"]
    if not isinstance(images, list) or len(images) != ctx.arity:
        raise SpecError(f"'images' must list one expression per variable ({ctx.arity})")
    return Derivation([_downgrade(parse_poly(str(text), ctx, QZ8)) for text in images], ctx)


def derivation_to_spec(d):
    return {"vars": list(d.ctx.names), "images": d.image_strings()}


def automorphism_from_spec(obj):
    if not isinstance(obj, dict):
        raise SpecError("automorphism spec must be a JSON object")
    if "scalars" in obj:
        return DiagonalAutomorphism([parse_cyc8(str(s)) for s in obj["scalars"]])
    if "weights" in obj:
        return DiagonalAutomorphism.from_weights([int(w) for w in obj["weights"]],
                                                 int(obj.get("modulus", 8)))
    raise SpecError("automorphism spec needs 'scalars' or 'weights'")


def automorphism_to_spec(s):
    return {"scalars": s.scalar_strings()}
