# utils/parsing.py

import math
import re
from fractions import Fraction

import sympy
from sympy.parsing.sympy_parser import parse_expr

from errors import GeometryError, UsageError
from exact_linalg import Vec, as_vec
from spherical_dehn import Angle, context

TUPLE = re.compile(r"^\(([^()]*)\)$")
ANGLE_NAMES = {"pi": sympy.pi, "arccos": sympy.acos, "acos": sympy.acos}


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"Not a rational number: {text!r}")


def parse_vectors(text: str) -> list[Vec]:
    """'(1,0);(1,1)' -> [(1, 0), (1, 1)] with rational entries."""
    vectors = []
    for chunk in text.split(";"):
        match = TUPLE.match(chunk.strip())
        if match is None:
            raise UsageError(f"Not a vector literal: {chunk.strip()!r}")
        vectors.append(as_vec(parse_rational(x) for x in match.group(1).split(",")))
    if not vectors or len({len(v) for v in vectors}) != 1:
        raise UsageError("Vectors must be nonempty and share one dimension")
    return vectors


def _check_angle_expression(expr) -> None:
    if expr.free_symbols:
        raise UsageError(f"Unknown names in angle: {sorted(map(str, expr.free_symbols))}")
    if expr.has(sympy.Float):
        raise UsageError("Angles take integers, rationals, pi and arccos(r) only")
    for f in expr.atoms(sympy.Function):
        if f.func is not sympy.acos or not f.args[0].is_Rational:
            raise UsageError(f"Unsupported function in angle: {f}")


def parse_angle(text: str, bits: int) -> Angle:
    """Angles over {integers, rationals, pi, arccos(r)}, with exact tags kept."""
    try:
        expr = parse_expr(text.replace("π", "pi"), local_dict=dict(ANGLE_NAMES))
    except (SyntaxError, TypeError, sympy.SympifyError) as e:
        raise UsageError(f"Cannot parse angle {text!r}: {e}")
    expr = sympy.sympify(expr)
    _check_angle_expression(expr)
    if not expr.is_real:
        raise UsageError(f"Angle {text!r} is not real")
    ratio = expr / sympy.pi
    if ratio.is_Rational:
        q = Fraction(int(ratio.p), int(ratio.q))
        if not 0 <= q <= 1:
            raise GeometryError(f"Angle {text} is outside [0, pi]")
        return Angle.from_pi_rational(q, bits)
    cosine = sympy.cos(expr)
    exact = Fraction(int(cosine.p), int(cosine.q)) if cosine.is_Rational else None
    ctx = context(bits)
    digits = int(bits * math.log10(2)) + 20
    value = ctx.mpf(str(sympy.N(expr, digits)))
    if value < 0 or value > ctx.pi:
        raise GeometryError(f"Angle {text} is outside [0, pi]")
    return Angle(value, bits, None, exact)
