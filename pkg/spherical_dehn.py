# spherical_dehn.py

"""Regular spherical tetrahedra, their Dehn invariants in (R/πQ) ⊗ (R/πQ),
and integer-relation evidence for (non-)cocommutativity.

Precision is always an explicit argument: every computation runs in a private
mpmath context with GUARD_BITS extra bits, and tolerances are stated against
the nominal precision.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from mpmath.ctx_mp import MPContext

from data import Report
from errors import GeometryError, PrecisionError
from exact_linalg import inverse

logger = logging.getLogger(__name__)

GUARD_BITS = 32
MIN_RELATION_BITS = 128
PSLQ_MAXSTEPS = 20000

# cos(qπ) for the only rational q in [0, 1] with rational cosine
RATIONAL_COSINES = {
    Fraction(0): Fraction(1),
    Fraction(1, 3): Fraction(1, 2),
    Fraction(1, 2): Fraction(0),
    Fraction(2, 3): Fraction(-1, 2),
    Fraction(1): Fraction(-1),
}
PI_RATIONAL_OF_COSINE = {c: q for q, c in RATIONAL_COSINES.items()}


@lru_cache(maxsize=None)
def context(bits: int) -> MPContext:
    ctx = MPContext()
    ctx.prec = bits + GUARD_BITS
    return ctx


def tolerance(bits: int, slack: int = 8):
    ctx = context(bits)
    return ctx.mpf(2) ** (slack - bits)


def _mpf_of(ctx: MPContext, q: Fraction):
    return ctx.mpf(q.numerator) / q.denominator


@dataclass(frozen=True)
class Angle:
    value: object
    bits: int
    pi_rational: Fraction | None = None
    exact_cos: Fraction | None = None

    @classmethod
    def from_pi_rational(cls, q, bits: int) -> "Angle":
        q = Fraction(q)
        ctx = context(bits)
        return cls(_mpf_of(ctx, q) * ctx.pi, bits, q, RATIONAL_COSINES.get(q))

    @classmethod
    def from_cos(cls, cos_value, bits: int, exact: Fraction | None = None) -> "Angle":
        ctx = context(bits)
        if exact is not None and exact in PI_RATIONAL_OF_COSINE:
            return cls.from_pi_rational(PI_RATIONAL_OF_COSINE[exact], bits)
        if exact is not None:
            cos_value = _mpf_of(ctx, exact)
        cos_value = max(ctx.mpf(-1), min(ctx.mpf(1), cos_value))
        return cls(ctx.acos(cos_value), bits, None, exact)

    def cos(self):
        ctx = context(self.bits)
        if self.exact_cos is not None:
            return _mpf_of(ctx, self.exact_cos)
        return ctx.cos(self.value)

    def to_json(self) -> dict:
        ctx = context(self.bits)
        digits = int(self.bits * math.log10(2)) - 2
        return {
            "value": ctx.nstr(self.value, digits),
            "pi_rational": None if self.pi_rational is None else str(self.pi_rational),
        }


@dataclass(frozen=True)
class SphericalSimplex:
    vertices: tuple[tuple, ...]
    bits: int
    gram_exact: tuple[tuple[Fraction, ...], ...] | None = None

    def __post_init__(self):
        ctx = context(self.bits)
        tol = tolerance(self.bits)
        for v in self.vertices:
            if abs(ctx.fsum(x * x for x in v) - 1) > tol:
                raise GeometryError("simplex vertices must be unit vectors")
        if len(set(self.vertices)) != len(self.vertices):
            raise GeometryError("simplex vertices must be distinct")

    @property
    def edges(self) -> list[tuple[int, int]]:
        return list(combinations(range(len(self.vertices)), 2))

    def dot(self, i: int, j: int):
        return context(self.bits).fdot(self.vertices[i], self.vertices[j])


def _side_cosine(a: Angle):
    """cos a with a checked against the open range (0, arccos(-1/3))."""
    ctx = context(a.bits)
    if a.exact_cos is not None:
        if not Fraction(-1, 3) < a.exact_cos < 1:
            raise GeometryError(f"side with cosine {a.exact_cos} is outside (0, arccos(-1/3))")
        return _mpf_of(ctx, a.exact_cos)
    c = a.cos()
    tol = tolerance(a.bits)
    if a.value <= 0 or 1 + 3 * c <= tol or 1 - c <= 0:
        raise GeometryError("side length is outside (0, arccos(-1/3)): Gram matrix is not positive definite")
    return c


def regular_tetra(a: Angle) -> SphericalSimplex:
    """Rows of the symmetric square root of (1 - c)I + cJ."""
    ctx = context(a.bits)
    c = _side_cosine(a)
    alpha = ctx.sqrt(1 - c)
    beta = (ctx.sqrt(1 + 3 * c) - alpha) / 4
    vertices = tuple(tuple(alpha * (i == j) + beta for j in range(4)) for i in range(4))
    gram = None
    if a.exact_cos is not None:
        gram = tuple(tuple(Fraction(1) if i == j else a.exact_cos for j in range(4)) for i in range(4))
    return SphericalSimplex(vertices, a.bits, gram)


def edge_length(s: SphericalSimplex, i: int, j: int) -> Angle:
    exact = s.gram_exact[i][j] if s.gram_exact is not None else None
    return Angle.from_cos(s.dot(i, j), s.bits, exact)


def _exact_dihedral_cosine(s: SphericalSimplex, i: int, j: int, k: int, l: int) -> Fraction | None:
    """-C_kl / sqrt(C_kk C_ll) with C the inverse Gram matrix, when that is rational."""
    if s.gram_exact is None:
        return None
    c = inverse(s.gram_exact)
    square = c[k][k] * c[l][l]
    num, den = math.isqrt(square.numerator), math.isqrt(square.denominator)
    if num * num != square.numerator or den * den != square.denominator:
        return None
    return -c[k][l] / Fraction(num, den)


def dihedral(s: SphericalSimplex, edge: tuple[int, int]) -> Angle:
    """Angle between the opposite vertices projected onto span(v_i, v_j)^⊥."""
    if len(s.vertices) != 4:
        raise GeometryError("dihedral angles are computed for tetrahedra")
    ctx = context(s.bits)
    i, j = edge
    k, l = [m for m in range(4) if m not in edge]
    g = s.dot(i, j)
    det = 1 - g * g
    if det <= tolerance(s.bits):
        raise GeometryError(f"edge ({i}, {j}) is degenerate")

    def projected(m):
        ui, uj = s.dot(m, i), s.dot(m, j)
        a = (ui - g * uj) / det
        b = (uj - g * ui) / det
        return [x - a * y - b * z for x, y, z in zip(s.vertices[m], s.vertices[i], s.vertices[j])]

    pk, pl = projected(k), projected(l)
    nk, nl = ctx.sqrt(ctx.fdot(pk, pk)), ctx.sqrt(ctx.fdot(pl, pl))
    if nk <= tolerance(s.bits) or nl <= tolerance(s.bits):
        raise GeometryError("degenerate projection of an opposite vertex")
    return Angle.from_cos(ctx.fdot(pk, pl) / (nk * nl), s.bits, _exact_dihedral_cosine(s, i, j, k, l))


def tetra_dihedral_formula(a: Angle) -> Angle:
    """cos D = cos a / (1 + 2 cos a)."""
    c = _side_cosine(a)
    exact = None
    if a.exact_cos is not None:
        exact = a.exact_cos / (1 + 2 * a.exact_cos)
    return Angle.from_cos(c / (1 + 2 * c), a.bits, exact)


@dataclass(frozen=True)
class DehnTensor:
    terms: tuple[tuple[int, Angle, Angle], ...]
    bits: int

    def is_zero(self) -> bool:
        return not self.terms

    def swap(self) -> "DehnTensor":
        return DehnTensor(tuple((c, r, l) for c, l, r in self.terms), self.bits)

    def __add__(self, other: "DehnTensor") -> "DehnTensor":
        return DehnTensor(self.terms + other.terms, self.bits)

    def describe(self, digits: int = 12) -> str:
        if not self.terms:
            return "0"
        ctx = context(self.bits)
        return " + ".join(f"{c}({ctx.nstr(l.value, digits)} ⊗ {ctx.nstr(r.value, digits)})" for c, l, r in self.terms)

    def to_json(self) -> dict:
        return {
            "bits": self.bits,
            "terms": [{"coefficient": c, "left": l.to_json(), "right": r.to_json()} for c, l, r in self.terms],
        }


def _close(x: Angle, y: Angle, bits: int) -> bool:
    return abs(x.value - y.value) < tolerance(bits, 16)


def dehn_invariant(s: SphericalSimplex) -> DehnTensor:
    """Σ_e l(e) ⊗ θ(e), numerically equal terms merged."""
    merged: list[list] = []
    for edge in s.edges:
        left, right = edge_length(s, *edge), dihedral(s, edge)
        for term in merged:
            if _close(term[1], left, s.bits) and _close(term[2], right, s.bits):
                term[0] += 1
                break
        else:
            merged.append([1, left, right])
    return DehnTensor(tuple((c, l, r) for c, l, r in merged), s.bits)


def integer_relation(xs: Sequence, height: int, bits: int) -> tuple[int, ...] | None:
    """Nonzero c with |c_i| ≤ height and |Σ c_i x_i| < 2^(-bits/2), found by PSLQ, or None."""
    if bits < MIN_RELATION_BITS:
        raise PrecisionError(f"integer relations need at least {MIN_RELATION_BITS} bits, got {bits}")
    if len(xs) * math.log2(max(height, 2)) > bits / 2:
        raise PrecisionError(f"{bits} bits cannot separate relations of height {height} among {len(xs)} numbers")
    ctx = context(bits)
    tol = ctx.mpf(2) ** (-(bits // 2))
    xs = [ctx.mpf(x) for x in xs]
    for i, x in enumerate(xs):
        if abs(x) < tol:
            return tuple(int(i == j) for j in range(len(xs)))
    if len(xs) < 2:
        return None
    relation = ctx.pslq(xs, tol=tol, maxcoeff=height + 1, maxsteps=PSLQ_MAXSTEPS)
    if relation is None or not any(relation):
        return None
    if max(abs(c) for c in relation) > height or abs(ctx.fdot(relation, xs)) >= tol:
        return None
    sign = 1 if next(c for c in relation if c) > 0 else -1
    return tuple(sign * c for c in relation)


def is_pi_rational(a: Angle, height: int) -> bool:
    if a.pi_rational is not None:
        return True
    relation = integer_relation([a.value, context(a.bits).pi], height, a.bits)
    return relation is not None and relation[0] != 0


def _same_class(x: Angle, y: Angle, height: int) -> int:
    """+1 if x ≡ y, -1 if x ≡ -y mod πQ, else 0."""
    if _close(x, y, x.bits):
        return 1
    relation = integer_relation([x.value, y.value, context(x.bits).pi], height, x.bits)
    if relation is None or relation[0] == 0:
        return 0
    if relation[0] == -relation[1]:
        return 1
    if relation[0] == relation[1]:
        return -1
    return 0


def reduce_tensor(t: DehnTensor, height: int) -> DehnTensor:
    """Drop π-rational factors and merge factors equal up to sign mod πQ."""
    representatives: list[Angle] = []

    def canonical(a: Angle) -> tuple[int, int]:
        for index, rep in enumerate(representatives):
            sign = _same_class(a, rep, height)
            if sign:
                return index, sign
        representatives.append(a)
        return len(representatives) - 1, 1

    totals: dict[tuple[int, int], int] = {}
    for c, left, right in t.terms:
        if is_pi_rational(left, height) or is_pi_rational(right, height):
            continue
        li, ls = canonical(left)
        ri, rs = canonical(right)
        totals[(li, ri)] = totals.get((li, ri), 0) + c * ls * rs
    terms = tuple((c, representatives[li], representatives[ri]) for (li, ri), c in totals.items() if c)
    return DehnTensor(terms, t.bits)


def _factor_basis(angles: list[Angle], height: int, bits: int) -> tuple[list[Angle], list[list[Fraction]], list]:
    """A Q-independent basis of the angles modulo πQ, with coordinates for each angle."""
    ctx = context(bits)
    basis: list[Angle] = []
    coordinates: list[list[Fraction]] = []
    relations = []
    for a in angles:
        if is_pi_rational(a, height):
            coordinates.append(None)
            continue
        relation = integer_relation([ctx.pi] + [b.value for b in basis] + [a.value], height, bits) if basis else None
        if relation is not None and relation[-1] != 0:
            relations.append(relation)
            coordinates.append([Fraction(-c, relation[-1]) for c in relation[1:-1]])
        else:
            basis.append(a)
            coordinates.append([Fraction(int(b is a)) for b in basis])
    size = len(basis)
    padded = [None if c is None else c + [Fraction(0)] * (size - len(c)) for c in coordinates]
    return basis, padded, relations


def cocomm_test(t: DehnTensor, height: int) -> Report:
    """Compare t with its swap as bilinear forms over a factor basis."""
    bits = t.bits
    angles: list[Angle] = []
    for _, left, right in t.terms:
        for a in (left, right):
            if not any(_close(a, b, bits) for b in angles):
                angles.append(a)
    angles.sort(key=lambda a: a.value)
    basis, coordinates, relations = _factor_basis(angles, height, bits)

    def lookup(a: Angle):
        return coordinates[next(i for i, b in enumerate(angles) if _close(a, b, bits))]

    size = len(basis)
    matrix = [[Fraction(0)] * size for _ in range(size)]
    for c, left, right in t.terms:
        lc, rc = lookup(left), lookup(right)
        if lc is None or rc is None:
            continue
        for p in range(size):
            for q in range(size):
                matrix[p][q] += c * lc[p] * rc[q]
    swapped = [list(row) for row in zip(*matrix)] if size else []
    equal = matrix == swapped
    logger.info(f"cocomm: basis size {size}, relations found {len(relations)}, equal={equal}")
    witness = {
        "verdict": "equal" if equal else "distinct",
        "basis": [a.to_json() for a in basis],
        "matrix": [[str(x) for x in row] for row in matrix],
        "swapped": [[str(x) for x in row] for row in swapped],
        "relations": [list(r) for r in relations],
        "bounds": {"height": height, "bits": bits, "maxsteps": PSLQ_MAXSTEPS},
    }
    return Report("cocomm", True, witness)
