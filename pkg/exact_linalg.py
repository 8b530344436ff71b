# exact_linalg.py

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import Iterable, Sequence

from errors import AmbientMismatchError, ContainmentError, DegeneracyError

Vec = tuple[Fraction, ...]


def as_vec(coords: Iterable) -> Vec:
    return tuple(Fraction(c) for c in coords)


def dot(x: Vec, y: Vec) -> Fraction:
    if len(x) != len(y):
        raise AmbientMismatchError(f"Vectors of length {len(x)} and {len(y)} do not share an ambient")
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def add(x: Vec, y: Vec) -> Vec:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Vec, y: Vec) -> Vec:
    return tuple(a - b for a, b in zip(x, y))


def scale(k, x: Vec) -> Vec:
    return tuple(k * a for a in x)


def neg(x: Vec) -> Vec:
    return tuple(-a for a in x)


def zero_vec(n: int) -> Vec:
    return (Fraction(0),) * n


def is_zero(x: Vec) -> bool:
    return all(a == 0 for a in x)


def format_vec(x: Vec) -> str:
    return "(" + ",".join(str(a) for a in x) + ")"


def _rref(rows: Sequence[Sequence], ncols: int) -> tuple[list[Vec], tuple[int, ...]]:
    """Reduced row-echelon form over Q. Returns the nonzero rows and their pivot columns."""
    m = [[Fraction(a) for a in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        lead = m[r][c]
        m[r] = [a / lead for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in m[:r]], tuple(pivots)


def nullspace(rows: Sequence[Vec], ncols: int) -> list[Vec]:
    reduced, pivots = _rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def rank(vectors: Sequence[Vec]) -> int:
    if not vectors:
        return 0
    return len(_rref(vectors, len(vectors[0]))[1])


def is_independent(vectors: Sequence[Vec]) -> bool:
    return rank(vectors) == len(vectors)


def det(matrix: Sequence[Sequence]) -> Fraction:
    m = [[Fraction(a) for a in row] for row in matrix]
    n = len(m)
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            result = -result
        result *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return result


def inverse(matrix: Sequence[Sequence]) -> list[Vec]:
    n = len(matrix)
    augmented = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    reduced, pivots = _rref(augmented, 2 * n)
    if pivots[:n] != tuple(range(n)) or len(reduced) < n:
        raise DegeneracyError("Matrix is singular")
    return [tuple(row[n:]) for row in reduced]


def mat_vec(matrix: Sequence[Vec], x: Vec) -> Vec:
    return tuple(sum((a * b for a, b in zip(row, x)), Fraction(0)) for row in matrix)


def solve(columns: Sequence[Vec], rhs: Vec) -> Vec | None:
    """One solution c of sum_j c_j columns[j] = rhs, free variables set to 0; None if inconsistent."""
    k = len(columns)
    rows = [[col[i] for col in columns] + [rhs[i]] for i in range(len(rhs))]
    reduced, pivots = _rref(rows, k + 1)
    if pivots and pivots[-1] == k:
        return None
    c = [Fraction(0)] * k
    for row, p in zip(reduced, pivots):
        c[p] = row[k]
    return tuple(c)


def primitive(x: Vec) -> Vec:
    """Positive rescaling of x to integer coordinates with gcd 1."""
    if is_zero(x):
        raise DegeneracyError("The zero vector has no primitive rescaling")
    den = lcm(*(a.denominator for a in x))
    ints = [int(a * den) for a in x]
    g = gcd(*ints)
    return tuple(Fraction(a // g) for a in ints)


@dataclass(frozen=True)
class Space:
    """A subspace of Q^N held as its reduced row-echelon basis; equality is canonical-form equality."""
    ambient_dim: int
    basis: tuple[Vec, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, a in enumerate(row) if a != 0) for row in self.basis)

    def coordinates(self, x: Vec) -> Vec:
        """Coordinates of x in the echelon basis; x must lie in the space."""
        return tuple(x[p] for p in self.pivots)

    def contains(self, x: Vec) -> bool:
        if len(x) != self.ambient_dim:
            raise AmbientMismatchError(f"Vector of length {len(x)} in ambient of dimension {self.ambient_dim}")
        residual = x
        for row, p in zip(self.basis, self.pivots):
            if residual[p] != 0:
                residual = sub(residual, scale(residual[p], row))
        return is_zero(residual)

    def is_subspace_of(self, other: "Space") -> bool:
        _check_ambients(self, other)
        return self.rank <= other.rank and all(other.contains(b) for b in self.basis)

    def sum(self, other: "Space") -> "Space":
        _check_ambients(self, other)
        return span(self.basis + other.basis, self.ambient_dim)

    def intersection(self, other: "Space") -> "Space":
        _check_ambients(self, other)
        perp = orthogonal_complement(self).basis + orthogonal_complement(other).basis
        return orthogonal_complement(span(perp, self.ambient_dim))

    def is_orthogonal_to(self, other: "Space") -> bool:
        _check_ambients(self, other)
        return all(dot(a, b) == 0 for a in self.basis for b in other.basis)

    def sort_key(self):
        return (self.rank, self.basis)

    def to_json(self) -> list[list[str]]:
        return [[str(a) for a in row] for row in self.basis]

    def __repr__(self) -> str:
        return "<" + ", ".join(format_vec(b) for b in self.basis) + ">" if self.basis else "<0>"


def _check_ambients(u: Space, w: Space) -> None:
    if u.ambient_dim != w.ambient_dim:
        raise AmbientMismatchError(f"Spaces live in Q^{u.ambient_dim} and Q^{w.ambient_dim}")


def span(vectors: Sequence[Vec], ambient_dim: int | None = None) -> Space:
    vectors = [as_vec(v) for v in vectors]
    if ambient_dim is None:
        if not vectors:
            raise AmbientMismatchError("Ambient dimension is required to span no vectors")
        ambient_dim = len(vectors[0])
    for v in vectors:
        if len(v) != ambient_dim:
            raise AmbientMismatchError(f"Vector {format_vec(v)} does not lie in Q^{ambient_dim}")
    reduced, _ = _rref(vectors, ambient_dim)
    return Space(ambient_dim, tuple(reduced))


def zero_space(n: int) -> Space:
    return Space(n, ())


def full_space(n: int) -> Space:
    return span([tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)], n)


def orthogonal_complement(u: Space) -> Space:
    return span(nullspace(u.basis, u.ambient_dim), u.ambient_dim)


def complement_in(v: Space, u: Space) -> Space:
    """V ⊖ U: the orthogonal complement of U inside V."""
    if not u.is_subspace_of(v):
        raise ContainmentError(f"{u!r} is not contained in {v!r}")
    return v.intersection(orthogonal_complement(u))


def project(u: Space, x: Vec) -> Vec:
    """Orthogonal projection of x onto U by the Gram normal equations."""
    x = as_vec(x)
    if len(x) != u.ambient_dim:
        raise AmbientMismatchError(f"Vector of length {len(x)} in ambient of dimension {u.ambient_dim}")
    if u.rank == 0:
        return zero_vec(u.ambient_dim)
    gram = [[dot(a, b) for b in u.basis] for a in u.basis]
    c = solve([tuple(col) for col in zip(*gram)], tuple(dot(b, x) for b in u.basis))
    result = zero_vec(u.ambient_dim)
    for ci, b in zip(c, u.basis):
        result = add(result, scale(ci, b))
    return result


def dual_tuple(t: Sequence[Vec]) -> list[Vec]:
    """v_i^∨: the primitive vector orthogonal to the other v_j with v_i^∨·v_i < 0."""
    t = [as_vec(v) for v in t]
    if not t:
        return []
    if not is_independent(t):
        raise DegeneracyError("dual tuple of a dependent tuple")
    n = len(t[0])
    whole = span(t, n)
    duals = []
    for i, v in enumerate(t):
        others = span(t[:i] + t[i + 1:], n)
        duals.append(primitive(project(complement_in(whole, others), neg(v))))
    return duals


def factorization_check(t: Sequence[Vec], subset: Iterable[int]) -> bool:
    """Projection onto the complement of all but v_j factors through projection onto V ⊖ <S>."""
    t = [as_vec(v) for v in t]
    subset = set(subset)
    if not t:
        return True
    n = len(t[0])
    whole = span(t, n)
    rest = complement_in(whole, span([t[i] for i in subset], n))
    samples = list(whole.basis) + t
    for j in range(len(t)):
        if j in subset:
            continue
        lhs = complement_in(whole, span(t[:j] + t[j + 1:], n))
        projected = [project(rest, t[k]) for k in range(len(t)) if k not in subset and k != j]
        rhs = complement_in(rest, span(projected, n))
        for x in samples:
            if project(lhs, x) != project(rhs, project(rest, x)):
                return False
    return True


def orientation_sign(t: Sequence[Vec], v: Space) -> int:
    """Sign of det(t) in the echelon basis of V, which itself has sign +1."""
    t = [as_vec(x) for x in t]
    if len(t) != v.rank or not all(v.contains(x) for x in t) or not is_independent(t):
        raise DegeneracyError(f"Tuple is not a basis of {v!r}")
    if not t:
        return 1
    return 1 if det([v.coordinates(x) for x in t]) > 0 else -1


def orientation_twist(u: Space, w: Space) -> int:
    return orientation_sign(u.basis + w.basis, u.sum(w))
