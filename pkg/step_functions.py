# step_functions.py

"""Step functions [0,1] → subspaces and the little-intervals cut coproduct.

A StepFn is a weakly increasing chain of subspaces with rational step
lengths. It is the basepoint unless it starts at 0 and ends at its ambient.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from errors import ContainmentError, OrthogonalityError, UsageError
from exact_linalg import Space, complement_in, zero_space

Step = tuple[Fraction, Space]


@dataclass(frozen=True)
class StepFn:
    ambient: Space
    steps: tuple[Step, ...]

    @classmethod
    def build(cls, ambient: Space, steps: Sequence[tuple]) -> "StepFn":
        """Normal form: positive lengths summing to 1, adjacent equal values merged."""
        merged: list[list] = []
        for length, value in steps:
            length = Fraction(length)
            if length <= 0:
                raise UsageError(f"Step length {length} is not positive")
            if not value.is_subspace_of(ambient):
                raise ContainmentError(f"Step value {value!r} is not inside {ambient!r}")
            if merged and merged[-1][1] == value:
                merged[-1][0] += length
                continue
            if merged and not merged[-1][1].is_subspace_of(value):
                raise ContainmentError(f"Step values {merged[-1][1]!r} and {value!r} do not form a chain")
            merged.append([length, value])
        if sum(length for length, _ in merged) != 1:
            raise UsageError("Step lengths must sum to 1")
        return cls(ambient, tuple((length, value) for length, value in merged))

    @classmethod
    def from_cuts(cls, ambient: Space, cuts: Sequence, values: Sequence[Space]) -> "StepFn":
        points = [Fraction(0)] + [Fraction(c) for c in cuts] + [Fraction(1)]
        if len(values) != len(points) - 1:
            raise UsageError("A step function with k cut points takes k + 1 values")
        return cls.build(ambient, [(b - a, v) for a, b, v in zip(points, points[1:], values)])

    @classmethod
    def constant(cls, ambient: Space, value: Space | None = None) -> "StepFn":
        return cls.build(ambient, [(1, ambient if value is None else value)])

    @property
    def values(self) -> list[Space]:
        return [value for _, value in self.steps]

    @property
    def cuts(self) -> list[Fraction]:
        points, position = [], Fraction(0)
        for length, _ in self.steps[:-1]:
            position += length
            points.append(position)
        return points

    @property
    def is_basepoint(self) -> bool:
        return self.steps[0][1].rank != 0 or self.steps[-1][1] != self.ambient

    def value_at(self, s) -> Space:
        """Value on the step containing s, taking the right-hand step at a cut point."""
        s = Fraction(s)
        position = Fraction(0)
        for length, value in self.steps:
            position += length
            if s < position:
                return value
        return self.steps[-1][1]

    def restrict(self, a, b) -> "StepFn":
        """φ ∘ (x ↦ a + (b - a)x)."""
        a, b = Fraction(a), Fraction(b)
        width = b - a
        pieces, position = [], Fraction(0)
        for length, value in self.steps:
            lo, hi = max(position, a), min(position + length, b)
            if hi > lo:
                pieces.append(((hi - lo) / width, value))
            position += length
        return StepFn.build(self.ambient, pieces)

    def complement(self, u: Space) -> "StepFn":
        """Every value W replaced by W ⊖ U, inside the ambient ⊖ U."""
        return StepFn.build(complement_in(self.ambient, u), [(length, complement_in(v, u)) for length, v in self.steps])

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient.to_json(),
            "basepoint": self.is_basepoint,
            "steps": [{"length": str(length), "value": value.to_json()} for length, value in self.steps],
        }


def stepfn_oplus(phi: StepFn, psi: StepFn) -> StepFn:
    """(φ⊕ψ)(s) = φ(s) ⊕ ψ(s) on the common refinement of the cut points."""
    if not phi.ambient.is_orthogonal_to(psi.ambient):
        raise OrthogonalityError(f"{phi.ambient!r} and {psi.ambient!r} are not orthogonal")
    points = sorted({Fraction(0), Fraction(1), *phi.cuts, *psi.cuts})
    steps = []
    for a, b in zip(points, points[1:]):
        mid = (a + b) / 2
        steps.append((b - a, phi.value_at(mid).sum(psi.value_at(mid))))
    return StepFn.build(phi.ambient.sum(psi.ambient), steps)


@dataclass(frozen=True)
class CutSystem:
    """An element of D_1(n): little intervals with disjoint interiors."""
    intervals: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        normal = tuple((Fraction(a), Fraction(b)) for a, b in self.intervals)
        object.__setattr__(self, "intervals", normal)
        for a, b in normal:
            if not 0 <= a < b <= 1:
                raise UsageError(f"Interval [{a}, {b}] is not a subinterval of [0, 1]")
        ordered = sorted(normal)
        for (_, b), (a, _) in zip(ordered, ordered[1:]):
            if a < b:
                raise UsageError("Little intervals overlap")

    @property
    def arity(self) -> int:
        return len(self.intervals)

    @classmethod
    def unit(cls) -> "CutSystem":
        return cls(((0, 1),))

    @classmethod
    def halves(cls) -> "CutSystem":
        return cls(((0, Fraction(1, 2)), (Fraction(1, 2), 1)))

    def permuted(self, order: Sequence[int]) -> "CutSystem":
        """σ*e = (e_σ(1), ..., e_σ(n))."""
        return CutSystem(tuple(self.intervals[i] for i in order))

    def to_json(self) -> list[list[str]]:
        return [[str(a), str(b)] for a, b in self.intervals]


def operad_compose(e: CutSystem, fs: Sequence[CutSystem]) -> CutSystem:
    if len(fs) != e.arity:
        raise UsageError(f"Operad composition needs {e.arity} inputs, got {len(fs)}")
    intervals = []
    for (a, b), f in zip(e.intervals, fs):
        for c, d in f.intervals:
            intervals.append((a + (b - a) * c, a + (b - a) * d))
    return CutSystem(tuple(intervals))


@dataclass(frozen=True)
class ThetaResult:
    flag: tuple[Space, ...]
    pieces: tuple[StepFn, ...]

    def to_json(self) -> dict:
        return {"flag": [u.to_json() for u in self.flag], "pieces": [p.to_json() for p in self.pieces]}


def theta(e: CutSystem, phi: StepFn) -> ThetaResult | None:
    """Cut φ along e; None stands for the basepoint."""
    if phi.is_basepoint:
        return None
    if e.arity == 0:
        return ThetaResult((phi.ambient,), ()) if phi.ambient.rank == 0 else None
    cuts = set(phi.cuts)
    order = sorted(range(e.arity), key=lambda i: e.intervals[i])
    flag = [zero_space(phi.ambient.ambient_dim)]
    for i in order[:-1]:
        b = e.intervals[i][1]
        if b in cuts:
            return None
        flag.append(phi.value_at(b))
    flag.append(phi.ambient)
    pieces: list[StepFn | None] = [None] * e.arity
    for k, i in enumerate(order):
        a, b = e.intervals[i]
        if b in cuts:
            return None
        piece = phi.restrict(a, b)
        piece = StepFn.build(flag[k + 1], list(piece.steps)).complement(flag[k])
        if piece.is_basepoint:
            return None
        pieces[i] = piece
    return ThetaResult(tuple(flag), tuple(pieces))


def iterated_theta(e: CutSystem, fs: Sequence[CutSystem], phi: StepFn) -> tuple[StepFn, ...] | None:
    outer = theta(e, phi)
    if outer is None:
        return None
    pieces = []
    for f, piece in zip(fs, outer.pieces):
        inner = theta(f, piece)
        if inner is None:
            return None
        pieces.extend(inner.pieces)
    return tuple(pieces)


def operad_compatibility_check(e: CutSystem, fs: Sequence[CutSystem], phi: StepFn) -> bool:
    composed = theta(operad_compose(e, fs), phi)
    iterated = iterated_theta(e, fs, phi)
    if composed is None or iterated is None:
        return composed is None and iterated is None
    return composed.pieces == iterated


def equivariance_check(e: CutSystem, phi: StepFn, order: Sequence[int]) -> bool:
    plain = theta(e, phi)
    shuffled = theta(e.permuted(order), phi)
    if plain is None or shuffled is None:
        return plain is None and shuffled is None
    return shuffled.pieces == tuple(plain.pieces[i] for i in order)


def prod_coprod_check(phi: StepFn, psi: StepFn, e: CutSystem) -> bool:
    """θ(e, φ⊕ψ) against the componentwise sums of θ(e, φ) and θ(e, ψ)."""
    joint = theta(e, stepfn_oplus(phi, psi))
    left, right = theta(e, phi), theta(e, psi)
    if left is None or right is None:
        return joint is None
    if joint is None:
        return False
    return joint.pieces == tuple(stepfn_oplus(p, q) for p, q in zip(left.pieces, right.pieces))
