# utils/sampling.py

from fractions import Fraction

import numpy as np

from exact_linalg import Vec, complement_in, full_space, is_independent, project, span, zero_space
from step_functions import CutSystem, StepFn

BOUND = 10**4


class RationalSampler:
    """Seeded source of rationals with numerators and denominators bounded by `bound`."""

    def __init__(self, seed: int, bound: int = BOUND):
        self.seed = seed
        self.bound = bound
        self.rng = np.random.default_rng(seed)

    def integer(self, low: int, high: int) -> int:
        """Uniform integer in [low, high]."""
        return int(self.rng.integers(low, high + 1))

    def rational(self, bound: int | None = None) -> Fraction:
        bound = bound or self.bound
        return Fraction(self.integer(-bound, bound), self.integer(1, bound))

    def unit_interval(self, denominator: int = 12) -> Fraction:
        """Rational strictly inside (0, 1) with a small denominator, so cut points collide now and then."""
        den = self.integer(2, denominator)
        return Fraction(self.integer(1, den - 1), den)

    def vector(self, dim: int, bound: int | None = None) -> Vec:
        return tuple(self.rational(bound) for _ in range(dim))

    def basis(self, n: int, dim: int | None = None, bound: int = 9) -> list[Vec]:
        """n independent vectors in Q^dim with small entries."""
        dim = n if dim is None else dim
        while True:
            t = [self.vector(dim, bound) for _ in range(n)]
            if is_independent(t):
                return t

    def integer_matrix(self, rows: int, cols: int, bound: int | None = None) -> np.ndarray:
        """rows x cols int64 array with entries uniform in [-bound, bound]."""
        bound = bound or self.bound
        return self.rng.integers(-bound, bound + 1, size=(rows, cols))

    def orthogonal_family(self, sizes: list[int], dim: int, bound: int = 9) -> list[list[Vec]]:
        """Independent tuples of the given sizes whose spans are pairwise orthogonal."""
        whole = full_space(dim)
        while True:
            families, used = [], []
            for size in sizes:
                rest = complement_in(whole, span(used, dim))
                t = [project(rest, self.vector(dim, bound)) for _ in range(size)]
                if not is_independent(t):
                    break
                families.append(t)
                used.extend(t)
            else:
                return families

    def subset(self, n: int) -> tuple[int, ...]:
        return tuple(i for i in range(n) if self.integer(0, 1))

    def permutation(self, n: int) -> list[int]:
        return [int(i) for i in self.rng.permutation(n)]

    def distinct_points(self, k: int, denominator: int = 12) -> list[Fraction]:
        """k distinct sorted rationals in (0, 1)."""
        points = set()
        while len(points) < k:
            points.add(self.unit_interval(denominator))
        return sorted(points)

    def step_function(self, t: list[Vec], ambient_dim: int | None = None) -> StepFn:
        """Non-basepoint step function climbing a random flag of span(t)."""
        n = ambient_dim if ambient_dim is not None else len(t[0])
        order = self.permutation(len(t))
        levels = sorted({len(t), *(j for j in self.subset(len(t)) if j)})
        values = [zero_space(n)] + [span([t[i] for i in order[:j]], n) for j in levels]
        return StepFn.from_cuts(span(t, n), self.distinct_points(len(values) - 1), values)

    def cut_system(self, arity: int, denominator: int = 12) -> CutSystem:
        """Little intervals in a random order, endpoints drawn from a coarse grid."""
        if arity == 0:
            return CutSystem(())
        points = self.distinct_points(2 * arity, denominator)
        if self.integer(0, 1):
            points[0] = Fraction(0)
        if self.integer(0, 1):
            points[-1] = Fraction(1)
        intervals = [(points[2 * i], points[2 * i + 1]) for i in range(arity)]
        return CutSystem(tuple(intervals[i] for i in self.permutation(arity)))
