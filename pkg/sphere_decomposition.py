# sphere_decomposition.py

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np

from data import Report
from errors import AmbientMismatchError, DegeneracyError
from exact_linalg import Vec, add, as_vec, dual_tuple, format_vec, inverse, is_independent, mat_vec, scale, solve, zero_vec
from polytope import Element, antipode, delta, element, mu_tensor, normalize, subsets
from utils.sampling import RationalSampler

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Decomposition:
    """x = Σ_{i∈S} a_i v_i + Σ_{j∉S} b_j v_j^∨ with all coefficients nonnegative."""
    subset: tuple[int, ...]
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]
    strict: bool

    def to_json(self) -> dict:
        return {
            "subset": list(self.subset),
            "a": [str(q) for q in self.a],
            "b": [str(q) for q in self.b],
            "strict": self.strict,
        }


@dataclass(frozen=True)
class LocateResult:
    point: Vec
    decompositions: tuple[Decomposition, ...]

    @property
    def strict(self) -> list[Decomposition]:
        return [d for d in self.decompositions if d.strict]

    @property
    def subset(self) -> tuple[int, ...] | None:
        strict = self.strict
        return strict[0].subset if len(strict) == 1 else None

    @property
    def covered(self) -> bool:
        return bool(self.decompositions)

    @property
    def on_boundary(self) -> bool:
        return self.covered and not self.strict

    def to_json(self) -> dict:
        return {
            "point": format_vec(self.point),
            "subset": None if self.subset is None else list(self.subset),
            "decompositions": [d.to_json() for d in self.decompositions],
        }


class SphereDecomposition:
    """The 2^n cones [S ⊔ (S^c)^∨] of a basis, one inverted linear system per subset.

    Systems act on coordinates in the basis t itself. Each inverse is also kept
    scaled by a positive integer, so cone membership of many integer points is
    one exact matrix product and a sign test.
    """

    def __init__(self, t: Sequence):
        self.t = [as_vec(v) for v in t]
        if not self.t or not is_independent(self.t):
            raise DegeneracyError("sphere decomposition needs a nonempty independent tuple")
        n = len(self.t)
        self.duals = dual_tuple(self.t)
        dual_coords = [solve(self.t, v) for v in self.duals]
        unit_coords = [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
        self.systems = []
        scaled = []
        for subset in subsets(n):
            rest = tuple(j for j in range(n) if j not in subset)
            columns = [unit_coords[i] for i in subset] + [dual_coords[j] for j in rest]
            inv = inverse([tuple(row) for row in zip(*columns)])
            self.systems.append((subset, rest, inv))
            den = lcm(*(a.denominator for row in inv for a in row))
            scaled.extend([int(a * den) for a in row] for row in inv)
        self.scaled = np.array(scaled, dtype=object)
        self.height = max(abs(a) for row in scaled for a in row)

    def coordinates(self, x: Sequence) -> Vec:
        x = as_vec(x)
        if len(x) != len(self.t[0]):
            raise AmbientMismatchError(f"{format_vec(x)} does not lie in Q^{len(self.t[0])}")
        coords = solve(self.t, x)
        if coords is None:
            raise AmbientMismatchError(f"{format_vec(x)} is not in the span of the tuple")
        return coords

    def locate(self, x: Sequence) -> LocateResult:
        x = as_vec(x)
        coords = self.coordinates(x)
        found = []
        for subset, rest, inv in self.systems:
            c = mat_vec(inv, coords)
            if all(q >= 0 for q in c):
                k = len(subset)
                found.append(Decomposition(subset, c[:k], c[k:], all(q > 0 for q in c)))
        return LocateResult(x, tuple(found))

    def point(self, coords: Sequence[int]) -> Vec:
        point = zero_vec(len(self.t[0]))
        for c, v in zip(coords, self.t):
            point = add(point, scale(int(c), v))
        return point

    def classify(self, coords: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """For integer t-coordinates (one column per point): covered mask and count of open cones."""
        n = len(self.t)
        if self.height * n * int(abs(coords).max(initial=0)) < 2**62:
            values = self.scaled.astype(np.int64) @ coords.astype(np.int64)
        else:
            values = self.scaled @ coords.astype(object)
        values = values.reshape(2**n, n, coords.shape[1])
        covered = np.asarray(values >= 0, dtype=bool).all(axis=1).any(axis=0)
        interiors = np.asarray(values > 0, dtype=bool).all(axis=1).sum(axis=0)
        return covered, interiors

    def cover(self, samples: int, seed: int) -> Report:
        sampler = RationalSampler(seed)
        logger.info(f"cover-check: n={len(self.t)}, samples={samples}, seed={seed}")
        coords = sampler.integer_matrix(len(self.t), samples)
        covered, interiors = self.classify(coords)
        bad = np.flatnonzero(~covered | (interiors > 1))
        counterexample = None
        if bad.size:
            counterexample = self.locate(self.point(coords[:, bad[0]])).to_json()
        witness = {
            "basis": [format_vec(v) for v in self.t],
            "duals": [format_vec(v) for v in self.duals],
            "samples": samples,
            "seed": seed,
            "boundary_points": int((covered & (interiors == 0)).sum()),
            "counterexample": counterexample,
        }
        return Report("cover-check", counterexample is None, witness)


def locate(x: Sequence, t: Sequence) -> LocateResult:
    return SphereDecomposition(t).locate(x)


def cover_check(t: Sequence, samples: int, seed: int) -> Report:
    """Seeded points of the span each lie in some cone, and in the interior of at most one."""
    return SphereDecomposition(t).cover(samples, seed)


def sphere_sum(t: Sequence) -> Element:
    """Σ_S [S ⊔ (S^c)^∨] for the normalized generator of t, with its sign."""
    x = element(t)
    result = Element({}, x.grading)
    for g, c in x:
        duals = dual_tuple(g.vectors)
        terms = {}
        for subset in subsets(g.degree):
            vectors = [g.vectors[i] for i in subset] + [duals[j] for j in range(g.degree) if j not in subset]
            cone, sign = normalize(vectors, x.grading.ambient_dim)
            terms[cone] = terms.get(cone, 0) + c * sign
        result = result + Element(terms, x.grading)
    return result


def hopf_check(t: Sequence, samples: int = 1000, seed: int = 0) -> Report:
    """μ(id⊗α)δ[t] matches the sphere sum, α transports μ(α⊗id)δ[t] onto it, and the cones cover V."""
    decomposition = SphereDecomposition(t)
    t = decomposition.t
    x = element(t)
    coproduct = delta(x)
    e1 = mu_tensor(coproduct, right=antipode)
    e2 = mu_tensor(coproduct, left=antipode)
    termwise = e1 == sphere_sum(t)
    transported = antipode(e2) == e1
    cover = decomposition.cover(samples, seed)
    logger.debug(f"hopf-check: termwise={termwise}, transported={transported}, cover={cover.passed}")
    witness = {
        "basis": [format_vec(v) for v in t],
        "coproduct_terms": len(coproduct),
        "identity_terms": len(e1),
        "syntactically_zero": e1.is_zero(),
        "termwise": termwise,
        "antipode_transport": transported,
        "cover": cover.witness,
    }
    return Report("hopf-check", termwise and transported and cover.passed, witness)
