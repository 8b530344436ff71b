# flag_complex.py

"""Finite models of the doubly suspended Tits complex.

Cells are strict flags U_0 ⊊ ... ⊊ U_k in a finite lattice of subspaces.
Flags that miss 0 or the top space are collapsed to the basepoint, so the
reduced homology is computed from relative chains on flags running from 0
to the top.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import networkx as nx
import numpy as np

from errors import ComplexTooLargeError, LatticeError
from exact_linalg import Space, as_vec, span
from utils.smith import diagonalize, invariant_factors

logger = logging.getLogger(__name__)

MAX_CELLS = 20000
MAX_SPACES = 200

Flag = tuple[Space, ...]


def flag_key(flag: Flag):
    return tuple(u.sort_key() for u in flag)


def subset_lattice(
    vectors: Sequence, closed: bool = False, ambient_dim: int | None = None, max_spaces: int = MAX_SPACES,
) -> list[Space]:
    """Spans of all subsets, optionally closed under pairwise sum and intersection.

    Closures that pass max_spaces raise ComplexTooLargeError; four generic lines
    in Q^3 already generate an infinite lattice.
    """
    vectors = [as_vec(v) for v in vectors]
    n = ambient_dim if ambient_dim is not None else len(vectors[0])
    spaces = {span(list(sub), n) for k in range(len(vectors) + 1) for sub in combinations(vectors, k)}
    while closed:
        new = set()
        for u, w in combinations(spaces, 2):
            new.update(v for v in (u.sum(w), u.intersection(w)) if v not in spaces)
            if len(spaces) + len(new) > max_spaces:
                raise ComplexTooLargeError(f"Closing the lattice passes {max_spaces} spaces")
        if not new:
            break
        spaces |= new
    return sorted(spaces, key=Space.sort_key)


class Chain:
    """Integer cellular chain on non-collapsed cells of one degree."""

    def __init__(self, degree: int, coefficients: dict | None = None):
        self.degree = degree
        self.coefficients = {f: int(c) for f, c in (coefficients or {}).items() if c}

    def __iter__(self):
        return iter(self.coefficients.items())

    def __len__(self):
        return len(self.coefficients)

    def is_zero(self) -> bool:
        return not self.coefficients

    def __add__(self, other: "Chain") -> "Chain":
        terms = dict(self.coefficients)
        for f, c in other.coefficients.items():
            terms[f] = terms.get(f, 0) + c
        return Chain(self.degree, terms)

    def __rmul__(self, r: int) -> "Chain":
        return Chain(self.degree, {f: r * c for f, c in self.coefficients.items()})

    def __neg__(self):
        return (-1) * self

    def __sub__(self, other):
        return self + (-1) * other

    def __eq__(self, other):
        return isinstance(other, Chain) and self.degree == other.degree and self.coefficients == other.coefficients

    __hash__ = None

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "cells": [
                {"coefficient": c, "flag": [u.to_json() for u in f]}
                for f, c in sorted(self.coefficients.items(), key=lambda fc: flag_key(fc[0]))
            ],
        }


class FlagComplex:
    def __init__(self, lattice: Iterable[Space], max_cells: int = MAX_CELLS):
        self.lattice = sorted(set(lattice), key=Space.sort_key)
        if not self.lattice:
            raise LatticeError("An empty lattice has no flag complex")
        zeros = [u for u in self.lattice if u.rank == 0]
        if not zeros:
            raise LatticeError("The lattice does not contain the zero space")
        self.zero = zeros[0]
        self.top = self.lattice[-1]
        if not all(u.is_subspace_of(self.top) for u in self.lattice):
            raise LatticeError("The lattice has no top space")
        self.graph = nx.DiGraph()
        self.graph.add_nodes_from(self.lattice)
        for u in self.lattice:
            for w in self.lattice:
                if u != w and u.is_subspace_of(w):
                    self.graph.add_edge(u, w)
        self.basis = self._enumerate(max_cells)
        self.index = {k: {f: i for i, f in enumerate(flags)} for k, flags in self.basis.items()}
        logger.debug(f"flag complex: {len(self.lattice)} spaces, {sum(map(len, self.basis.values()))} cells")

    def _enumerate(self, max_cells: int) -> dict[int, list[Flag]]:
        """Non-collapsed cells by degree; these are exactly the relative flags."""
        cells: dict[int, list[Flag]] = {}
        for count, flag in enumerate(self.relative_flags(), 1):
            if count > max_cells:
                raise ComplexTooLargeError(f"More than {max_cells} flags from 0 to the top")
            cells.setdefault(len(flag) - 1, []).append(flag)
        return {k: sorted(flags, key=flag_key) for k, flags in sorted(cells.items())}

    @property
    def dimension(self) -> int:
        return self.top.rank

    def relative_flags(self) -> Iterator[Flag]:
        """Flags from 0 to the top, read off lazily as paths in the containment graph."""
        if self.zero == self.top:
            yield (self.zero,)
            return
        for path in nx.all_simple_paths(self.graph, self.zero, self.top):
            yield tuple(path)

    def euler_characteristic(self) -> int:
        """Reduced Euler characteristic of the quotient."""
        return sum((-1) ** k * len(flags) for k, flags in self.basis.items())

    def boundary_matrix(self, k: int) -> np.ndarray:
        """∂_k on relative chains: removing an interior vertex i carries (-1)^i."""
        cols = self.basis.get(k, [])
        rows = self.index.get(k - 1, {})
        matrix = np.zeros((len(rows), len(cols)), dtype=object)
        for j, flag in enumerate(cols):
            for i in range(1, len(flag) - 1):
                face = flag[:i] + flag[i + 1:]
                if face in rows:
                    matrix[rows[face], j] += (-1) ** i
        return matrix

    def vector(self, chain: Chain) -> np.ndarray:
        index = self.index.get(chain.degree, {})
        v = np.zeros(len(index), dtype=object)
        for flag, c in chain:
            if flag in index:
                v[index[flag]] += c
        return v

    def chain(self, degree: int, v: Sequence[int]) -> Chain:
        return Chain(degree, {f: int(c) for f, c in zip(self.basis.get(degree, []), v) if c != 0})

    def boundary(self, chain: Chain) -> Chain:
        return self.chain(chain.degree - 1, self.boundary_matrix(chain.degree).dot(self.vector(chain)))

    def to_json(self) -> dict:
        return {
            "lattice": [u.to_json() for u in self.lattice],
            "cells": {str(k): [[u.to_json() for u in f] for f in flags] for k, flags in self.basis.items()},
        }


def build_complex(lattice: Iterable[Space]) -> FlagComplex:
    return FlagComplex(lattice)


@dataclass
class HomologyGroup:
    degree: int
    betti: int
    torsion: list[int]
    generators: list[Chain]
    coordinate_map: np.ndarray = field(repr=False)

    def coordinates(self, complex_: FlagComplex, cycle: Chain) -> tuple[int, ...]:
        """Free coordinates of a cycle in the generator basis."""
        return tuple(int(x) for x in self.coordinate_map.dot(complex_.vector(cycle)))

    def to_json(self) -> dict:
        return {"degree": self.degree, "betti": self.betti, "torsion": self.torsion}


def homology_group(c: FlagComplex, k: int) -> HomologyGroup:
    cycles = diagonalize(c.boundary_matrix(k))
    mask = cycles.kernel_mask()
    kernel = cycles.Tinv[:, mask]
    to_kernel = cycles.T[mask, :]
    boundaries = to_kernel.dot(c.boundary_matrix(k + 1))
    quotient = diagonalize(boundaries)
    free = ~quotient.image_mask()
    torsion = [d for d in invariant_factors(quotient.diagonal) if d > 1]
    generators = [c.chain(k, kernel.dot(quotient.S[:, i])) for i in np.flatnonzero(free)]
    coordinate_map = quotient.Sinv[free, :].dot(to_kernel) if len(to_kernel) else np.zeros((0, len(c.basis.get(k, []))), dtype=object)
    logger.debug(f"H_{k}: rank {len(generators)}, torsion {torsion}")
    return HomologyGroup(k, len(generators), torsion, generators, coordinate_map)


def homology(c: FlagComplex, k: int) -> tuple[int, list[int]]:
    group = homology_group(c, k)
    return group.betti, group.torsion


def is_boundary(c: FlagComplex, z: Chain) -> bool:
    """Solve ∂_{k+1} x = z over the integers."""
    d = diagonalize(c.boundary_matrix(z.degree + 1))
    w = d.Sinv.dot(c.vector(z)) if len(c.vector(z)) else np.zeros(0, dtype=object)
    diagonal = d.diagonal
    for i, x in enumerate(w):
        di = diagonal[i] if i < len(diagonal) else 0
        if (di == 0 and x != 0) or (di != 0 and x % di != 0):
            return False
    return True
