# apartments.py

"""Apartment cycles and the homology-level product and coproduct formulas."""

import logging
from fractions import Fraction
from itertools import combinations, permutations
from typing import Sequence

import numpy as np

from errors import DegeneracyError, OrthogonalityError
from exact_linalg import Space, as_vec, complement_in, dual_tuple, is_independent, orientation_sign, orientation_twist, span
from flag_complex import Chain, FlagComplex, homology_group, is_boundary, subset_lattice
from polytope import delta, from_ls, ls_element, permutation_sign
from step_functions import CutSystem, StepFn, theta

logger = logging.getLogger(__name__)


def apartment_cycle(t: Sequence, ambient_dim: int | None = None, allow_degenerate: bool = False) -> Chain:
    """Σ_σ sgn(σ) [0 ⊊ <v_σ1> ⊊ <v_σ1, v_σ2> ⊊ ... ⊊ V]."""
    t = [as_vec(v) for v in t]
    n = ambient_dim if ambient_dim is not None else len(t[0])
    if not is_independent(t) and not allow_degenerate:
        raise DegeneracyError("apartment of a dependent tuple")
    cells = {}
    for order in permutations(range(len(t))):
        flag = tuple(span([t[i] for i in order[:j]], n) for j in range(len(t) + 1))
        if len(set(flag)) < len(flag):
            continue
        cells[flag] = cells.get(flag, 0) + permutation_sign(order)
    return Chain(len(t), cells)


def shuffle_product(a: Chain, b: Chain) -> Chain:
    """Eilenberg-Zilber shuffles of two flag chains, followed by (U, U') ↦ U ⊕ U'."""
    m, n = a.degree, b.degree
    cells = {}
    for fa, ca in a:
        for fb, cb in b:
            for steps in combinations(range(m + n), m):
                i = j = 0
                inversions = 0
                flag = [fa[0].sum(fb[0])]
                for s in range(m + n):
                    if s in steps:
                        inversions += j
                        i += 1
                    else:
                        j += 1
                    flag.append(fa[i].sum(fb[j]))
                flag = tuple(flag)
                cells[flag] = cells.get(flag, 0) + (-1) ** inversions * ca * cb
    return Chain(m + n, cells)


def chain_product_check(s: Sequence, t: Sequence) -> bool:
    """apt(s) × apt(t) and apt(s ⧺ t) define the same top class of the joint lattice."""
    s, t = [as_vec(v) for v in s], [as_vec(v) for v in t]
    n = len((s + t)[0])
    if not span(s, n).is_orthogonal_to(span(t, n)):
        raise OrthogonalityError("chain product needs orthogonal spans")
    product = shuffle_product(apartment_cycle(s, n, True), apartment_cycle(t, n, True))
    target = apartment_cycle(s + t, n, True)
    if product.is_zero() or target.is_zero():
        return product.is_zero() and target.is_zero()
    joint = FlagComplex(subset_lattice(s + t, ambient_dim=n))
    group = homology_group(joint, len(s) + len(t))
    if not joint.boundary(product).is_zero():
        return False
    return group.coordinates(joint, product) == group.coordinates(joint, target)


def _cube_point(t: Sequence, order: Sequence[int], k: int) -> StepFn:
    """Step function of an interior point of simplex `order` inside the sub-cube of its first k vectors."""
    n = len(t)
    whole = span(t)
    cuts, values = [], [span([], whole.ambient_dim)]
    for j, i in enumerate(order):
        if j < k:
            cuts.append(Fraction(j + 1, 2 * (k + 1)))
        else:
            cuts.append(Fraction(1, 2) + Fraction(j - k + 1, 2 * (n - k + 1)))
        values.append(span([t[m] for m in order[:j + 1]], whole.ambient_dim))
    return StepFn.from_cuts(whole, cuts, values)


def cut_apartment(t: Sequence) -> dict[tuple[Space, Space], dict]:
    """The cut map at the halves applied to apt(t), grouped by the splitting U ⊕ W."""
    t = [as_vec(v) for v in t]
    halves = CutSystem.halves()
    tensors: dict[tuple[Space, Space], dict] = {}
    for order in permutations(range(len(t))):
        sign = permutation_sign(order)
        for k in range(len(t) + 1):
            cut = theta(halves, _cube_point(t, order, k))
            left, right = cut.pieces
            cell = (tuple(left.values), tuple(right.values))
            bucket = tensors.setdefault((left.ambient, right.ambient), {})
            bucket[cell] = bucket.get(cell, 0) + sign
    return tensors


def formula_apartment(t: Sequence) -> tuple[dict, dict]:
    """Σ_S sgn(S) apt(S) ⊗ apt(pr S^c), read off from the Pt coproduct through the orientation signs."""
    t = [as_vec(v) for v in t]
    whole = span(t)
    n = whole.ambient_dim
    x = from_ls(ls_element([(t, 1)], whole))
    tensors: dict[tuple[Space, Space], dict] = {}
    factors = {}
    for (g, h), c in delta(x):
        sign = c * orientation_twist(g.ambient, h.ambient)
        sign *= orientation_sign(g.vectors, g.ambient) * orientation_sign(h.vectors, h.ambient)
        bucket = tensors.setdefault((g.ambient, h.ambient), {})
        factors[(g.ambient, h.ambient)] = (g.vectors, h.vectors)
        for fl, a in apartment_cycle(g.vectors, n):
            for fr, b in apartment_cycle(h.vectors, n):
                bucket[(fl, fr)] = bucket.get((fl, fr), 0) + sign * a * b
    return tensors, factors


def _tensor_matrix(left: FlagComplex, right: FlagComplex, kl: int, kr: int, cells: dict) -> np.ndarray:
    rows, cols = left.index.get(kl, {}), right.index.get(kr, {})
    matrix = np.zeros((len(rows), len(cols)), dtype=object)
    for (fl, fr), c in cells.items():
        matrix[rows[fl], cols[fr]] += c
    return matrix


def chain_coproduct_check(t: Sequence) -> bool:
    """Cutting apt(t) at the halves agrees in homology with Σ_S sgn(S) apt(S) ⊗ apt(pr S^c)."""
    t = [as_vec(v) for v in t]
    if not t or not is_independent(t):
        raise DegeneracyError("chain coproduct needs a nonempty independent tuple")
    n = len(t[0])
    cut = cut_apartment(t)
    formula, factors = formula_apartment(t)
    if set(cut) != set(formula):
        return False
    for grading, (gv, hv) in factors.items():
        u, w = grading
        left = FlagComplex(subset_lattice(gv, ambient_dim=n)) if gv else FlagComplex([u])
        right = FlagComplex(subset_lattice(hv, ambient_dim=n)) if hv else FlagComplex([w])
        kl, kr = len(gv), len(hv)
        m_cut = _tensor_matrix(left, right, kl, kr, cut[grading])
        m_formula = _tensor_matrix(left, right, kl, kr, formula[grading])
        if any(x != 0 for x in left.boundary_matrix(kl).dot(m_cut).flat):
            return False
        if any(x != 0 for x in m_cut.dot(right.boundary_matrix(kr).T).flat):
            return False
        pl = homology_group(left, kl).coordinate_map
        pr = homology_group(right, kr).coordinate_map
        if not np.array_equal(pl.dot(m_cut).dot(pr.T), pl.dot(m_formula).dot(pr.T)):
            logger.debug(f"coproduct mismatch on {u!r} ⊕ {w!r}")
            return False
    return True


def ls_relation_chain(t: Sequence) -> Chain:
    """Σ_i (-1)^i apt(v_1, ..., v̂_i, ..., v_{n+1})."""
    t = [as_vec(v) for v in t]
    total = Chain(len(t) - 1)
    for i in range(len(t)):
        total = total + (-1) ** (i + 1) * apartment_cycle(t[:i] + t[i + 1:])
    return total


def boundary_relation_check(t: Sequence, closed: bool = False) -> bool:
    """The alternating apartment sum of n + 1 vectors is a boundary in their lattice."""
    t = [as_vec(v) for v in t]
    complex_ = FlagComplex(subset_lattice(t, closed))
    relation = ls_relation_chain(t)
    return complex_.boundary(relation).is_zero() and is_boundary(complex_, relation)


def complement_flag_map(chain: Chain, whole: Space) -> Chain:
    """0 ⊊ U_1 ⊊ ... ⊊ V ↦ 0 ⊊ V⊖U_{k-1} ⊊ ... ⊊ V⊖U_1 ⊊ V, reversing the vertex order."""
    k = chain.degree
    sign = (-1) ** (k * (k + 1) // 2)
    return Chain(k, {tuple(complement_in(whole, u) for u in reversed(f)): sign * c for f, c in chain})


def flag_antipode_check(t: Sequence) -> bool:
    """The complement map carries apt(t) to (-1)^n apt(t^∨)."""
    t = [as_vec(v) for v in t]
    n = len(t[0])
    duals = dual_tuple(t)
    whole = span(t)
    complex_ = FlagComplex(set(subset_lattice(t)) | set(subset_lattice(duals)))
    group = homology_group(complex_, len(t))
    image = complement_flag_map(apartment_cycle(t, n), whole)
    target = (-1) ** len(t) * apartment_cycle(duals, n)
    return complex_.boundary(image).is_zero() and group.coordinates(complex_, image) == group.coordinates(complex_, target)
