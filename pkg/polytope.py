# polytope.py

"""Free presentation of the reduced polytope group and its Hopf operations.

Generators [v_1, ..., v_n] are unordered: negating a vector flips the sign,
positive rescaling and reordering do nothing. The ordered Lee-Szczarba view
(v_1, ..., v_n) is exported through to_ls / from_ls using the orientation of
each grading space's echelon basis.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Sequence

from sympy.combinatorics import Permutation

from errors import AmbientMismatchError, DegeneracyError, OrthogonalityError
from exact_linalg import (
    Space, Vec, as_vec, complement_in, dual_tuple, is_independent, orientation_sign,
    orientation_twist, primitive, project, span, zero_space,
)


@dataclass(frozen=True)
class Generator:
    ambient: Space
    vectors: tuple[Vec, ...]

    @property
    def degree(self) -> int:
        return len(self.vectors)

    def sort_key(self):
        return (self.ambient.ambient_dim, self.vectors)

    def to_json(self) -> list[list[str]]:
        return [[str(a) for a in v] for v in self.vectors]


def _positive_primitive(v: Vec) -> tuple[Vec, int]:
    p = primitive(v)
    lead = next(a for a in p if a != 0)
    return (p, 1) if lead > 0 else (tuple(-a for a in p), -1)


def _ambient(vectors: list[Vec]) -> int:
    if not vectors:
        raise AmbientMismatchError("Ambient dimension is required for the empty tuple")
    return len(vectors[0])


def normalize(vectors: Sequence, ambient_dim: int | None = None) -> tuple[Generator, int] | None:
    """Canonical generator and sign for a tuple, or None when the tuple is dependent."""
    vectors = [as_vec(v) for v in vectors]
    if ambient_dim is None:
        ambient_dim = _ambient(vectors)
    if not vectors:
        return Generator(zero_space(ambient_dim), ()), 1
    if not is_independent(vectors):
        return None
    sign = 1
    normal = []
    for v in vectors:
        p, s = _positive_primitive(v)
        normal.append(p)
        sign *= s
    normal.sort()
    return Generator(span(normal, ambient_dim), tuple(normal)), sign


def permutation_sign(order: Sequence[int]) -> int:
    if len(order) < 2:
        return 1
    return Permutation(list(order)).signature()


class Combination:
    """Finite formal integer combination of hashable keys, homogeneous in one grading space."""

    def __init__(self, terms: dict | None = None, grading: Space | None = None):
        self.terms = {k: int(c) for k, c in (terms or {}).items() if c}
        self.grading = grading

    def _new(self, terms):
        return type(self)(terms, self.grading)

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, key):
        return self.terms.get(key, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return self._new(terms)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, r: int):
        return self._new({k: r * c for k, c in self.terms.items()})

    def __eq__(self, other):
        return type(self) is type(other) and self.grading == other.grading and self.terms == other.terms

    __hash__ = None

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kc: self._key_order(kc[0]))

    @staticmethod
    def _key_order(key):
        return key

    def __repr__(self):
        return f"{type(self).__name__}({len(self)} terms over {self.grading!r})"


class Element(Combination):
    """Element of the polytope group graded by a single space."""

    def __init__(self, terms=None, grading=None):
        super().__init__(terms, grading)
        for g in self.terms:
            if g.ambient != self.grading:
                raise OrthogonalityError(f"Generator graded by {g.ambient!r} inside element graded by {self.grading!r}")

    @staticmethod
    def _key_order(key):
        return key.sort_key()

    def to_json(self) -> dict:
        return {
            "grading": self.grading.to_json(),
            "terms": [{"coefficient": c, "vectors": g.to_json()} for g, c in self.sorted_terms()],
        }


class TensorElement(Combination):
    """Combination of pairs x@U ⊗ y@W with U ⊥ W and U ⊕ W equal to the grading."""

    def __init__(self, terms=None, grading=None):
        super().__init__(terms, grading)
        for left, right in self.terms:
            if not left.ambient.is_orthogonal_to(right.ambient) or left.ambient.sum(right.ambient) != self.grading:
                raise OrthogonalityError(f"Tensor factors {left.ambient!r}, {right.ambient!r} do not split {self.grading!r}")

    @staticmethod
    def _key_order(key):
        return (key[0].sort_key(), key[1].sort_key())

    def to_json(self) -> dict:
        return {
            "grading": self.grading.to_json(),
            "terms": [
                {"coefficient": c, "left": a.to_json(), "right": b.to_json()}
                for (a, b), c in self.sorted_terms()
            ],
        }


def element(vectors: Sequence, ambient_dim: int | None = None, coefficient: int = 1) -> Element:
    vectors = [as_vec(v) for v in vectors]
    if ambient_dim is None:
        ambient_dim = _ambient(vectors)
    normal = normalize(vectors, ambient_dim)
    if normal is None:
        return Element({}, span(vectors, ambient_dim))
    g, sign = normal
    return Element({g: coefficient * sign}, g.ambient)


def unit(k: int, ambient_dim: int) -> Element:
    g, _ = normalize([], ambient_dim)
    return Element({g: k}, g.ambient)


def counit(x: Element) -> int:
    if x.grading.rank != 0:
        return 0
    return sum(c for g, c in x if g.degree == 0)


def mu(x: Element, y: Element) -> Element:
    """Join product: concatenate tuples then normalize."""
    if not x.grading.is_orthogonal_to(y.grading):
        raise OrthogonalityError(f"Cannot join over {x.grading!r} and {y.grading!r}")
    n = x.grading.ambient_dim
    terms = {}
    for g, c in x:
        for h, d in y:
            joined, sign = normalize(g.vectors + h.vectors, n)
            terms[joined] = terms.get(joined, 0) + c * d * sign
    return Element(terms, x.grading.sum(y.grading))


def _split(g: Generator, grading: Space, subset: Sequence[int]) -> tuple[Generator, Generator, int]:
    """[S] ⊗ [pr_{V⊖<S>} S^c] for one subset, with the normalization sign."""
    n = grading.ambient_dim
    chosen = [g.vectors[i] for i in subset]
    rest = [v for i, v in enumerate(g.vectors) if i not in subset]
    left, s1 = normalize(chosen, n)
    complement = complement_in(grading, left.ambient)
    right, s2 = normalize([project(complement, v) for v in rest], n)
    return left, right, s1 * s2


def subsets(n: int) -> Iterable[tuple[int, ...]]:
    for k in range(n + 1):
        yield from combinations(range(n), k)


def delta(x: Element) -> TensorElement:
    """Dehn coproduct: sum over all subsets S of [S] ⊗ [pr S^c]."""
    terms = {}
    for g, c in x:
        for subset in subsets(g.degree):
            left, right, sign = _split(g, x.grading, subset)
            terms[(left, right)] = terms.get((left, right), 0) + c * sign
    return TensorElement(terms, x.grading)


def antipode(x: Element) -> Element:
    n = x.grading.ambient_dim
    terms = {}
    for g, c in x:
        dual, sign = normalize(dual_tuple(g.vectors), n) if g.vectors else (g, 1)
        terms[dual] = terms.get(dual, 0) + c * sign
    return Element(terms, x.grading)


def mu_tensor(t: TensorElement, left: Callable[[Element], Element] | None = None,
              right: Callable[[Element], Element] | None = None) -> Element:
    """μ ∘ (left ⊗ right) applied to a tensor."""
    result = Element({}, t.grading)
    for (a, b), c in t:
        x = Element({a: 1}, a.ambient)
        y = Element({b: 1}, b.ambient)
        if left is not None:
            x = left(x)
        if right is not None:
            y = right(y)
        result = result + c * mu(x, y)
    return result


def _as_element(x) -> Element:
    return Element({x: 1}, x.ambient) if isinstance(x, Generator) else x


def coassociativity_check(x: Element) -> bool:
    """(δ⊗id)δ x and (id⊗δ)δ x agree term by term."""
    lhs, rhs = {}, {}
    for (a, b), c in delta(x):
        for (a1, a2), d in delta(_as_element(a)):
            lhs[(a1, a2, b)] = lhs.get((a1, a2, b), 0) + c * d
        for (b1, b2), d in delta(_as_element(b)):
            rhs[(a, b1, b2)] = rhs.get((a, b1, b2), 0) + c * d
    return {k: v for k, v in lhs.items() if v} == {k: v for k, v in rhs.items() if v}


def counit_check(x: Element) -> bool:
    d = delta(x)
    left = Element({b: c for (a, b), c in d if a.degree == 0}, x.grading)
    right = Element({a: c for (a, b), c in d if b.degree == 0}, x.grading)
    return left == x and right == x


def bialg_check(x, y) -> bool:
    """δ∘μ against (μ⊗μ)(1⊗τ⊗1)(δ⊗δ) on orthogonal arguments."""
    x, y = _as_element(x), _as_element(y)
    if not x.grading.is_orthogonal_to(y.grading):
        raise OrthogonalityError(f"{x.grading!r} and {y.grading!r} are not orthogonal")
    n = x.grading.ambient_dim
    lhs = delta(mu(x, y))
    terms = {}
    for (a, b), c1 in delta(x):
        for (c, d), c2 in delta(y):
            left, s1 = normalize(a.vectors + c.vectors, n)
            right, s2 = normalize(b.vectors + d.vectors, n)
            terms[(left, right)] = terms.get((left, right), 0) + c1 * c2 * s1 * s2
    return lhs == TensorElement(terms, lhs.grading)


def antipode_product_check(x, y) -> bool:
    x, y = _as_element(x), _as_element(y)
    return antipode(mu(x, y)) == mu(antipode(x), antipode(y))


# Lee-Szczarba view


class LsElement(Combination):
    """Ordered tuples, each stored positively oriented in its span."""

    def to_json(self) -> dict:
        return {
            "grading": self.grading.to_json(),
            "terms": [
                {"coefficient": c, "vectors": [[str(a) for a in v] for v in key]}
                for key, c in self.sorted_terms()
            ],
        }


class LsTensor(Combination):
    pass


def ls_normalize(vectors: Sequence) -> tuple[tuple[Vec, ...], int] | None:
    """Ordered normal form: rescale freely, sort, then fix orientation with one swap."""
    vectors = [as_vec(v) for v in vectors]
    if not vectors:
        return (), 1
    if not is_independent(vectors):
        return None
    normal = [_positive_primitive(v)[0] for v in vectors]
    order = sorted(range(len(normal)), key=lambda i: normal[i])
    key = [normal[i] for i in order]
    sign = permutation_sign(order)
    if orientation_sign(key, span(key)) < 0:
        key[0], key[1] = key[1], key[0]
        sign = -sign
    return tuple(key), sign


def ls_element(tuples: Iterable[tuple[Sequence, int]], grading: Space) -> LsElement:
    terms = {}
    for vectors, c in tuples:
        normal = ls_normalize(vectors)
        if normal is None:
            continue
        key, sign = normal
        terms[key] = terms.get(key, 0) + c * sign
    return LsElement(terms, grading)


def to_ls(x: Element) -> LsElement:
    """[t] ↦ ε(t)·(t), ε the orientation against the echelon basis."""
    terms = {}
    for g, c in x:
        key, sign = ls_normalize(g.vectors)
        eps = orientation_sign(g.vectors, g.ambient)
        terms[key] = terms.get(key, 0) + c * sign * eps
    return LsElement(terms, x.grading)


def from_ls(x: LsElement) -> Element:
    """(t) ↦ ε(t)·[t]."""
    n = x.grading.ambient_dim
    terms = {}
    for key, c in x:
        g, sign = normalize(key, n)
        eps = orientation_sign(key, g.ambient)
        terms[g] = terms.get(g, 0) + c * sign * eps
    return Element(terms, x.grading)


def boundary_relation(t: Sequence) -> Element:
    """Σ_i (-1)^i (v_1, ..., v̂_i, ..., v_{n+1}) carried into the polytope group."""
    t = [as_vec(v) for v in t]
    grading = span(t)
    faces = []
    for i in range(len(t)):
        face = t[:i] + t[i + 1:]
        if not is_independent(face) or len(face) != grading.rank:
            raise DegeneracyError(f"Face {i + 1} of the relation is degenerate")
        faces.append((face, (-1) ** (i + 1)))
    return from_ls(ls_element(faces, grading))


def ls_coproduct(t: Sequence) -> LsTensor:
    """Σ_S sgn(S) (S) ⊗ (pr S^c), sgn(S) the sign of the shuffle (S, S^c)."""
    t = [as_vec(v) for v in t]
    grading = span(t)
    terms = {}
    for subset in subsets(len(t)):
        rest = [i for i in range(len(t)) if i not in subset]
        chosen = [t[i] for i in subset]
        complement = complement_in(grading, span(chosen, grading.ambient_dim))
        left, s1 = ls_normalize(chosen)
        right, s2 = ls_normalize([project(complement, t[i]) for i in rest])
        sign = permutation_sign(list(subset) + rest) * s1 * s2
        terms[(left, right)] = terms.get((left, right), 0) + sign
    return LsTensor(terms, grading)


def ls_antipode(t: Sequence) -> LsElement:
    t = [as_vec(v) for v in t]
    grading = span(t)
    return ls_element([(dual_tuple(t), (-1) ** len(t))], grading)


def ls_transport_check(t: Sequence) -> bool:
    """The Pt coproduct and antipode, carried through the orientation isomorphism, give the Ls formulas."""
    t = [as_vec(v) for v in t]
    grading = span(t)
    x = from_ls(ls_element([(t, 1)], grading))
    terms = {}
    for (a, b), c in delta(x):
        left, s1 = ls_normalize(a.vectors)
        right, s2 = ls_normalize(b.vectors)
        eps = orientation_sign(a.vectors, a.ambient) * orientation_sign(b.vectors, b.ambient)
        twist = orientation_twist(a.ambient, b.ambient)
        terms[(left, right)] = terms.get((left, right), 0) + c * s1 * s2 * eps * twist
    coproduct_ok = LsTensor(terms, grading) == ls_coproduct(t)
    return coproduct_ok and to_ls(antipode(x)) == ls_antipode(t)
