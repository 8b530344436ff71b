from fractions import Fraction

import pytest

from errors import AmbientMismatchError, ContainmentError, DegeneracyError
from exact_linalg import (
    add, complement_in, det, dot, dual_tuple, factorization_check, full_space, inverse, orientation_sign,
    orientation_twist, primitive, project, scale, span, zero_space, zero_vec,
)
from utils.sampling import RationalSampler

E1, E2 = (1, 0), (0, 1)


def test_span_examples():
    assert span([], 2) == zero_space(2)
    assert span([(2, 0), (0, 3)]).basis == ((1, 0), (0, 1))
    line = span([(1, 1), (2, 2)])
    assert line.rank == 1 and line.basis == ((1, 1),)


def test_span_dimension_mismatch():
    with pytest.raises(AmbientMismatchError):
        span([(1, 0), (1, 0, 0)])
    with pytest.raises(AmbientMismatchError):
        dot((1, 0), (1, 0, 0))


@pytest.mark.parametrize("u, expected", [
    ([E1], [E2]),
    ([(1, 1)], [(1, -1)]),
    ([E1, E2], []),
])
def test_complement_in_plane(u, expected):
    assert complement_in(full_space(2), span(u, 2)) == span(expected, 2)


def test_complement_requires_containment():
    with pytest.raises(ContainmentError):
        complement_in(span([E1]), span([E2]))


def test_complement_is_an_involution():
    sampler = RationalSampler(3)
    whole = full_space(4)
    for _ in range(10):
        u = span(sampler.basis(2, 4))
        assert complement_in(whole, complement_in(whole, u)) == u


def test_projection_examples():
    assert project(span([E1]), (3, 5)) == (3, 0)
    assert project(zero_space(2), (3, 5)) == (0, 0)
    assert project(span([(1, 1)]), E1) == (Fraction(1, 2), Fraction(1, 2))


def test_projections_onto_complements_add_up():
    sampler = RationalSampler(5)
    whole = full_space(3)
    for _ in range(10):
        u = span(sampler.basis(sampler.integer(0, 3), 3), 3)
        x = sampler.vector(3)
        p, q = project(u, x), project(complement_in(whole, u), x)
        assert tuple(a + b for a, b in zip(p, q)) == x


def test_dual_tuple_examples():
    assert dual_tuple([(1, 0, 0), (0, 1, 0), (0, 0, 1)]) == [(-1, 0, 0), (0, -1, 0), (0, 0, -1)]
    assert dual_tuple([E1, (1, 1)]) == [(-1, 1), (0, -1)]


def test_dual_tuple_pairings_and_involution():
    sampler = RationalSampler(7)
    for n in range(1, 5):
        t = sampler.basis(n)
        duals = dual_tuple(t)
        for i, d in enumerate(duals):
            assert dot(d, t[i]) < 0
            assert all(dot(d, t[j]) == 0 for j in range(n) if j != i)
        for v, w in zip(t, dual_tuple(duals)):
            assert primitive(v) == w


def test_dual_tuple_rejects_dependent():
    with pytest.raises(DegeneracyError):
        dual_tuple([(1, 1), (2, 2)])


def test_factorization_check():
    assert factorization_check([E1, (1, 1)], [1])
    assert factorization_check([(1, 0, 0), (0, 1, 0), (0, 0, 1)], [0, 2])
    sampler = RationalSampler(11)
    for _ in range(10):
        t = sampler.basis(sampler.integer(1, 5))
        assert factorization_check(t, sampler.subset(len(t)))


def test_orientation_sign():
    plane = full_space(2)
    assert orientation_sign([E1, E2], plane) == 1
    assert orientation_sign([E2, E1], plane) == -1
    assert orientation_sign([], zero_space(2)) == 1
    assert orientation_twist(span([E2]), span([E1])) == -1
    with pytest.raises(DegeneracyError):
        orientation_sign([E1], plane)


def test_inverse_and_primitive():
    assert inverse([[2, 0], [0, 4]]) == [(Fraction(1, 2), 0), (0, Fraction(1, 4))]
    with pytest.raises(DegeneracyError):
        inverse([[1, 2], [2, 4]])
    assert primitive((Fraction(1, 2), Fraction(1, 3))) == (3, 2)


def test_intersection_and_sum():
    xy = span([(1, 0, 0), (0, 1, 0)])
    yz = span([(0, 1, 0), (0, 0, 1)])
    assert xy.intersection(yz) == span([(0, 1, 0)])
    assert xy.sum(yz) == full_space(3)


def test_orientation_signs_follow_the_change_of_basis():
    sampler = RationalSampler(23)
    for _ in range(20):
        n = sampler.integer(1, 3)
        t = sampler.basis(n, 4)
        v = span(t)
        change = sampler.basis(n)
        moved = []
        for row in change:
            x = zero_vec(4)
            for c, w in zip(row, t):
                x = add(x, scale(c, w))
            moved.append(x)
        expected = 1 if det(change) > 0 else -1
        assert orientation_sign(t, v) * orientation_sign(moved, v) == expected
