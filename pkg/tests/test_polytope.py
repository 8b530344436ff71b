import pytest

from errors import AmbientMismatchError, DegeneracyError, OrthogonalityError
from exact_linalg import full_space, span
from polytope import (
    Element, antipode, antipode_product_check, bialg_check, boundary_relation, coassociativity_check, counit,
    counit_check, delta, element, from_ls, ls_antipode, ls_coproduct, ls_element, ls_transport_check, mu,
    normalize, to_ls, unit,
)
from utils.sampling import RationalSampler

E1, E2 = (1, 0), (0, 1)


def test_normalize_examples():
    g, sign = normalize([(0, 2), (3, 0)])
    assert g.vectors == ((0, 1), (1, 0)) and sign == 1
    g, sign = normalize([(-1, 0), (0, 1)])
    assert g.vectors == ((0, 1), (1, 0)) and sign == -1
    assert normalize([(1, 1), (2, 2)]) is None


def test_element_of_dependent_tuple_is_zero():
    assert element([(1, 1), (2, 2)]).is_zero()


def test_mu_examples():
    assert mu(element([E1]), element([E2])) == element([E1, E2])
    x = element([(1, 1)])
    assert mu(unit(1, 2), x) == x
    joined = mu(element([(1, 0, 0), (1, 1, 0)]), element([(0, 0, 1)]))
    assert joined == element([(1, 0, 0), (1, 1, 0), (0, 0, 1)])


def test_mu_rejects_non_orthogonal():
    with pytest.raises(OrthogonalityError):
        mu(element([E1]), element([(1, 1)]))


def test_mu_is_commutative_and_associative():
    s, t, u = RationalSampler(2).orthogonal_family([1, 2, 1], 4)
    x, y, z = element(s), element(t), element(u)
    assert mu(x, y) == mu(y, x)
    assert mu(mu(x, y), z) == mu(x, mu(y, z))


def test_delta_of_a_vector_is_primitive():
    d = delta(element([(2, 3)]))
    assert len(d) == 2
    assert {(a.degree, b.degree) for (a, b), _ in d} == {(0, 1), (1, 0)}


def test_delta_of_orthogonal_pair():
    d = delta(element([E1, E2]))
    assert len(d) == 4
    assert all(c == 1 for _, c in d)


def test_delta_projects_the_complement():
    d = delta(element([E1, (1, 1)]))
    assert len(d) == 4
    [(left, right)] = [key for key, _ in d if key[0].vectors == (E1,)]
    assert right.vectors == (E2,)
    assert d[(left, right)] == 1


def test_antipode_examples():
    x = element([E1, E2])
    assert antipode(x) == x
    assert antipode(unit(1, 2)) == unit(1, 2)
    y = element([(1, 2, 0), (0, 1, 1), (3, 0, 1)], coefficient=-2)
    assert antipode(antipode(y)) == y


def test_counit_and_unit():
    assert counit(unit(3, 2)) == 3
    assert counit(element([E1])) == 0
    assert unit(1, 2) == Element({normalize([], 2)[0]: 1}, span([], 2))


def test_bialgebra_examples():
    assert bialg_check(element([E1]), element([E2]))
    assert bialg_check(unit(1, 2), element([(1, 1)]))
    with pytest.raises(OrthogonalityError):
        bialg_check(element([E1]), element([(1, 1)]))


def test_bialgebra_on_seeded_pairs():
    sampler = RationalSampler(4)
    for _ in range(5):
        p, q = sampler.integer(1, 2), sampler.integer(1, 2)
        s, t = sampler.orthogonal_family([p, q], p + q)
        assert bialg_check(element(s), element(t))
        assert antipode_product_check(element(s), element(t))


def test_coassociativity_and_counit():
    x = element([(1, 0, 0), (1, 1, 0), (1, 1, 1)])
    assert coassociativity_check(x)
    assert counit_check(x)


def test_boundary_relation_examples():
    assert boundary_relation([(1,), (2,)]).is_zero()
    assert boundary_relation([(1,), (-1,)]).is_zero()
    relation = boundary_relation([E1, E2, (1, 1)])
    assert len(relation) == 3


def test_boundary_relation_rejects_degenerate_face():
    with pytest.raises(DegeneracyError):
        boundary_relation([E1, (2, 0), E2])


def test_to_ls_examples():
    x = element([E1, E2])
    ls = to_ls(x)
    assert ls[(E1, E2)] == 1
    assert from_ls(ls) == x
    swapped = ls_element([([E2, E1], 1)], full_space(2))
    assert from_ls(swapped) == -x


def test_ls_round_trip_on_seeded_elements():
    sampler = RationalSampler(8)
    for n in range(1, 4):
        x = element(sampler.basis(n), coefficient=sampler.integer(-3, 3) or 1)
        assert from_ls(to_ls(x)) == x


def test_ls_formulas():
    t = [E1, (1, 1)]
    assert len(ls_coproduct(t)) == 4
    assert ls_antipode([E1, E2]) == ls_element([([E1, E2], 1)], full_space(2))
    assert ls_transport_check(t)
    assert ls_transport_check([(1, 2, 0), (0, 1, 1), (3, 0, 1)])


def test_empty_tuple_needs_an_ambient():
    g, sign = normalize([], 3)
    assert g.degree == 0 and sign == 1
    assert g.ambient.rank == 0
    with pytest.raises(AmbientMismatchError):
        normalize([])
    with pytest.raises(AmbientMismatchError):
        element([])
    assert element([], 2) == unit(1, 2)
