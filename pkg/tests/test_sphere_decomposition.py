import numpy as np
import pytest

from errors import AmbientMismatchError, DegeneracyError
from polytope import element, normalize
from sphere_decomposition import SphereDecomposition, cover_check, hopf_check, locate, sphere_sum
from utils.sampling import RationalSampler

E1, E2 = (1, 0), (0, 1)


def test_locate_interior_of_the_whole_cone():
    result = locate((2, 5), [E1, E2])
    assert result.subset == (0, 1)
    [strict] = result.strict
    assert strict.a == (2, 5) and strict.b == ()


def test_locate_mixed_cone():
    result = locate((-1, 3), [E1, E2])
    assert result.subset == (1,)
    [strict] = result.strict
    assert strict.a == (3,) and strict.b == (1,)


def test_locate_reports_boundary_ties():
    result = locate((0, 1), [E1, E2])
    assert result.subset is None
    assert result.on_boundary
    assert {d.subset for d in result.decompositions} == {(1,), (0, 1)}


def test_locate_outside_the_span():
    with pytest.raises(AmbientMismatchError):
        locate((0, 0, 1), [(1, 0, 0), (0, 1, 0)])


def test_sphere_decomposition_rejects_dependent():
    with pytest.raises(DegeneracyError):
        SphereDecomposition([(1, 1), (2, 2)])


@pytest.mark.parametrize("t", [[E1, E2], [E1, (1, 1)], [(1, 2, 0), (0, 1, 1), (3, 0, 1)]])
def test_cover_check_passes(t):
    report = cover_check(t, 200, seed=0)
    assert report.passed
    assert report.witness["counterexample"] is None


def test_cover_check_is_deterministic():
    t = [(2, 1), (1, -3)]
    assert cover_check(t, 100, seed=9).to_json() == cover_check(t, 100, seed=9).to_json()


def test_hopf_identity_in_degree_one_is_syntactically_zero():
    report = hopf_check([(3,)], samples=50)
    assert report.passed
    assert report.witness["syntactically_zero"]


def test_sphere_sum_of_the_quadrants_cancels():
    assert sphere_sum([E1, E2]).is_zero()


def test_sphere_sum_has_one_cone_per_subset():
    total = sphere_sum([E1, (1, 1)])
    assert len(total) == 4
    g, sign = normalize([E1, (1, 1)])
    assert total[g] == sign


@pytest.mark.parametrize("t", [[E1, E2], [E1, (1, 1)]])
def test_hopf_check_examples(t):
    report = hopf_check(t, samples=200)
    assert report.passed
    assert report.witness["termwise"] and report.witness["antipode_transport"]


def test_hopf_check_on_seeded_bases():
    sampler = RationalSampler(12)
    for n in range(1, 5):
        assert hopf_check(sampler.basis(n), samples=50, seed=n).passed


def test_hopf_check_rejects_dependent():
    with pytest.raises(DegeneracyError):
        hopf_check([(1, 1), (2, 2)])


def test_sphere_sum_matches_element_grading():
    t = [E1, (1, 1)]
    assert sphere_sum(t).grading == element(t).grading


def test_integer_classification_agrees_with_locate():
    d = SphereDecomposition([(2, 1, 0), (1, -3, 1), (0, 1, 5)])
    coords = RationalSampler(4).integer_matrix(3, 40, bound=3)
    covered, interiors = d.classify(coords)
    for i in range(40):
        result = d.locate(d.point(coords[:, i]))
        assert bool(covered[i]) == result.covered
        assert int(interiors[i]) == len(result.strict)


def test_classification_of_huge_coordinates_stays_exact():
    d = SphereDecomposition([E1, (1, 1)])
    big = np.array([[10**20], [-(10**20) + 1]], dtype=object)
    covered, interiors = d.classify(big)
    result = d.locate(d.point(big[:, 0]))
    assert bool(covered[0]) == result.covered
    assert int(interiors[0]) == len(result.strict)


def test_cover_check_without_samples():
    report = cover_check([E1, E2], 0, seed=0)
    assert report.passed
    assert report.witness["boundary_points"] == 0


def test_locate_rejects_the_wrong_ambient():
    with pytest.raises(AmbientMismatchError):
        locate((1, 0, 0), [E1, (1, 1)])
