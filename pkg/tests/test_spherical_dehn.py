from fractions import Fraction

import pytest

from errors import GeometryError, PrecisionError
from spherical_dehn import (
    Angle, DehnTensor, cocomm_test, context, dehn_invariant, dihedral, edge_length, integer_relation,
    reduce_tensor, regular_tetra, tetra_dihedral_formula, tolerance,
)

BITS = 256
HEIGHT = 10**6


def numeric(x, bits=BITS):
    return Angle(context(bits).mpf(x), bits)


@pytest.fixture
def ctx():
    return context(BITS)


def test_right_angled_tetrahedron_is_the_standard_frame(ctx):
    s = regular_tetra(Angle.from_pi_rational(Fraction(1, 2), BITS))
    for i, v in enumerate(s.vertices):
        assert v == tuple(ctx.mpf(int(i == j)) for j in range(4))
    assert all(dihedral(s, e).pi_rational == Fraction(1, 2) for e in s.edges)


def test_gram_matrix_at_pi_over_three(ctx):
    s = regular_tetra(Angle.from_pi_rational(Fraction(1, 3), BITS))
    assert s.gram_exact[0][1] == Fraction(1, 2)
    assert abs(s.dot(0, 1) - ctx.mpf(1) / 2) < tolerance(BITS, 16)


def test_largest_side_is_rejected():
    with pytest.raises(GeometryError):
        regular_tetra(Angle.from_cos(context(BITS).mpf(-1) / 3, BITS, Fraction(-1, 3)))
    with pytest.raises(GeometryError):
        regular_tetra(numeric(2))
    with pytest.raises(GeometryError):
        regular_tetra(numeric(0))


def test_dihedral_matches_the_formula_at_one_radian():
    a = numeric(1)
    s = regular_tetra(a)
    expected = tetra_dihedral_formula(a)
    for e in s.edges:
        assert abs(dihedral(s, e).value - expected.value) < context(BITS).mpf(2) ** -200
        assert abs(edge_length(s, *e).value - a.value) < tolerance(BITS, 16)


def test_euclidean_limit(ctx):
    s = regular_tetra(numeric(ctx.mpf(10) ** -6))
    assert abs(dihedral(s, (0, 1)).value - ctx.acos(ctx.mpf(1) / 3)) < ctx.mpf(10) ** -6


def test_formula_examples(ctx):
    assert tetra_dihedral_formula(Angle.from_pi_rational(Fraction(1, 2), BITS)).pi_rational == Fraction(1, 2)
    assert tetra_dihedral_formula(Angle.from_pi_rational(Fraction(1, 3), BITS)).exact_cos == Fraction(1, 4)
    near = numeric(ctx.acos(ctx.mpf(-1) / 3) - ctx.mpf(2) ** -40)
    assert ctx.pi - tetra_dihedral_formula(near).value < ctx.mpf(10) ** -4


def test_dehn_invariant_merges_the_six_edges():
    t = dehn_invariant(regular_tetra(numeric(1)))
    assert len(t.terms) == 1
    assert t.terms[0][0] == 6


def test_right_angled_invariant_reduces_to_zero():
    t = dehn_invariant(regular_tetra(Angle.from_pi_rational(Fraction(1, 2), BITS)))
    assert t.terms[0][0] == 6
    reduced = reduce_tensor(t, HEIGHT)
    assert reduced.is_zero()
    assert reduced.describe() == "0"


def test_integer_relation_examples(ctx):
    assert integer_relation([ctx.pi, ctx.pi / 3], HEIGHT, BITS) == (1, -3)
    relation = integer_relation([ctx.mpf(1), ctx.mpf(1) / 2, ctx.mpf(1) / 3], HEIGHT, BITS)
    assert relation is not None and any(relation)
    assert sum(c * x for c, x in zip(relation, [Fraction(1), Fraction(1, 2), Fraction(1, 3)])) == 0
    assert integer_relation([ctx.mpf(1), ctx.pi], HEIGHT, BITS) is None


def test_integer_relation_precision_guard(ctx):
    with pytest.raises(PrecisionError):
        integer_relation([ctx.pi, ctx.mpf(1)], HEIGHT, 64)
    with pytest.raises(PrecisionError):
        integer_relation([ctx.pi] * 20, HEIGHT, BITS)


def test_reduce_tensor_merges_and_is_idempotent():
    a = numeric(1)
    d = tetra_dihedral_formula(a)
    t = DehnTensor(((1, a, d), (1, a, d)), BITS)
    reduced = reduce_tensor(t, HEIGHT)
    assert [c for c, _, _ in reduced.terms] == [2]
    assert reduce_tensor(reduced, HEIGHT).terms == reduced.terms


def test_reduce_tensor_merges_negatives_mod_pi(ctx):
    a = numeric(1)
    shifted = numeric(ctx.pi - 1)
    t = DehnTensor(((1, a, a), (1, shifted, a)), BITS)
    assert reduce_tensor(t, HEIGHT).is_zero()


def test_cocomm_symmetric_tensors():
    x, y = numeric(1), numeric(context(BITS).sqrt(2))
    assert cocomm_test(DehnTensor(((1, x, x),), BITS), HEIGHT).witness["verdict"] == "equal"
    symmetric = DehnTensor(((1, x, y), (1, y, x)), BITS)
    assert cocomm_test(symmetric, HEIGHT).witness["verdict"] == "equal"


def test_cocomm_witness_at_one_radian():
    bits = 300
    a = Angle(context(bits).mpf(1), bits)
    t = reduce_tensor(dehn_invariant(regular_tetra(a)), HEIGHT)
    report = cocomm_test(t, HEIGHT)
    assert report.witness["verdict"] == "distinct"
    assert report.witness["relations"] == []
    swapped = cocomm_test(t.swap(), HEIGHT)
    assert swapped.witness["matrix"] == report.witness["swapped"]
