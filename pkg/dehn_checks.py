# dehn_checks.py

from fractions import Fraction

from base_check import BaseCheck
from errors import GeometryError
from spherical_dehn import (
    Angle, cocomm_test, context, dehn_invariant, dihedral, edge_length, integer_relation, reduce_tensor,
    regular_tetra, tetra_dihedral_formula, tolerance,
)
from utils.parsing import parse_angle

COCOMM_BITS = 300
NEAR_ENDPOINT = 2 ** -40


class DihedralCheck(BaseCheck):
    """Projected dihedral angles of T_a against cos D = cos a / (1 + 2 cos a)."""

    name = "dihedral"
    instances = 50
    seed_offset = 1300
    time_budget = 5.0

    def __init__(self, config=None, instances=None):
        super().__init__(config, instances)
        self.bits = self.config.precision_bits
        self.curve = []

    def check_instance(self, index):
        ctx = context(self.bits)
        u = self.sampler.unit_interval(denominator=10**4)
        a = Angle(ctx.mpf(u.numerator) / u.denominator * ctx.acos(ctx.mpf(-1) / 3), self.bits)
        s = regular_tetra(a)
        expected = tetra_dihedral_formula(a)
        tol = tolerance(self.bits, 16)
        dihedral_error = max(abs(dihedral(s, e).value - expected.value) for e in s.edges)
        length_error = max(abs(edge_length(s, *e).value - a.value) for e in s.edges)
        self.curve.append((a.value, expected.value))
        detail = {"u": str(u), "dihedral_error": ctx.nstr(dihedral_error, 5), "length_error": ctx.nstr(length_error, 5)}
        return dihedral_error < tol and length_error < tol, detail

    def _right_angled(self):
        s = regular_tetra(parse_angle("pi/2", self.bits))
        tags = {dihedral(s, e).pi_rational for e in s.edges}
        return tags == {Fraction(1, 2)}, {"tags": sorted(str(q) for q in tags if q is not None)}

    def _euclidean_limit(self):
        ctx = context(self.bits)
        s = regular_tetra(Angle(ctx.mpf(10) ** -6, self.bits))
        error = abs(dihedral(s, (0, 1)).cos() - ctx.mpf(1) / 3)
        return error < ctx.mpf(10) ** -5, {"cos_error": ctx.nstr(error, 5)}

    def _largest(self):
        ctx = context(self.bits)
        a = Angle(ctx.acos(ctx.mpf(-1) / 3) - NEAR_ENDPOINT, self.bits)
        gap = ctx.pi - dihedral(regular_tetra(a), (0, 1)).value
        try:
            regular_tetra(parse_angle("arccos(-1/3)", self.bits))
            rejected = False
        except GeometryError:
            rejected = True
        return rejected and gap < ctx.mpf(10) ** -4, {"pi_gap": ctx.nstr(gap, 5), "endpoint_rejected": rejected}

    def _monotone(self):
        curve = sorted(self.curve)
        increasing = all(d0 <= d1 for (_, d0), (_, d1) in zip(curve, curve[1:]))
        lower = context(self.bits).acos(context(self.bits).mpf(1) / 3)
        return increasing and all(d >= lower for _, d in curve), {"points": len(curve)}

    def fixed_cases(self):
        return [
            ("a=pi/2", *self._right_angled()),
            ("a=1e-6", *self._euclidean_limit()),
            ("a->arccos(-1/3)", *self._largest()),
            ("monotone", *self._monotone()),
        ]


def tetra_tensor(side: str, bits: int, height: int):
    a = parse_angle(side, bits)
    raw = dehn_invariant(regular_tetra(a))
    return a, raw, reduce_tensor(raw, height)


class CocommCheck(BaseCheck):
    """6(a ⊗ D) against its swap for a generic and a right-angled side."""

    name = "cocommutativity"
    seed_offset = 1400
    time_budget = 10.0

    def _generic(self):
        height = self.config.relation_height
        a, raw, reduced = tetra_tensor("1", COCOMM_BITS, height)
        report = cocomm_test(reduced, height)
        _, left, right = raw.terms[0]
        relation = integer_relation([context(COCOMM_BITS).pi, left.value, right.value], height, COCOMM_BITS)
        detail = {"verdict": report.witness["verdict"], "relation": relation, "coefficient": raw.terms[0][0]}
        passed = report.witness["verdict"] == "distinct" and relation is None and len(raw.terms) == 1
        return passed, detail

    def _right_angled(self):
        height = self.config.relation_height
        _, _, reduced = tetra_tensor("pi/2", self.config.precision_bits, height)
        report = cocomm_test(reduced, height)
        return reduced.is_zero() and report.witness["verdict"] == "equal", {"verdict": report.witness["verdict"]}

    def fixed_cases(self):
        return [("a=1", *self._generic()), ("a=pi/2", *self._right_angled())]
