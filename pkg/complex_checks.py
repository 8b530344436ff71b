# complex_checks.py

from apartments import apartment_cycle, boundary_relation_check, chain_coproduct_check, chain_product_check, flag_antipode_check
from base_check import BaseCheck
from exact_linalg import format_vec, is_independent
from flag_complex import FlagComplex, homology_group, subset_lattice
from step_functions import equivariance_check, operad_compatibility_check, prod_coprod_check

LINE_COUNTS = (2, 3, 4, 5)
CHAIN_CASES = (("product", 1, 1), ("product", 1, 2), ("coproduct", 1), ("coproduct", 2), ("coproduct", 3))


def _vectors(t):
    return [format_vec(v) for v in t]


def pairwise_independent(sampler, k, dim=2, bound=9):
    vectors = []
    while len(vectors) < k:
        v = sampler.vector(dim, bound)
        if is_independent([v]) and all(is_independent([v, w]) for w in vectors):
            vectors.append(v)
    return vectors


class SolomonTitsCheck(BaseCheck):
    """Reduced top homology of the finite models, and apartments as generators."""

    name = "solomon-tits"
    seed_offset = 800
    time_budget = 30.0

    def _model(self, vectors, degree, betti, apartment=True):
        complex_ = FlagComplex(subset_lattice(vectors))
        group = homology_group(complex_, degree)
        detail = {"vectors": _vectors(vectors), "betti": group.betti, "torsion": group.torsion}
        passed = group.betti == betti and not group.torsion
        if apartment:
            cycle = apartment_cycle(vectors)
            coordinates = group.coordinates(complex_, cycle)
            detail["apartment"] = list(coordinates)
            passed = passed and complex_.boundary(cycle).is_zero() and coordinates in ((1,), (-1,))
        return passed, detail

    def fixed_cases(self):
        cases = [("line", *self._model([(1,)], 1, 1))]
        for k in LINE_COUNTS:
            lines = pairwise_independent(self.sampler, k)
            cases.append((f"{k}-lines", *self._model(lines, 2, k - 1, apartment=k == 2)))
        cases.append(("boolean-3", *self._model(self.sampler.basis(3), 3, 1)))
        return cases


class BoundaryRelationCheck(BaseCheck):
    name = "boundary-relation"
    instances = 20
    seed_offset = 900

    def check_instance(self, index):
        t = pairwise_independent(self.sampler, 3)
        return boundary_relation_check(t), {"vectors": _vectors(t)}


class ChainFormulaCheck(BaseCheck):
    """Product and coproduct formulas for apartment classes, cycling through CHAIN_CASES."""

    name = "chain-formulas"
    instances = 15
    seed_offset = 1000

    def check_instance(self, index):
        kind, *sizes = CHAIN_CASES[index % len(CHAIN_CASES)]
        if kind == "product":
            s, t = self.sampler.orthogonal_family(sizes, sum(sizes))
            return chain_product_check(s, t), {"kind": kind, "left": _vectors(s), "right": _vectors(t)}
        t = self.sampler.basis(sizes[0])
        return chain_coproduct_check(t), {"kind": kind, "vectors": _vectors(t)}


class StepCoalgebraCheck(BaseCheck):
    """Equivariance, operad compatibility and product compatibility of the cut map."""

    name = "step-coalgebra"
    instances = 100
    seed_offset = 1100

    def check_instance(self, index):
        max_dim = min(4, self.config.max_dim)
        d = self.sampler.integer(1, max_dim)
        t = self.sampler.basis(d, self.sampler.integer(d, max_dim))
        phi = self.sampler.step_function(t)
        arity = self.sampler.integer(1, 3)
        e = self.sampler.cut_system(arity)
        fs = [self.sampler.cut_system(self.sampler.integer(1, 2)) for _ in range(arity)]
        p = self.sampler.integer(1, 2)
        q = self.sampler.integer(1, 2)
        s, u = self.sampler.orthogonal_family([p, q], p + q)
        checks = {
            "equivariance": equivariance_check(e, phi, self.sampler.permutation(arity)),
            "operad": operad_compatibility_check(e, fs, phi),
            "product": prod_coprod_check(self.sampler.step_function(s), self.sampler.step_function(u), e),
        }
        return all(checks.values()), {"intervals": e.to_json(), **checks}


class FlagAntipodeCheck(BaseCheck):
    name = "flag-antipode"
    instances = 10
    seed_offset = 1200

    def check_instance(self, index):
        t = self.sampler.basis(self.sampler.integer(1, 3))
        return flag_antipode_check(t), {"vectors": _vectors(t)}
