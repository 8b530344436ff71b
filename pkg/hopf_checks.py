# hopf_checks.py

from base_check import BaseCheck
from data import Config
from exact_linalg import factorization_check, format_vec
from polytope import (
    antipode, antipode_product_check, bialg_check, coassociativity_check, counit_check, element,
    ls_transport_check,
)
from sphere_decomposition import cover_check, hopf_check

PER_DIM = 50


def _vectors(t):
    return [format_vec(v) for v in t]


class _PerDimension(BaseCheck):
    """Batteries that draw PER_DIM bases for each n up to min(4, max_dim)."""

    per_dim = PER_DIM

    def __init__(self, config: Config | None = None, per_dim: int | None = None):
        super().__init__(config)
        self.per_dim = per_dim or self.per_dim
        self.instances = self.per_dim * min(4, self.config.max_dim)

    def dimension(self, index):
        return 1 + index // self.per_dim


class HopfIdentityCheck(_PerDimension):
    name = "hopf-identity"
    seed_offset = 200
    time_budget = 60.0

    def check_instance(self, index):
        t = self.sampler.basis(self.dimension(index))
        report = hopf_check(t, self.config.samples, self.seed + index)
        return report.passed, None if report.passed else report.witness


class CoverCheck(_PerDimension):
    name = "sphere-cover"
    seed_offset = 300

    def check_instance(self, index):
        t = self.sampler.basis(self.dimension(index))
        report = cover_check(t, self.config.samples, self.seed + index)
        return report.passed, None if report.passed else report.witness


class BialgebraCheck(BaseCheck):
    """δμ = (μ⊗μ)(1⊗τ⊗1)(δ⊗δ), coassociativity and counit on orthogonal pairs of total size ≤ 6."""

    name = "bialgebra"
    instances = 100
    seed_offset = 400

    def check_instance(self, index):
        p = self.sampler.integer(1, 5)
        q = self.sampler.integer(1, 6 - p)
        s, t = self.sampler.orthogonal_family([p, q], p + q)
        joined = element(s + t)
        checks = {
            "bialgebra": bialg_check(element(s), element(t)),
            "coassociative": coassociativity_check(joined),
            "counit": counit_check(joined),
        }
        return all(checks.values()), {"left": _vectors(s), "right": _vectors(t), **checks}


class AntipodeCheck(BaseCheck):
    name = "antipode"
    instances = 100
    seed_offset = 500

    def check_instance(self, index):
        n = self.sampler.integer(1, self.config.max_dim)
        t = self.sampler.basis(n)
        x = element(t)
        involution = antipode(antipode(x)) == x
        p, q = self.sampler.integer(1, 2), self.sampler.integer(1, 2)
        s, u = self.sampler.orthogonal_family([p, q], p + q)
        multiplicative = antipode_product_check(element(s), element(u))
        detail = {"vectors": _vectors(t), "involution": involution, "multiplicative": multiplicative}
        return involution and multiplicative, detail


class FactorizationCheck(BaseCheck):
    name = "projection-factorization"
    instances = 50
    seed_offset = 600

    def check_instance(self, index):
        t = self.sampler.basis(self.sampler.integer(1, self.config.max_dim))
        subset = self.sampler.subset(len(t))
        return factorization_check(t, subset), {"vectors": _vectors(t), "subset": list(subset)}


class LsTransportCheck(BaseCheck):
    name = "ls-transport"
    instances = 30
    seed_offset = 700

    def check_instance(self, index):
        t = self.sampler.basis(self.sampler.integer(1, 3))
        return ls_transport_check(t), {"vectors": _vectors(t)}
