# suite.py

import contextlib
import io
import logging
import os
import sys

import pandas as pd
from tqdm import tqdm

from base_check import BaseCheck
from complex_checks import BoundaryRelationCheck, ChainFormulaCheck, FlagAntipodeCheck, SolomonTitsCheck, StepCoalgebraCheck
from data import Config, Report
from dehn_checks import CocommCheck, DihedralCheck
from hopf_checks import AntipodeCheck, BialgebraCheck, CoverCheck, FactorizationCheck, HopfIdentityCheck, LsTransportCheck

logger = logging.getLogger(__name__)

# Acceptance order; every item seeds its sampler with config.seed + its seed_offset
CHECKS = {
    "dihedral": DihedralCheck,
    "hopf-identity": HopfIdentityCheck,
    "sphere-cover": CoverCheck,
    "bialgebra": BialgebraCheck,
    "antipode": AntipodeCheck,
    "solomon-tits": SolomonTitsCheck,
    "boundary-relation": BoundaryRelationCheck,
    "chain-formulas": ChainFormulaCheck,
    "step-coalgebra": StepCoalgebraCheck,
    "cocommutativity": CocommCheck,
    "projection-factorization": FactorizationCheck,
    "ls-transport": LsTransportCheck,
    "flag-antipode": FlagAntipodeCheck,
}


def get_check(name, config: Config) -> BaseCheck:
    if name == "exit-codes":
        return ExitCodeCheck(config)
    if name not in CHECKS:
        raise ValueError(f"Unknown check: {name}")
    return CHECKS[name](config)


class ExitCodeCheck(BaseCheck):
    """Exit-code contract and byte-identical reruns of the command line itself."""

    name = "exit-codes"
    cases = (
        (["hopf-check", "--vectors", "(1,0);(1,1)", "--samples", "50"], 0),
        (["tits-homology", "--vectors", "(1,0);(0,1);(1,1)", "--degree", "2"], 0),
        (["dehn-tetra", "--side", "pi/2"], 0),
        (["product", "--left", "(1,0", "--right", "(0,1)"], 2),
        (["coproduct"], 2),
        (["dehn-tetra", "--side", "arccos(-1/3)"], 3),
        (["locate", "--vectors", "(1,0);(1,1)", "--point", "(1,0,0)"], 3),
        (["hopf-check", "--vectors", "(1,0);(2,0)"], 3),
        (["locate", "--vectors", "(1,0);(0,1)", "--point", "(1,0);(0,1)"], 2),
        (["tits-homology", "--vectors", "(1,0,0);(0,1,0);(0,0,1);(1,1,1)", "--closed"], 3),
    )

    @staticmethod
    def invoke(argv):
        # deferred: main imports this module
        from main import run

        out = io.StringIO()
        with contextlib.redirect_stdout(out):
            code = run(argv)
        return code, out.getvalue()

    def fixed_cases(self):
        results = []
        for argv, expected in self.cases:
            code, _ = self.invoke(argv)
            results.append((" ".join(argv), code == expected, {"expected": expected, "got": code}))
        argv = ["--output", "json", "cover-check", "--vectors", "(1,2);(3,-1)", "--samples", "100"]
        first, second = self.invoke(argv), self.invoke(argv)
        results.append(("determinism", first == second, {"exit_code": first[0]}))
        return results


def create_summary_table(reports: list[Report], save_path=None, within_budget=None) -> pd.DataFrame:
    """One row per suite item; wall-clock columns only when within_budget is given."""
    table = pd.DataFrame([
        {
            "item": r.command,
            "passed": r.passed,
            "instances": r.witness.get("instances", 0),
            "cases": r.witness.get("passed_instances", 0),
            "seed": r.witness.get("seed"),
        }
        for r in reports
    ])
    if within_budget is not None:
        table["elapsed"] = [round(r.elapsed, 3) for r in reports]
        table["within_budget"] = within_budget
    if save_path:
        directory = os.path.dirname(save_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        table.to_csv(save_path, index=False)
        logger.info(f"Summary table saved to {save_path}")
    return table


def run_suite(config: Config, names=None, save_path=None) -> tuple[list[Report], pd.DataFrame]:
    checks = [get_check(name, config) for name in names or [*CHECKS, "exit-codes"]]
    reports = [check.run() for check in tqdm(checks, desc="suite", file=sys.stderr)]
    within_budget = [check.within_budget(report) for check, report in zip(checks, reports)]
    over = [check.name for check, ok in zip(checks, within_budget) if not ok]
    if over:
        logger.warning(f"suite: over the time budget: {', '.join(over)}")
    return reports, create_summary_table(reports, save_path, within_budget if config.timing else None)
