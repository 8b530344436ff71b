import pandas as pd
import pytest

from data import Config
from hopf_checks import AntipodeCheck, HopfIdentityCheck
from suite import CHECKS, ExitCodeCheck, create_summary_table, get_check, run_suite


def test_unknown_check():
    with pytest.raises(ValueError):
        get_check("nothing", Config())


def test_every_item_seeds_apart():
    offsets = [cls.seed_offset for cls in CHECKS.values()]
    assert len(set(offsets)) == len(offsets)


def test_small_battery_passes():
    report = AntipodeCheck(Config(seed=3), instances=5).run()
    assert report.passed
    assert report.witness["seed"] == 3 + AntipodeCheck.seed_offset
    assert report.witness["passed_instances"] == 5


def test_batteries_are_reproducible():
    first = AntipodeCheck(Config(), instances=5).run()
    second = AntipodeCheck(Config(), instances=5).run()
    assert first.witness == second.witness


def test_summary_table_is_written(tmp_path):
    path = tmp_path / "out" / "suite.csv"
    reports, table = run_suite(Config(), names=["solomon-tits", "flag-antipode"], save_path=str(path))
    assert all(r.passed for r in reports)
    assert list(table["item"]) == ["solomon-tits", "flag-antipode"]
    assert pd.read_csv(path).shape == (2, 5)


def test_exit_code_contract():
    report = ExitCodeCheck(Config()).run()
    assert report.passed, report.witness["failures"]


def test_summary_table_without_path():
    table = create_summary_table([AntipodeCheck(Config(), instances=2).run()])
    assert table.loc[0, "instances"] == 2


def test_hopf_identity_battery_fits_its_budget():
    check = HopfIdentityCheck(Config())
    report = check.run()
    assert report.passed
    assert report.witness["instances"] == 200
    assert check.within_budget(report), report.elapsed


def test_timing_adds_budget_columns():
    reports, table = run_suite(Config(timing=True), names=["dihedral"])
    assert list(table.columns)[-2:] == ["elapsed", "within_budget"]
    assert table.loc[0, "elapsed"] >= 0
