# base_check.py

import logging
import time

from data import Config, Report
from utils.sampling import RationalSampler

logger = logging.getLogger(__name__)

MAX_FAILURES = 5


class BaseCheck:
    """Seeded battery of instances for one acceptance item.

    Subclasses draw an instance from self.sampler in check_instance and return
    (passed, detail); fixed_cases covers deterministic worked examples.
    """

    name = None
    instances = 0
    seed_offset = 0
    time_budget = None  # seconds, None when unbounded

    def __init__(self, config: Config | None = None, instances: int | None = None):
        self.config = config or Config()
        if instances is not None:
            self.instances = instances
        self.seed = self.config.seed + self.seed_offset
        self.sampler = RationalSampler(self.seed)
        self.passed_counter = 0
        self.failures = []

    def check_instance(self, index):
        raise NotImplementedError("The check_instance method must be implemented by subclasses")

    def fixed_cases(self):
        return []

    def summary(self):
        return {}

    def within_budget(self, report: Report) -> bool:
        return self.time_budget is None or report.elapsed < self.time_budget

    def record(self, label, passed, detail=None):
        if passed:
            self.passed_counter += 1
        elif len(self.failures) < MAX_FAILURES:
            self.failures.append({"instance": label, "detail": detail})
        else:
            self.failures.append({"instance": label})

    def run(self) -> Report:
        logger.info(f"{self.name}: seed={self.seed}, instances={self.instances}")
        start = time.perf_counter()
        for index in range(self.instances):
            passed, detail = self.check_instance(index)
            self.record(index, passed, detail)
            logger.debug(f"{self.name}: instance {index} passed={passed}")
        for label, passed, detail in self.fixed_cases():
            self.record(label, passed, detail)
        witness = {
            "seed": self.seed,
            "instances": self.instances,
            "passed_instances": self.passed_counter,
            "failures": self.failures[:MAX_FAILURES],
            **self.summary(),
        }
        report = Report(self.name, not self.failures, witness, time.perf_counter() - start)
        logger.info(f"{self.name}: passed={report.passed} ({self.passed_counter} cases) in {report.elapsed:.2f}s")
        if not self.within_budget(report):
            logger.warning(f"{self.name}: {report.elapsed:.1f}s is over its {self.time_budget}s budget")
        return report
