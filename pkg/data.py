# data.py

import json
from dataclasses import dataclass, field

SEED = 0
PRECISION_BITS = 256
RELATION_HEIGHT = 10**6
MAX_DIM = 4
SAMPLES = 1000


@dataclass
class Config:
    seed: int = SEED
    precision_bits: int = PRECISION_BITS
    relation_height: int = RELATION_HEIGHT
    max_dim: int = MAX_DIM
    samples: int = SAMPLES
    output: str = "text"
    timing: bool = False


@dataclass
class Report:
    command: str
    passed: bool
    witness: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def to_dict(self, timing: bool = False) -> dict:
        out = {"command": self.command, "passed": self.passed, "witness": self.witness}
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=2)
