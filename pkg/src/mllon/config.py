"""Run configuration for the command-line tools and the experiment sweep."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

from .basins import MAX_ENUM_N, CapacityError
from .multilayer import MllonConfig
from .neighborhood import OperatorKind

DEFAULT_KS = (2, 4, 6, 8, 10, 12, 14, 16)
FORMATS = ("csv", "graphml", "edgelist")
OUTPUT_ENV = "MLLON_OUTPUT_DIR"


def default_output_dir() -> Path:
    return Path(os.environ.get(OUTPUT_ENV, "mllon-out"))


@dataclass(frozen=True)
class RunConfig:
    """Parameters of a sweep; the defaults are the N=18 experiment grid."""

    n: int = 18
    ks: tuple = DEFAULT_KS
    seed: int = 1
    replicates: int = 1
    operators: tuple = (OperatorKind.BITFLIP, OperatorKind.SWAP)
    mllon: MllonConfig = field(default_factory=MllonConfig)
    out_dir: Path = field(default_factory=default_output_dir)
    workers: int = 1
    formats: tuple = ("csv",)
    max_n: int = MAX_ENUM_N

    def __post_init__(self):
        object.__setattr__(self, "ks", tuple(int(k) for k in self.ks))
        object.__setattr__(self, "operators", tuple(OperatorKind.parse(o) for o in self.operators))
        object.__setattr__(self, "formats", tuple(self.formats))
        object.__setattr__(self, "out_dir", Path(self.out_dir))
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if not self.ks:
            raise ValueError("at least one k is required")
        bad = [k for k in self.ks if not 0 <= k <= self.n - 1]
        if bad:
            raise ValueError(f"k values {bad} outside [0, {self.n - 1}]")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.replicates < 1:
            raise ValueError("replicates must be >= 1")
        if len(set(self.operators)) != len(self.operators) or not self.operators:
            raise ValueError("operators must be a non-empty set")
        unknown = set(self.formats) - set(FORMATS)
        if unknown:
            raise ValueError(f"unknown export formats {sorted(unknown)}")
        if self.n > self.max_n:
            raise CapacityError(f"n={self.n} exceeds the enumeration guard {self.max_n}")

    @property
    def seeds(self) -> list[int]:
        """One instance seed per replicate, all derived from ``seed``."""
        return [self.seed + r for r in range(self.replicates)]
