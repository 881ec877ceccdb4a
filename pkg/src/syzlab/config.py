"""Run configuration shared by the command line and the reproduction scripts."""

from __future__ import annotations

import os
from dataclasses import asdict, dataclass, field

from .groebner import DEFAULT_GB_STEPS
from .koszul import DEFAULT_MATRIX_CAP
from .poly import is_prime
from .ranklocus import DEFAULT_ENUM_CAP, DEFAULT_SEED

DEFAULT_PRIMES = (31, 101)


@dataclass
class RunConfig:
    primes: tuple = DEFAULT_PRIMES
    deep: bool = False
    seed: int = DEFAULT_SEED
    gb_steps: int = DEFAULT_GB_STEPS
    matrix_cap: int = DEFAULT_MATRIX_CAP
    enum_cap: int = DEFAULT_ENUM_CAP
    output: str = "table"
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        self.primes = tuple(int(p) for p in self.primes)
        if not self.primes:
            raise ValueError("at least one prime is required")
        for p in self.primes:
            if p <= 2 or not is_prime(p):
                raise ValueError(f"primes must be odd primes, got {p}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")
        if self.output not in ("table", "json"):
            raise ValueError(f"unknown output format {self.output!r}")

    @classmethod
    def from_env(cls, **overrides) -> "RunConfig":
        """Defaults, with SYZLAB_DEEP=1 switching on the long runs."""
        deep = os.environ.get("SYZLAB_DEEP", "") not in ("", "0")
        overrides.setdefault("deep", deep)
        return cls(**overrides)

    def to_json(self) -> dict:
        d = asdict(self)
        d["primes"] = list(self.primes)
        d.pop("extra")
        return d
