"""Run settings shared by the job runner, the CLI and the scripts."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .arith import DEFAULT_MODULUS, is_prime

METHODS = ("hilbert", "bruteforce", "both")


@dataclass(frozen=True)
class SearchConfig:
    max_degree: int = 3
    max_tries: int = 64


@dataclass(frozen=True)
class RunConfig:
    modulus: int = DEFAULT_MODULUS
    seeds: tuple[int, ...] = (0, 1)
    nmax: int = 6
    grid: int = 3
    k: int = 1
    method: str = "hilbert"
    search: SearchConfig = field(default_factory=SearchConfig)

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")
        if not is_prime(self.modulus):
            raise ValueError(f"modulus {self.modulus} is not prime")
        if self.nmax < 3:
            raise ValueError("nmax must be at least 3")
        if self.grid < 1:
            raise ValueError("grid must be at least 1")
        if any(s < 0 for s in self.seeds):
            raise ValueError("seeds are unsigned integers")
        object.__setattr__(self, "seeds", tuple(self.seeds))

    def override(self, **changes) -> RunConfig:
        return replace(self, **{k: v for k, v in changes.items() if v is not None})
