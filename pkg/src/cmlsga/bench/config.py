"""Experiment configuration and the two shipped profiles."""

from __future__ import annotations

import os
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path

from ..core import ConfigurationError
from ..problems import CATEGORIES, DEFAULT_RESOLUTION, UnsupportedProblemError, get_problem, list_problems
from ..strategies import STRATEGY_TAGS, canonical_tag

OUT_ENV = "CMLSGA_OUT"
DEFAULT_OUT = "cmlsga-results"

PROFILES = {
    "desk": {"runs": 5, "budget": 50_000, "pop_size": 1000, "n_collectives": 8},
    "paper": {"runs": 30, "budget": 300_000, "pop_size": 1000, "n_collectives": 8},
}

COEVO_PREFIX = "cMLSGA"
DEFAULT_PAIRING = ("MOEAD", "NSGA2")


def coevo_id(pairing) -> str:
    return f"{COEVO_PREFIX}-{pairing[0]}-{pairing[1]}"


def parse_algorithm(alg: str, pairing=DEFAULT_PAIRING) -> str:
    """Canonical algorithm id: a strategy tag or ``cMLSGA-<ES1>-<ES2>``.

    A bare ``cMLSGA`` takes ``pairing``.
    """
    text = alg.strip()
    if text.upper() == COEVO_PREFIX.upper():
        return coevo_id([canonical_tag(t) for t in pairing])
    if text.upper().startswith(COEVO_PREFIX.upper() + "-"):
        parts = text.split("-")[1:]
        # allow "MOEAD-TCH" style tags inside the id
        tags, buf = [], []
        for part in parts:
            buf.append(part)
            try:
                tags.append(canonical_tag("-".join(buf)))
                buf = []
            except KeyError:
                continue
        if buf or len(tags) != 2:
            raise ConfigurationError(f"cannot parse co-evolution id {alg!r}")
        return coevo_id(tags)
    try:
        return canonical_tag(text)
    except KeyError:
        raise ConfigurationError(f"unknown algorithm {alg!r}") from None


def is_coevo(alg_id: str) -> bool:
    return alg_id.startswith(COEVO_PREFIX + "-")


def pairing_of(alg_id: str) -> tuple[str, str]:
    _, a, b = alg_id.split("-")
    return a, b


def resolve_out_dir(cli_value: str | None) -> Path:
    """``--out`` wins, then the environment variable, then the default."""
    if cli_value:
        return Path(cli_value)
    return Path(os.environ.get(OUT_ENV) or DEFAULT_OUT)


@dataclass
class RunConfig:
    """A (problem x algorithm x seed) experiment matrix."""

    problems: list[str] = field(default_factory=lambda: ["ZDT1"])
    # empty: cMLSGA with the pairing, then each constituent standalone
    algorithms: list[str] = field(default_factory=list)
    pairing: tuple[str, str] = DEFAULT_PAIRING
    runs: int = 30
    budget: int = 300_000
    seed: int = 0
    pop_size: int = 1000
    n_collectives: int = 8
    reproduction_delay: int | None = None
    crossover_rate: float = 1.0
    mutation_rate: float = 0.08
    eta_c: float = 20.0
    eta_m: float = 20.0
    igd_resolution: int = DEFAULT_RESOLUTION
    out_dir: str = DEFAULT_OUT
    profile: str = "paper"
    workers: int = 1

    @classmethod
    def from_profile(cls, profile: str = "desk", **overrides) -> "RunConfig":
        if profile not in PROFILES:
            raise ConfigurationError(f"unknown profile {profile!r}; choose from {sorted(PROFILES)}")
        base = dict(PROFILES[profile], profile=profile)
        base.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**base)

    def validated(self) -> "RunConfig":
        """Checked copy with canonical problem and algorithm ids; raises ConfigurationError."""
        if not self.problems:
            raise ConfigurationError("no problems selected")
        names = []
        for p in self.problems:
            try:
                names.append(get_problem(p).name)
            except UnsupportedProblemError as exc:
                raise ConfigurationError(str(exc)) from None
        try:
            pairing = tuple(canonical_tag(t) for t in self.pairing)
        except KeyError as exc:
            raise ConfigurationError(str(exc.args[0])) from None
        if len(pairing) != 2:
            raise ConfigurationError("--pairing needs exactly two strategies")
        algs = [parse_algorithm(a, pairing) for a in (self.algorithms or [COEVO_PREFIX, *pairing])]
        for key in ("runs", "budget", "pop_size", "n_collectives", "igd_resolution", "workers"):
            if getattr(self, key) < 1:
                raise ConfigurationError(f"{key} must be positive")
        if self.igd_resolution < 2:
            raise ConfigurationError("igd_resolution must be at least 2")
        if self.budget < self.pop_size:
            raise ConfigurationError("budget is smaller than one generation")
        if any(is_coevo(a) for a in algs):
            if self.n_collectives % 2:
                raise ConfigurationError("n_collectives must be even")
            if self.pop_size < 2 * self.n_collectives:
                raise ConfigurationError("pop_size must be at least twice n_collectives")
            two_obj = any(get_problem(n).n_obj == 2 for n in names)
            if two_obj and self.n_collectives % 4:
                raise ConfigurationError("with two-objective problems n_collectives must be divisible by 4")
        if self.reproduction_delay is not None and self.reproduction_delay < 1:
            raise ConfigurationError("reproduction_delay must be >= 1")
        for key in ("crossover_rate", "mutation_rate"):
            if not 0.0 <= getattr(self, key) <= 1.0:
                raise ConfigurationError(f"{key} must lie in [0, 1]")
        return replace(self, problems=list(dict.fromkeys(names)), algorithms=list(dict.fromkeys(algs)),
                       pairing=pairing)

    def seeds(self) -> list[int]:
        return [self.seed + i for i in range(self.runs)]

    def echo(self) -> dict:
        d = asdict(self)
        d["pairing"] = list(self.pairing)
        return d


def problems_for(problems: list[str] | None, categories: list[str] | None) -> list[str]:
    """Union of explicit names and every registered problem in the given categories."""
    out = list(problems or [])
    for cat in categories or []:
        cat = cat.strip().upper()
        if cat not in CATEGORIES:
            raise ConfigurationError(f"unknown category {cat!r}")
        found = list_problems(category=cat)
        if not found:
            raise ConfigurationError(f"category {cat} has no implemented problems")
        out += found
    return list(dict.fromkeys(out))


__all__ = ["RunConfig", "PROFILES", "OUT_ENV", "parse_algorithm", "is_coevo", "pairing_of", "coevo_id",
           "resolve_out_dir", "problems_for", "STRATEGY_TAGS"]
