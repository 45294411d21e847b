"""Benchmark problem registry.

>>> p = get_problem("ZDT1")
>>> p.n_var, p.n_obj
(30, 2)
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import cec2009, dtlz, imb, mop, zdt
from .base import Problem, UnsupportedProblemError, evaluate
from .fronts import DEFAULT_RESOLUTION, FrontParseError, ReferenceFront, load_reference_front, sample_front, \
    save_front

__all__ = [
    "Problem", "UnsupportedProblemError", "FrontParseError", "ReferenceFront", "DEFAULT_RESOLUTION",
    "evaluate", "get_problem", "list_problems", "sample_true_front", "load_reference_front", "save_front",
    "EXTENSION_NAMES", "CATEGORIES",
]

CATEGORIES = ("I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X", "XI", "XII")

# Accepted by the interface, not implemented here.
EXTENSION_NAMES = (
    tuple(f"WFG{i}" for i in range(1, 10))
    + ("DTLZ8", "DTLZ9")
    + tuple(f"DAS-CMOP{i}" for i in range(1, 10))
    + imb.EXTENSION_NAMES
)


@lru_cache(maxsize=1)
def _registry() -> dict[str, Problem]:
    out = {}
    for mod in (zdt, cec2009, mop, imb, dtlz):
        for p in mod.problems():
            out[p.name] = p
    return out


def get_problem(name: str) -> Problem:
    key = name.upper()
    reg = _registry()
    if key in reg:
        return reg[key]
    if key in EXTENSION_NAMES:
        raise UnsupportedProblemError(f"{name} is a declared extension point without a bundled definition")
    raise UnsupportedProblemError(f"unknown problem {name!r}")


def list_problems(category: str | None = None, n_obj: int | None = None) -> list[str]:
    """Names in registry order, optionally filtered by category label and objective count."""
    return [p.name for p in _registry().values()
            if (category is None or p.category == category) and (n_obj is None or p.n_obj == n_obj)]


@lru_cache(maxsize=128)
def _cached_front(name: str, n: int) -> np.ndarray:
    pts = sample_front(get_problem(name).front, n)
    pts.setflags(write=False)
    return pts


def sample_true_front(problem: Problem | str, n: int = DEFAULT_RESOLUTION) -> ReferenceFront:
    """Evenly spread points on the problem's analytic Pareto front.

    Fronts made of finitely many points (CF1, UF5) yield ``min(n, K)`` points.
    """
    if isinstance(problem, str):
        problem = get_problem(problem)
    if problem.front is None:
        raise UnsupportedProblemError(f"{problem.name} has no analytic front")
    if n < 2:
        raise ValueError("front resolution must be at least 2")
    return ReferenceFront(_cached_front(problem.name, int(n)))
