"""Shared plumbing for individual-level strategies: evaluation counting and selection helpers."""

from __future__ import annotations

from typing import Any

import numpy as np

from ..core import Population
from ..problems import Problem


class Evaluator:
    """Evaluates decision matrices, counts evaluations and hands out member ids.

    Ids are unique within one evaluator, so a single instance per run gives
    run-unique provenance for every evaluated or copied member.
    """

    def __init__(self, problem: Problem):
        self.problem = problem
        self.n_evals = 0
        self._next_id = 0

    @property
    def next_id(self) -> int:
        return self._next_id

    def new_ids(self, k: int) -> np.ndarray:
        ids = np.arange(self._next_id, self._next_id + k, dtype=np.int64)
        self._next_id += k
        return ids

    def __call__(self, X: np.ndarray) -> Population:
        X = self.problem.clip(np.atleast_2d(X))
        F, CV = self.problem.evaluate_batch(X)
        self.n_evals += X.shape[0]
        return Population(X, F, CV, self.new_ids(X.shape[0]))


def as_evaluator(problem_or_evaluator) -> Evaluator:
    if isinstance(problem_or_evaluator, Evaluator):
        return problem_or_evaluator
    return Evaluator(problem_or_evaluator)


def tournament(rng: np.random.Generator, n_pick: int, better: "Better") -> np.ndarray:
    """Indices of ``n_pick`` binary-tournament winners; ties go to the first contestant."""
    n = better.n
    a = rng.integers(0, n, n_pick)
    b = rng.integers(0, n, n_pick)
    return np.where(better(b, a), b, a)


class Better:
    """Lexicographic comparator over keys (lower is better for every key)."""

    def __init__(self, *keys: np.ndarray):
        self.keys = keys
        self.n = len(keys[0])

    def __call__(self, i: np.ndarray, j: np.ndarray) -> np.ndarray:
        out = np.zeros(len(i), dtype=bool)
        undecided = np.ones(len(i), dtype=bool)
        for k in self.keys:
            ki, kj = k[i], k[j]
            out |= undecided & (ki < kj)
            undecided &= ki == kj
        return out


class Strategy:
    """One collective's generational update.

    Subclasses implement :meth:`init_state` and :meth:`generation`; state is
    a plain dict owned by a single collective.
    """

    tag: str = ""
    reproduction_delay: int = 10

    def init_state(self, pop: Population, rng: np.random.Generator) -> tuple[Population, dict[str, Any]]:
        """Fresh state for ``pop``; the members may come back reordered."""
        return pop, {}

    def generation(self, pop: Population, state: dict, rng: np.random.Generator,
                   evaluator: Evaluator) -> tuple[Population, dict]:
        raise NotImplementedError

    def offspring_per_generation(self, size: int) -> int:
        return size

    def get_config(self) -> dict:
        return {"tag": self.tag}
