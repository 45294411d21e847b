"""Problem definition type and single-point evaluation."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from ..core import aggregate_violation


class UnsupportedProblemError(LookupError):
    """Raised for unknown problems or problems without a known analytic front."""


@dataclass(frozen=True)
class Problem:
    """A box-constrained multi-objective benchmark problem.

    ``func`` maps a decision matrix of shape (n, n_var) to ``(F, G)`` where G
    holds constraint values under the ``g >= 0`` convention (shape (n, 0)
    for unconstrained problems).
    """

    name: str
    n_var: int
    n_obj: int
    xl: np.ndarray
    xu: np.ndarray
    func: Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]] = field(repr=False)
    n_constr: int = 0
    category: str = ""
    family: str = ""
    properties: str = ""
    front: Optional[object] = field(default=None, repr=False)

    def evaluate_batch(self, X) -> tuple[np.ndarray, np.ndarray]:
        """Objectives and aggregated violation for every row of ``X``."""
        X = np.atleast_2d(np.asarray(X, dtype=float))
        if X.shape[1] != self.n_var:
            raise ValueError(f"{self.name}: expected {self.n_var} variables, got {X.shape[1]}")
        F, G = self.func(X)
        return F, aggregate_violation(G)

    def constraint_values(self, X) -> np.ndarray:
        X = np.atleast_2d(np.asarray(X, dtype=float))
        return self.func(X)[1]

    def sample_uniform(self, n: int, rng: np.random.Generator) -> np.ndarray:
        return self.xl + rng.random((n, self.n_var)) * (self.xu - self.xl)

    def clip(self, X: np.ndarray) -> np.ndarray:
        return np.clip(X, self.xl, self.xu)


def evaluate(problem: Problem, x) -> tuple[np.ndarray, float]:
    """Evaluate a single decision vector, enforcing length and bounds."""
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.shape[0] != problem.n_var:
        raise ValueError(f"{problem.name}: decision vector must have length {problem.n_var}")
    if np.any(x < problem.xl) or np.any(x > problem.xu):
        raise ValueError(f"{problem.name}: decision vector outside the variable bounds")
    F, CV = problem.evaluate_batch(x[None, :])
    return F[0], float(CV[0])


def bounds(n_var: int, first: tuple[float, float], rest: tuple[float, float], n_first: int = 1):
    """Lower/upper bound arrays with the leading ``n_first`` variables in ``first``."""
    xl = np.full(n_var, rest[0], dtype=float)
    xu = np.full(n_var, rest[1], dtype=float)
    xl[:n_first] = first[0]
    xu[:n_first] = first[1]
    return xl, xu


def no_constraints(X: np.ndarray) -> np.ndarray:
    return np.zeros((X.shape[0], 0))
