"""Real-coded variation: simulated binary crossover and polynomial mutation.

Both operators work row-wise on matrices so a whole mating pool is varied in
one call; the single-vector forms are thin wrappers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_EPS = 1e-14


@dataclass(frozen=True)
class VariationParams:
    """Operator settings; defaults follow the benchmark configuration."""

    crossover_rate: float = 1.0
    mutation_rate: float = 0.08
    eta_c: float = 20.0
    eta_m: float = 20.0

    def __post_init__(self):
        for name in ("crossover_rate", "mutation_rate"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {v}")
        for name in ("eta_c", "eta_m"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


def sbx_spread(u: np.ndarray, eta: float) -> np.ndarray:
    """Spread factor beta(u) of SBX; beta(0.5) == 1."""
    u = np.asarray(u, dtype=float)
    low = (2.0 * u) ** (1.0 / (eta + 1.0))
    high = (1.0 / np.maximum(2.0 * (1.0 - u), _EPS)) ** (1.0 / (eta + 1.0))
    return np.where(u <= 0.5, low, high)


def sbx_pairs(P1: np.ndarray, P2: np.ndarray, xl, xu, params: VariationParams,
              rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    """SBX on matched parent rows; children are clamped to the bounds.

    Each pair crosses with probability ``crossover_rate``; inside a crossing
    pair every variable is recombined.
    """
    P1 = np.atleast_2d(np.asarray(P1, dtype=float))
    P2 = np.atleast_2d(np.asarray(P2, dtype=float))
    n, d = P1.shape
    u = rng.random((n, d))
    cross = rng.random(n) < params.crossover_rate
    beta = sbx_spread(u, params.eta_c)
    mid = 0.5 * (P1 + P2)
    half = 0.5 * (P2 - P1)
    C1 = np.where(cross[:, None], mid - beta * half, P1)
    C2 = np.where(cross[:, None], mid + beta * half, P2)
    return np.clip(C1, xl, xu), np.clip(C2, xl, xu)


def sbx_crossover(p1, p2, params: VariationParams, rng: np.random.Generator,
                  xl=None, xu=None) -> tuple[np.ndarray, np.ndarray]:
    """Single-pair SBX. Bounds default to the unbounded real line."""
    p1 = np.asarray(p1, dtype=float)
    p2 = np.asarray(p2, dtype=float)
    if p1.shape != p2.shape:
        raise ValueError("parents differ in length")
    xl = -np.inf if xl is None else xl
    xu = np.inf if xu is None else xu
    c1, c2 = sbx_pairs(p1[None, :], p2[None, :], xl, xu, params, rng)
    return c1[0], c2[0]


def mutation_delta(u: np.ndarray, eta: float) -> np.ndarray:
    """Polynomial-mutation perturbation in units of the variable range; delta(0.5) == 0."""
    u = np.asarray(u, dtype=float)
    low = (2.0 * u) ** (1.0 / (eta + 1.0)) - 1.0
    high = 1.0 - (2.0 * (1.0 - u)) ** (1.0 / (eta + 1.0))
    return np.where(u < 0.5, low, high)


def polynomial_mutation_rows(X: np.ndarray, xl, xu, params: VariationParams,
                             rng: np.random.Generator) -> np.ndarray:
    X = np.atleast_2d(np.asarray(X, dtype=float))
    mask = rng.random(X.shape) < params.mutation_rate
    u = rng.random(X.shape)
    span = np.broadcast_to(np.asarray(xu, dtype=float) - np.asarray(xl, dtype=float), X.shape)
    span = np.where(np.isfinite(span), span, 1.0)
    Y = np.where(mask, X + mutation_delta(u, params.eta_m) * span, X)
    return np.clip(Y, xl, xu)


def polynomial_mutation(x, params: VariationParams, rng: np.random.Generator, xl=None, xu=None) -> np.ndarray:
    """Mutate one vector. Without bounds the unit range is used as scale."""
    x = np.asarray(x, dtype=float)
    xl = -np.inf if xl is None else xl
    xu = np.inf if xu is None else xu
    return polynomial_mutation_rows(x[None, :], xl, xu, params, rng)[0]
