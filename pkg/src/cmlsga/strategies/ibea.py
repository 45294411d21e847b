"""IBEA with the additive epsilon indicator."""

from __future__ import annotations

import numpy as np

from ..core import Population
from ..operators import VariationParams
from .base import Better, Strategy, as_evaluator, tournament
from .nsga2 import make_offspring


def normalize(F: np.ndarray) -> np.ndarray:
    """Scale each objective to [0, 1] over the given set; a flat objective maps to 0."""
    lo = F.min(axis=0)
    span = F.max(axis=0) - lo
    return (F - lo) / np.where(span > 0, span, 1.0)


def eps_indicator_matrix(F: np.ndarray) -> np.ndarray:
    """``I[a, b]`` = smallest shift of a so that it weakly dominates b = max_k (F[a,k] - F[b,k])."""
    I = F[:, 0][:, None] - F[:, 0][None, :]
    for k in range(1, F.shape[1]):
        np.maximum(I, F[:, k][:, None] - F[:, k][None, :], out=I)
    return I


def ibea_fitness(F: np.ndarray, kappa: float = 0.05) -> tuple[np.ndarray, np.ndarray, float]:
    """Indicator fitness of every member (higher is better).

    Returns the fitness vector, the pairwise term matrix ``E[y, x] =
    exp(-I(y, x) / (c kappa))`` with a zero diagonal, and the scale ``c``.
    """
    I = eps_indicator_matrix(normalize(F))
    c = float(np.max(np.abs(I)))
    if c == 0:
        c = 1.0
    E = np.exp(-I / (c * kappa))
    np.fill_diagonal(E, 0.0)
    return -E.sum(axis=0), E, c


def ibea_survival(F: np.ndarray, CV: np.ndarray, n_keep: int, kappa: float = 0.05) -> tuple[np.ndarray, np.ndarray]:
    """Drop the worst member one at a time until ``n_keep`` remain.

    The most violating infeasible member goes first; among feasible members
    the lowest indicator fitness goes. Returns kept indices (ascending) and
    their fitness at the end of the removal.
    """
    fit, E, _ = ibea_fitness(F, kappa)
    alive = np.ones(len(F), dtype=bool)
    for _ in range(len(F) - n_keep):
        if np.any(CV[alive] > 0):
            worst = int(np.argmax(np.where(alive, CV, -np.inf)))
        else:
            worst = int(np.argmin(np.where(alive, fit, np.inf)))
        alive[worst] = False
        fit += E[worst]
    keep = np.flatnonzero(alive)
    return keep, fit[keep]


class IBEA(Strategy):
    tag = "IBEA"

    def __init__(self, params: VariationParams | None = None, kappa: float = 0.05):
        self.params = params or VariationParams()
        self.kappa = kappa

    def generation(self, pop, state, rng, evaluator):
        n = len(pop)
        fit, _, c = ibea_fitness(pop.F, self.kappa)
        n_pairs = (n + 1) // 2
        parents = tournament(rng, 2 * n_pairs, Better(pop.CV, -fit))
        prob = evaluator.problem
        children = evaluator(make_offspring(pop, parents, self.params, rng, prob.xl, prob.xu, n))
        union = Population.concat([pop, children])
        keep, _ = ibea_survival(union.F, union.CV, n, self.kappa)
        return union[keep], dict(state, scale=c)

    def get_config(self):
        return {"tag": self.tag, **self.params.__dict__, "kappa": self.kappa}


def ibea_generation(members: Population, state: dict | None, params: VariationParams,
                    rng: np.random.Generator, problem, kappa: float = 0.05) -> tuple[Population, dict]:
    if len(members) < 2:
        raise ValueError("IBEA needs at least 2 members")
    return IBEA(params, kappa).generation(members, state or {}, rng, as_evaluator(problem))
