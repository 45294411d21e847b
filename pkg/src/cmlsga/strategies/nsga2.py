"""NSGA-II generation: tournament mating, SBX + polynomial mutation, elitist survival."""

from __future__ import annotations

import numpy as np

from ..core import Population, crowding_distance, fast_nondominated_sort, rank_and_crowding
from ..operators import VariationParams, polynomial_mutation_rows, sbx_pairs
from .base import Better, Strategy, as_evaluator, tournament


def nsga2_survival(F: np.ndarray, CV: np.ndarray | None, n_keep: int) -> np.ndarray:
    """Indices of the ``n_keep`` survivors by front, then crowding within the split front.

    Survivors are returned in ascending index order.
    """
    keep: list[int] = []
    for front in fast_nondominated_sort(F, CV):
        if len(keep) + len(front) <= n_keep:
            keep.extend(front)
            if len(keep) == n_keep:
                break
            continue
        cd = crowding_distance(F[front])
        order = np.argsort(-cd, kind="stable")
        keep.extend(np.asarray(front)[order[: n_keep - len(keep)]].tolist())
        break
    return np.sort(np.asarray(keep, dtype=int))


def make_offspring(pop: Population, parents: np.ndarray, params: VariationParams, rng: np.random.Generator,
                   xl, xu, n_children: int) -> np.ndarray:
    """Pair consecutive parent indices, cross and mutate; returns ``n_children`` rows."""
    P1 = pop.X[parents[0::2]]
    P2 = pop.X[parents[1::2]]
    C1, C2 = sbx_pairs(P1, P2, xl, xu, params, rng)
    C = np.empty((2 * len(P1), pop.X.shape[1]))
    C[0::2], C[1::2] = C1, C2
    return polynomial_mutation_rows(C[:n_children], xl, xu, params, rng)


class NSGA2(Strategy):
    tag = "NSGA2"

    def __init__(self, params: VariationParams | None = None):
        self.params = params or VariationParams()

    def generation(self, pop, state, rng, evaluator):
        n = len(pop)
        ranks, crowd = rank_and_crowding(pop.F, pop.CV)
        n_pairs = (n + 1) // 2
        parents = tournament(rng, 2 * n_pairs, Better(ranks, -crowd))
        prob = evaluator.problem
        children = evaluator(make_offspring(pop, parents, self.params, rng, prob.xl, prob.xu, n))
        union = Population.concat([pop, children])
        return union[nsga2_survival(union.F, union.CV, n)], state

    def get_config(self):
        return {"tag": self.tag, **self.params.__dict__}


def nsga2_generation(members: Population, params: VariationParams, rng: np.random.Generator,
                     problem) -> Population:
    """One NSGA-II generation; ``problem`` may be a Problem or a shared Evaluator."""
    if len(members) < 4:
        raise ValueError("NSGA-II needs at least 4 members")
    out, _ = NSGA2(params).generation(members, {}, rng, as_evaluator(problem))
    return out
