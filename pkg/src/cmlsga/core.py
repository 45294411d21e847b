"""Individuals, populations and constrained Pareto-dominance machinery.

Everything here follows the minimisation convention. A population is held
as a struct of arrays (decision matrix, objective matrix, violation vector,
member ids) so that strategies can work on whole collectives with numpy;
:class:`Individual` is the per-member view used where single comparisons
are needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

# Constraint values above -FEASIBILITY_TOL count as satisfied.
FEASIBILITY_TOL = 1e-8


@dataclass(frozen=True)
class Individual:
    """One evaluated solution.

    ``cv`` is the aggregated constraint violation (0 means feasible) and
    ``uid`` the run-unique member id used for provenance checks.
    """

    x: np.ndarray
    f: np.ndarray
    cv: float = 0.0
    uid: int = -1
    scratch: dict = field(default_factory=dict, compare=False, repr=False)


@dataclass
class Population:
    """Struct-of-arrays container for a set of evaluated individuals."""

    X: np.ndarray
    F: np.ndarray
    CV: np.ndarray
    ids: np.ndarray

    def __post_init__(self):
        self.X = np.atleast_2d(np.asarray(self.X, dtype=float))
        self.F = np.atleast_2d(np.asarray(self.F, dtype=float))
        self.CV = np.asarray(self.CV, dtype=float).reshape(-1)
        self.ids = np.asarray(self.ids, dtype=np.int64).reshape(-1)
        n = self.X.shape[0]
        if not (self.F.shape[0] == self.CV.shape[0] == self.ids.shape[0] == n):
            raise ValueError("population arrays disagree on the number of members")

    def __len__(self) -> int:
        return self.X.shape[0]

    def __getitem__(self, idx) -> "Population":
        idx = np.atleast_1d(np.arange(len(self))[idx])
        return Population(self.X[idx], self.F[idx], self.CV[idx], self.ids[idx])

    def __iter__(self) -> Iterator[Individual]:
        for i in range(len(self)):
            yield self.individual(i)

    @property
    def n_obj(self) -> int:
        return self.F.shape[1]

    def individual(self, i: int) -> Individual:
        return Individual(self.X[i].copy(), self.F[i].copy(), float(self.CV[i]), int(self.ids[i]))

    def copy(self) -> "Population":
        return Population(self.X.copy(), self.F.copy(), self.CV.copy(), self.ids.copy())

    @classmethod
    def concat(cls, pops: Sequence["Population"]) -> "Population":
        pops = [p for p in pops if len(p)]
        if not pops:
            raise ValueError("cannot concatenate an empty list of populations")
        return cls(
            np.vstack([p.X for p in pops]),
            np.vstack([p.F for p in pops]),
            np.concatenate([p.CV for p in pops]),
            np.concatenate([p.ids for p in pops]),
        )

    @classmethod
    def from_individuals(cls, individuals: Sequence[Individual]) -> "Population":
        return cls(
            np.array([ind.x for ind in individuals], dtype=float),
            np.array([ind.f for ind in individuals], dtype=float),
            np.array([ind.cv for ind in individuals], dtype=float),
            np.array([ind.uid for ind in individuals], dtype=np.int64),
        )


def make_rng(seed) -> np.random.Generator:
    """Return a PCG64 generator; an existing Generator is passed through."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def aggregate_violation(G: np.ndarray, tol: float = FEASIBILITY_TOL) -> np.ndarray:
    """Sum of positive violations of ``g >= 0`` constraints, row-wise.

    Values within ``tol`` of feasibility are treated as satisfied.
    """
    G = np.atleast_2d(np.asarray(G, dtype=float))
    if G.shape[1] == 0:
        return np.zeros(G.shape[0])
    viol = np.where(G < -tol, -G, 0.0)
    return viol.sum(axis=1)


def pareto_dominates(a, b) -> bool:
    """Plain Pareto dominance on objective vectors, no constraint term."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise ValueError(f"objective vectors differ in length: {a.shape} vs {b.shape}")
    return bool(np.all(a <= b) and np.any(a < b))


def constrained_dominates(a: Individual, b: Individual) -> bool:
    """Constraint-domination: feasibility first, then less violation, then Pareto."""
    fa = np.asarray(a.f, dtype=float)
    fb = np.asarray(b.f, dtype=float)
    if fa.shape != fb.shape:
        raise ValueError(f"objective vectors differ in length: {fa.shape} vs {fb.shape}")
    if a.cv == 0 and b.cv > 0:
        return True
    if a.cv > 0 and b.cv > 0:
        return a.cv < b.cv
    if a.cv == 0 and b.cv == 0:
        return pareto_dominates(fa, fb)
    return False


def domination_matrix(F: np.ndarray, CV: np.ndarray | None = None) -> np.ndarray:
    """Boolean matrix ``D[i, j]`` = member i constrained-dominates member j."""
    F = np.atleast_2d(np.asarray(F, dtype=float))
    n = F.shape[0]
    # per-objective 2-D comparisons are much faster than reducing an (n, n, m) array
    le = np.ones((n, n), dtype=bool)
    lt = np.zeros((n, n), dtype=bool)
    for k in range(F.shape[1]):
        col = F[:, k]
        le &= col[:, None] <= col[None, :]
        lt |= col[:, None] < col[None, :]
    pareto = le & lt
    if CV is None:
        return pareto
    CV = np.asarray(CV, dtype=float).reshape(n)
    if not CV.any():
        return pareto
    feas = CV == 0
    both_feas = feas[:, None] & feas[None, :]
    feas_vs_infeas = feas[:, None] & ~feas[None, :]
    both_infeas = ~feas[:, None] & ~feas[None, :]
    less_viol = CV[:, None] < CV[None, :]
    return (both_feas & pareto) | feas_vs_infeas | (both_infeas & less_viol)


def fast_nondominated_sort(F: np.ndarray, CV: np.ndarray | None = None) -> list[list[int]]:
    """Split members into constrained-nondominated fronts.

    Parameters
    ----------
    F : array of shape (n, m)
        Objective values.
    CV : array of shape (n,), optional
        Constraint violations; omitted means all feasible.

    Returns
    -------
    list of lists of int
        Fronts in order, each sorted ascending by index.
    """
    F = np.atleast_2d(np.asarray(F, dtype=float))
    if F.shape[0] == 0 or F.size == 0:
        raise ValueError("cannot sort an empty population")
    D = domination_matrix(F, CV)
    counts = np.count_nonzero(D, axis=0)
    fronts = []
    current = np.flatnonzero(counts == 0)
    assigned = 0
    while current.size:
        fronts.append(current.tolist())
        assigned += current.size
        counts = counts - np.count_nonzero(D[current], axis=0)
        counts[current] = -1
        current = np.flatnonzero(counts == 0)
    if assigned != F.shape[0]:
        raise RuntimeError("dominance relation is cyclic; objectives contain NaN?")
    return fronts


def front_ranks(F: np.ndarray, CV: np.ndarray | None = None) -> np.ndarray:
    """Front index of each member (0 = nondominated)."""
    ranks = np.empty(np.atleast_2d(F).shape[0], dtype=int)
    for k, front in enumerate(fast_nondominated_sort(F, CV)):
        ranks[front] = k
    return ranks


def crowding_distance(F: np.ndarray) -> np.ndarray:
    """NSGA-II crowding distance of a mutually nondominated set.

    Per-objective boundary members get ``inf``; a zero objective range
    contributes nothing.
    """
    F = np.atleast_2d(np.asarray(F, dtype=float))
    n, m = F.shape
    if n <= 2:
        return np.full(n, np.inf)
    dist = np.zeros(n)
    for k in range(m):
        order = np.argsort(F[:, k], kind="stable")
        vals = F[order, k]
        span = vals[-1] - vals[0]
        dist[order[0]] = np.inf
        dist[order[-1]] = np.inf
        if span > 0:
            dist[order[1:-1]] += (vals[2:] - vals[:-2]) / span
    return dist


def rank_and_crowding(F: np.ndarray, CV: np.ndarray | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Front rank and within-front crowding distance for every member."""
    F = np.atleast_2d(np.asarray(F, dtype=float))
    ranks = np.empty(F.shape[0], dtype=int)
    crowd = np.empty(F.shape[0])
    for k, front in enumerate(fast_nondominated_sort(F, CV)):
        ranks[front] = k
        crowd[front] = crowding_distance(F[front])
    return ranks, crowd


def best_order(F: np.ndarray, CV: np.ndarray | None = None) -> np.ndarray:
    """Indices sorted best-first by (rank ascending, crowding descending)."""
    ranks, crowd = rank_and_crowding(F, CV)
    return np.lexsort((-crowd, ranks))


def nondominated_mask(F: np.ndarray, CV: np.ndarray | None = None) -> np.ndarray:
    """Boolean mask of the first constrained-nondominated front."""
    D = domination_matrix(F, CV)
    return ~D.any(axis=0)


class ConfigurationError(ValueError):
    """Invalid run or experiment configuration."""
