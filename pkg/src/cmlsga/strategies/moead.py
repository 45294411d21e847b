"""MOEA/D with a pluggable scalarization (Tchebycheff shipped).

A generation visits every subproblem once in random order; each visit
breeds one child from the current members, evaluates it and lets it
replace up to ``n_r`` members of the mating pool at once (steady state).
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable

import numpy as np

from ..core import Population
from ..operators import VariationParams, polynomial_mutation_rows, sbx_pairs
from .base import Strategy, as_evaluator

Scalarization = Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray]

ZERO_WEIGHT = 1e-6


def scalarize_tchebycheff(f, w, z) -> np.ndarray | float:
    """max_i w_i |f_i - z_i| with zero weights replaced by 1e-6.

    Broadcasts over leading axes of ``f`` and ``w``.
    """
    f = np.asarray(f, dtype=float)
    w = np.asarray(w, dtype=float)
    z = np.asarray(z, dtype=float)
    if f.shape[-1] != w.shape[-1] or f.shape[-1] != z.shape[-1]:
        raise ValueError("f, w and z must have the same number of objectives")
    w = np.where(w == 0, ZERO_WEIGHT, w)
    out = np.max(w * np.abs(f - z), axis=-1)
    return float(out) if out.ndim == 0 else out


_SCALARIZATIONS: dict[str, Scalarization | None] = {"TCH": scalarize_tchebycheff, "PSF": None, "MSF": None}


def register_scalarization(name: str, func: Scalarization) -> None:
    """Fill a named slot (e.g. PSF, MSF) or add a new scalarization ``(f, w, z) -> real``."""
    _SCALARIZATIONS[name.upper()] = func


def get_scalarization(name: str) -> Scalarization:
    key = name.upper()
    if key not in _SCALARIZATIONS:
        raise KeyError(f"unknown scalarization {name!r}")
    func = _SCALARIZATIONS[key]
    if func is None:
        raise NotImplementedError(f"scalarization slot {key} is empty; supply one with register_scalarization")
    return func


def simplex_lattice(m: int, h: int) -> np.ndarray:
    """All weight vectors with components in {0, 1/h, ..., 1} summing to 1."""
    rows = []
    for bars in combinations(range(h + m - 1), m - 1):
        parts = np.diff(np.concatenate([[-1], bars, [h + m - 1]])) - 1
        rows.append(parts / h)
    return np.array(rows[::-1], dtype=float)


def uniform_weights(n: int, m: int) -> np.ndarray:
    """Exactly ``n`` distinct simplex weights.

    For two objectives this is the lattice with ``h = n - 1``. Otherwise the
    smallest lattice holding ``n`` vectors is thinned by farthest-point
    selection, seeded with the axis vectors.
    """
    if n < 1:
        raise ValueError("need at least one weight vector")
    if m == 2:
        if n == 1:
            return np.array([[0.5, 0.5]])
        return simplex_lattice(2, n - 1)
    h = 1
    while len(simplex_lattice(m, h)) < n:
        h += 1
    lattice = simplex_lattice(m, h)
    if len(lattice) == n:
        return lattice
    axes = [int(np.flatnonzero(np.isclose(lattice[:, k], 1.0))[0]) for k in range(m)]
    chosen = axes[:n]
    dist = np.min(np.linalg.norm(lattice[:, None, :] - lattice[chosen][None, :, :], axis=2), axis=1)
    while len(chosen) < n:
        nxt = int(np.argmax(dist))
        chosen.append(nxt)
        dist = np.minimum(dist, np.linalg.norm(lattice - lattice[nxt], axis=1))
    return lattice[np.sort(chosen)]


def neighbourhoods(W: np.ndarray, T: int) -> np.ndarray:
    """Indices of the ``T`` nearest weights (Euclidean) for each weight, itself first."""
    D = np.linalg.norm(W[:, None, :] - W[None, :, :], axis=2)
    return np.argsort(D, axis=1, kind="stable")[:, :T]


def assign_to_weights(F: np.ndarray, CV: np.ndarray, W: np.ndarray, z: np.ndarray,
                      scalarize: Scalarization) -> np.ndarray:
    """Greedy one-to-one member-to-weight matching; returns member index per weight."""
    n = len(W)
    G = scalarize(F[None, :, :], W[:, None, :], z)  # (weights, members)
    G = G + np.where(CV > 0, 1e12 + CV, 0.0)[None, :]
    taken = np.zeros(F.shape[0], dtype=bool)
    out = np.empty(n, dtype=int)
    for i in range(n):
        g = np.where(taken, np.inf, G[i])
        j = int(np.argmin(g))
        out[i] = j
        taken[j] = True
    return out


class MOEAD(Strategy):
    tag = "MOEAD"

    def __init__(self, params: VariationParams | None = None, n_neighbours: int = 20, delta: float = 0.9,
                 n_replace: int = 2, scalarization: str = "TCH"):
        self.params = params or VariationParams()
        self.n_neighbours = n_neighbours
        self.delta = delta
        self.n_replace = n_replace
        self.scalarization = scalarization

    def init_state(self, pop, rng):
        """Weights, neighbourhoods and ideal point; members come back ordered to match the weights."""
        scal = get_scalarization(self.scalarization)
        W = uniform_weights(len(pop), pop.n_obj)
        z = pop.F.min(axis=0)
        order = assign_to_weights(pop.F, pop.CV, W, z, scal)
        T = min(self.n_neighbours, len(W))
        return pop[order], {"weights": W, "neighbours": neighbourhoods(W, T), "ideal": z}

    def generation(self, pop, state, rng, evaluator):
        scal = get_scalarization(self.scalarization)
        W, B = state["weights"], state["neighbours"]
        z = state["ideal"].copy()
        n = len(pop)
        if n != len(W):
            raise ValueError("collective size differs from its weight count")

        # all random draws for the generation up front; mating uses the live members
        order = rng.permutation(n)
        local = rng.random(n) < self.delta
        T = B.shape[1]
        pick_local = B[np.arange(n)[:, None], rng.integers(0, T, (n, 2))]
        pick_global = rng.integers(0, n, (n, 2))
        mates = np.where(local[:, None], pick_local, pick_global)
        prob = evaluator.problem
        X, F, CV, ids = pop.X.copy(), pop.F.copy(), pop.CV.copy(), pop.ids.copy()
        for i in order:
            c1, c2 = sbx_pairs(X[mates[i, :1]], X[mates[i, 1:]], prob.xl, prob.xu, self.params, rng)
            child = polynomial_mutation_rows(c1 if rng.random() < 0.5 else c2, prob.xl, prob.xu, self.params, rng)
            kid = evaluator(child)
            fc, cvc = kid.F[0], kid.CV[0]
            z = np.minimum(z, fc)
            pool = B[i] if local[i] else np.arange(n)
            pool = pool[rng.permutation(len(pool))]
            g_kid = scal(fc[None, :], W[pool], z)
            g_cur = scal(F[pool], W[pool], z)
            # feasibility gate, then scalarized improvement
            better = (cvc < CV[pool]) | ((cvc == CV[pool]) & (g_kid < g_cur))
            targets = pool[better][: self.n_replace]
            X[targets], F[targets], CV[targets], ids[targets] = kid.X[0], fc, cvc, kid.ids[0]
        state = dict(state, ideal=z)
        return Population(X, F, CV, ids), state

    def get_config(self):
        return {"tag": self.tag, **self.params.__dict__, "T": self.n_neighbours, "delta": self.delta,
                "n_r": self.n_replace, "scalarization": self.scalarization}


def moead_generation(members: Population, state: dict | None, params: VariationParams,
                     rng: np.random.Generator, problem, **kwargs) -> tuple[Population, dict]:
    """One MOEA/D generation. Pass ``state=None`` to initialise weights from ``members``."""
    strat = MOEAD(params, **kwargs)
    if state is None:
        members, state = strat.init_state(members, rng)
    return strat.generation(members, state, rng, as_evaluator(problem))
