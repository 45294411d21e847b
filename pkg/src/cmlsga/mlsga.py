"""Collectives, multi-level selection and collective-level co-evolution.

The population is split once into collectives by proximity in decision
space. Half of the collectives run one strategy and half the other; each
collective also carries an objective-emphasis weight used only for the
collective-level fitness. All collectives advance one generation per tick;
every ``reproduction_delay`` ticks the worst collective is wiped and refilled
with copies of the best members of the others, keeping its strategy and
weight.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from sklearn.cluster import KMeans

from .core import ConfigurationError, Population, best_order, make_rng, nondominated_mask
from .operators import VariationParams
from .problems import Problem
from .strategies import Evaluator, Strategy, canonical_tag, make_strategy

logger = logging.getLogger(__name__)

MLS_SCHEMES = ("MLS1", "MLS2")


@dataclass
class Collective:
    """A sub-population with its own strategy and collective-fitness weight."""

    id: int
    members: Population
    strategy: Strategy | None = None
    state: dict = field(default_factory=dict, repr=False)
    mls_weight: np.ndarray | None = None
    fitness: float = math.nan
    elite_size: int = 0

    @property
    def tag(self) -> str | None:
        return None if self.strategy is None else self.strategy.tag

    def __len__(self) -> int:
        return len(self.members)


@dataclass
class CoevolutionConfig:
    """Settings of one co-evolutionary run.

    ``reproduction_delay=None`` takes the larger of the two strategies'
    defaults.
    """

    pairing: tuple[str, str] = ("MOEAD", "NSGA2")
    n_collectives: int = 8
    pop_size: int = 1000
    budget: int = 300_000
    reproduction_delay: int | None = None
    mls_scheme: str = "MLS2"
    elite_fraction: float = 1.0
    params: VariationParams = field(default_factory=VariationParams)
    seed: int | None = None
    track_members: bool = True

    def validate(self, n_obj: int | None = None) -> None:
        if len(self.pairing) != 2:
            raise ConfigurationError("pairing must name exactly two strategies")
        try:
            tags = [canonical_tag(t) for t in self.pairing]
        except KeyError as exc:
            raise ConfigurationError(str(exc.args[0])) from None
        self.pairing = tuple(tags)
        if self.n_collectives < 2 or self.n_collectives % 2:
            raise ConfigurationError("n_collectives must be a positive even number")
        if n_obj == 2 and self.mls_scheme == "MLS2" and self.n_collectives % 4:
            raise ConfigurationError("with two objectives n_collectives must be divisible by 4")
        if self.pop_size < 2 * self.n_collectives:
            raise ConfigurationError("pop_size must be at least twice n_collectives")
        if self.budget < self.pop_size:
            raise ConfigurationError("budget is smaller than one generation")
        if self.reproduction_delay is not None and self.reproduction_delay < 1:
            raise ConfigurationError("reproduction_delay must be >= 1")
        if self.mls_scheme not in MLS_SCHEMES:
            raise ConfigurationError(f"mls_scheme must be one of {MLS_SCHEMES}")
        if not 0.0 < self.elite_fraction <= 1.0:
            raise ConfigurationError("elite_fraction must lie in (0, 1]")


@dataclass(frozen=True)
class GenerationRecord:
    generation: int
    evals: int
    fitness: tuple
    eliminated: int | None
    shares: dict
    sizes: tuple
    tags: tuple
    # collective fitness just before an elimination, None on other generations
    fitness_at_elimination: tuple | None = None


@dataclass
class RunTrace:
    """Per-generation history of a run and its final constrained-nondominated set.

    ``member_ids[g][c]`` holds collective c's member ids after generation g,
    ``offspring_ids[g][c]`` the ids that collective c created during g, and
    ``copies[g]`` maps each copy id made at an elimination to its source id.
    """

    records: list[GenerationRecord] = field(default_factory=list)
    member_ids: list[list[np.ndarray]] = field(default_factory=list, repr=False)
    offspring_ids: list[list[np.ndarray]] = field(default_factory=list, repr=False)
    copies: dict[int, dict[int, int]] = field(default_factory=dict, repr=False)
    classification_events: int = 0
    reproduction_delay: int = 0
    n_evals: int = 0
    front: np.ndarray | None = None
    pareto_set: np.ndarray | None = None
    front_cv: np.ndarray | None = None


# ---------------------------------------------------------------------------
# setup


def _rebalance(labels: np.ndarray, X: np.ndarray, k: int, min_size: int) -> np.ndarray:
    """Move members from the largest clusters into clusters below ``min_size``."""
    labels = labels.copy()
    for c in range(k):
        while np.sum(labels == c) < min_size:
            sizes = np.bincount(labels, minlength=k)
            donor = int(np.argmax(sizes))
            centre = X[labels == c].mean(axis=0) if sizes[c] else X[labels == donor].mean(axis=0)
            cand = np.flatnonzero(labels == donor)
            pick = cand[np.argmin(np.linalg.norm(X[cand] - centre, axis=1))]
            labels[pick] = c
    return labels


def classify_population(pop: Population, n_collectives: int, rng, xl=None, xu=None) -> list[Collective]:
    """Partition members into collectives by k-means on (scaled) decision vectors.

    Every collective receives at least two members.
    """
    n = len(pop)
    if n < 2 * n_collectives:
        raise ConfigurationError(f"population of {n} is too small for {n_collectives} collectives")
    rng = make_rng(rng)
    X = pop.X
    if xl is not None and xu is not None:
        span = np.where(np.asarray(xu) > np.asarray(xl), np.asarray(xu) - np.asarray(xl), 1.0)
        X = (X - xl) / span
    seed = int(rng.integers(0, 2**31 - 1))
    n_distinct = len(np.unique(X, axis=0))
    if n_distinct >= n_collectives:
        labels = KMeans(n_clusters=n_collectives, n_init=1, random_state=seed).fit_predict(X)
    else:
        labels = np.arange(n) % n_collectives
    labels = _rebalance(np.asarray(labels), X, n_collectives, 2)
    return [Collective(id=c, members=pop[np.flatnonzero(labels == c)]) for c in range(n_collectives)]


def assign_strategies(collectives: Sequence[Collective], pairing: Sequence[str], rng,
                      params: VariationParams | None = None) -> list[Collective]:
    """Give a random half of the collectives the first strategy, the rest the second."""
    k = len(collectives)
    if k % 2:
        raise ConfigurationError("an odd number of collectives cannot be split half and half")
    rng = make_rng(rng)
    first = set(rng.permutation(k)[: k // 2].tolist())
    for i, c in enumerate(collectives):
        c.strategy = make_strategy(pairing[0] if i in first else pairing[1], params)
    return list(collectives)


def assign_mls_weights(collectives: Sequence[Collective], m: int, scheme: str = "MLS2") -> list[Collective]:
    """Collective-fitness weights.

    ``MLS1`` weights all objectives equally. ``MLS2`` gives each collective a
    single objective axis: within each strategy group (in id order) the
    axes cycle, offset by the group's position, so both strategies hold
    every emphasis.
    """
    if m < 2:
        raise ValueError("need at least two objectives")
    if scheme == "MLS1":
        for c in collectives:
            c.mls_weight = np.full(m, 1.0 / m)
        return list(collectives)
    groups: dict = {}
    for c in collectives:
        groups.setdefault(c.tag, []).append(c)
    for g, tag in enumerate(groups):
        for k, c in enumerate(sorted(groups[tag], key=lambda c: c.id)):
            w = np.zeros(m)
            w[(k + g) % m] = 1.0
            c.mls_weight = w
    return list(collectives)


# ---------------------------------------------------------------------------
# collective level


def collective_fitness(c: Collective) -> float:
    """Mean of ``mls_weight . f`` over members, on raw objectives (lower is better)."""
    return float(np.mean(c.members.F @ c.mls_weight))


def collective_reproduction_step(collectives: Sequence[Collective], rng, evaluator: Evaluator,
                                 elite_fraction: float = 1.0) -> tuple[int, dict[int, int]]:
    """Eliminate the worst collective and refill it from the survivors.

    Fitness values must be current. The collective with the highest fitness
    (lowest id on ties) keeps its id, strategy, weight and size; its members
    are replaced by copies, drawn round-robin over survivors in id order,
    of each survivor's best members by (rank, crowding). Only the top
    ``elite_fraction`` of each survivor is eligible; sources are reused in
    turn once exhausted.

    Returns the eliminated id and a map from copy id to source id.
    """
    fit = np.array([c.fitness for c in collectives])
    worst_pos = int(np.flatnonzero(fit == fit.max())[0]) if np.isfinite(fit).all() else int(np.nanargmax(fit))
    worst = collectives[worst_pos]
    size = len(worst)
    pools = []
    for c in collectives:
        if c is worst:
            continue
        order = best_order(c.members.F, c.members.CV)
        n_elite = max(1, math.ceil(elite_fraction * len(order)))
        pools.append((c.members, order[:n_elite]))
    picks_X, picks_F, picks_CV, sources = [], [], [], []
    cursor = [0] * len(pools)
    while len(sources) < size:
        for p, (members, order) in enumerate(pools):
            if len(sources) == size:
                break
            i = order[cursor[p] % len(order)]
            cursor[p] += 1
            picks_X.append(members.X[i])
            picks_F.append(members.F[i])
            picks_CV.append(members.CV[i])
            sources.append(int(members.ids[i]))
    new_ids = evaluator.new_ids(size)
    worst.members = Population(np.array(picks_X), np.array(picks_F), np.array(picks_CV), new_ids)
    worst.members, worst.state = worst.strategy.init_state(worst.members, make_rng(rng))
    worst.fitness = collective_fitness(worst)
    return worst.id, dict(zip(new_ids.tolist(), sources))


# ---------------------------------------------------------------------------
# runs


def _final_set(pop: Population, trace: RunTrace) -> None:
    mask = nondominated_mask(pop.F, pop.CV)
    F, idx = np.unique(pop.F[mask], axis=0, return_index=True)
    rows = np.flatnonzero(mask)[idx]
    trace.front = F
    trace.pareto_set = pop.X[rows]
    trace.front_cv = pop.CV[rows]


def _record(trace: RunTrace, gen: int, evaluator: Evaluator, collectives, eliminated, offspring, track: bool,
            pre_fitness=None):
    tags = tuple(c.tag for c in collectives)
    shares = {t: tags.count(t) for t in sorted(set(tags))}
    trace.records.append(GenerationRecord(
        generation=gen, evals=evaluator.n_evals, fitness=tuple(float(c.fitness) for c in collectives),
        eliminated=eliminated, shares=shares, sizes=tuple(len(c) for c in collectives), tags=tags,
        fitness_at_elimination=pre_fitness))
    if track:
        trace.member_ids.append([c.members.ids.copy() for c in collectives])
        trace.offspring_ids.append(offspring)


def resolve_delay(config: CoevolutionConfig) -> int:
    if config.reproduction_delay is not None:
        return int(config.reproduction_delay)
    return max(make_strategy(t).reproduction_delay for t in config.pairing)


def run_cmlsga(problem: Problem, config: CoevolutionConfig) -> RunTrace:
    """One co-evolutionary run until the evaluation budget is spent.

    The budget is checked before each generation, so the final count may
    exceed it by less than one generation (``pop_size`` evaluations).
    """
    config.validate(problem.n_obj)
    rng = make_rng(config.seed)
    evaluator = Evaluator(problem)
    pop = evaluator(problem.sample_uniform(config.pop_size, rng))

    collectives = classify_population(pop, config.n_collectives, rng, problem.xl, problem.xu)
    trace = RunTrace(classification_events=1, reproduction_delay=resolve_delay(config))
    assign_strategies(collectives, config.pairing, rng, config.params)
    assign_mls_weights(collectives, problem.n_obj, config.mls_scheme)
    for c in collectives:
        c.elite_size = len(c)
        c.members, c.state = c.strategy.init_state(c.members, rng)
        c.fitness = collective_fitness(c)
    _record(trace, 0, evaluator, collectives, None, [np.empty(0, np.int64)] * len(collectives),
            config.track_members)

    gen = 0
    delay = trace.reproduction_delay
    while evaluator.n_evals < config.budget:
        gen += 1
        offspring = []
        for c in collectives:
            start = evaluator.next_id
            c.members, c.state = c.strategy.generation(c.members, c.state, rng, evaluator)
            offspring.append(np.arange(start, evaluator.next_id, dtype=np.int64))
            c.fitness = collective_fitness(c)
        eliminated = pre = None
        if gen % delay == 0:
            pre = tuple(float(c.fitness) for c in collectives)
            eliminated, copies = collective_reproduction_step(collectives, rng, evaluator, config.elite_fraction)
            trace.copies[gen] = copies
        _record(trace, gen, evaluator, collectives, eliminated, offspring, config.track_members, pre)

    trace.n_evals = evaluator.n_evals
    _final_set(Population.concat([c.members for c in collectives]), trace)
    return trace


def run_standalone(problem: Problem, strategy: str, pop_size: int = 1000, budget: int = 300_000,
                   params: VariationParams | None = None, seed=None) -> RunTrace:
    """A single strategy on the whole population, same budget rule as :func:`run_cmlsga`."""
    if budget < pop_size:
        raise ConfigurationError("budget is smaller than one generation")
    if pop_size < 4:
        raise ConfigurationError("pop_size must be at least 4")
    rng = make_rng(seed)
    evaluator = Evaluator(problem)
    strat = make_strategy(strategy, params)
    pop = evaluator(problem.sample_uniform(pop_size, rng))
    pop, state = strat.init_state(pop, rng)
    trace = RunTrace(classification_events=0)
    gen = 0
    while evaluator.n_evals < budget:
        gen += 1
        pop, state = strat.generation(pop, state, rng, evaluator)
        trace.records.append(GenerationRecord(gen, evaluator.n_evals, (), None, {strat.tag: 1}, (len(pop),),
                                              (strat.tag,)))
    trace.n_evals = evaluator.n_evals
    _final_set(pop, trace)
    return trace
