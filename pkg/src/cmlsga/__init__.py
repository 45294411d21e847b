"""Collective-level co-evolutionary multi-level selection genetic algorithm (cMLSGA).

Sub-populations ("collectives") run different evolutionary strategies,
compete through periodic elimination and repopulation, and are benchmarked
with IGD and hypervolume on analytic test problems.
"""

from .core import (ConfigurationError, Individual, Population, constrained_dominates, crowding_distance,
                   fast_nondominated_sort)
from .metrics import MetricReport, hv_monte_carlo_oracle, hypervolume, igd
from .mlsga import (Collective, CoevolutionConfig, RunTrace, assign_mls_weights, assign_strategies,
                    classify_population, collective_fitness, collective_reproduction_step, run_cmlsga,
                    run_standalone)
from .operators import VariationParams, polynomial_mutation, sbx_crossover
from .problems import (Problem, ReferenceFront, UnsupportedProblemError, evaluate, get_problem, list_problems,
                       load_reference_front, sample_true_front)
from .strategies import IBEA, MOEAD, NSGA2, make_strategy

__version__ = "0.1.0"

__all__ = [
    "ConfigurationError", "Individual", "Population", "constrained_dominates", "crowding_distance",
    "fast_nondominated_sort", "MetricReport", "hv_monte_carlo_oracle", "hypervolume", "igd", "Collective",
    "CoevolutionConfig", "RunTrace", "assign_mls_weights", "assign_strategies", "classify_population",
    "collective_fitness", "collective_reproduction_step", "run_cmlsga", "run_standalone", "VariationParams",
    "polynomial_mutation", "sbx_crossover", "Problem", "ReferenceFront", "UnsupportedProblemError", "evaluate",
    "get_problem", "list_problems", "load_reference_front", "sample_true_front", "IBEA", "MOEAD", "NSGA2",
    "make_strategy",
]
