"""Individual-level evolutionary strategies run inside a collective."""

from __future__ import annotations

from ..operators import VariationParams
from .base import Evaluator, Strategy
from .ibea import IBEA, ibea_fitness, ibea_generation, ibea_survival, eps_indicator_matrix
from .moead import MOEAD, get_scalarization, moead_generation, register_scalarization, scalarize_tchebycheff, \
    simplex_lattice, uniform_weights, neighbourhoods
from .nsga2 import NSGA2, nsga2_generation, nsga2_survival

__all__ = [
    "Evaluator", "Strategy", "NSGA2", "MOEAD", "IBEA", "VariationParams",
    "nsga2_generation", "nsga2_survival", "moead_generation", "ibea_generation",
    "scalarize_tchebycheff", "register_scalarization", "get_scalarization",
    "simplex_lattice", "uniform_weights", "neighbourhoods",
    "ibea_fitness", "ibea_survival", "eps_indicator_matrix",
    "STRATEGY_TAGS", "make_strategy", "canonical_tag",
]

STRATEGY_TAGS = ("NSGA2", "MOEAD", "IBEA")
_ALIASES = {"NSGA2": "NSGA2", "NSGA-II": "NSGA2", "MOEAD": "MOEAD", "MOEA/D": "MOEAD", "MOEAD-TCH": "MOEAD",
            "MOEA/D-TCH": "MOEAD", "IBEA": "IBEA"}


def canonical_tag(name: str) -> str:
    key = name.strip().upper()
    if key not in _ALIASES:
        raise KeyError(f"unknown strategy {name!r}; choose from {', '.join(STRATEGY_TAGS)}")
    return _ALIASES[key]


def make_strategy(name: str, params: VariationParams | None = None) -> Strategy:
    tag = canonical_tag(name)
    return {"NSGA2": NSGA2, "MOEAD": MOEAD, "IBEA": IBEA}[tag](params)
