"""ZDT two-objective suite (ZDT1-4, ZDT6)."""

from functools import lru_cache

import numpy as np
from scipy.optimize import minimize_scalar

from .base import Problem, bounds, no_constraints
from .fronts import Curve2D, convex_curve, concave_curve, running_best_intervals


def _g_linear(X):
    return 1.0 + 9.0 * X[:, 1:].sum(axis=1) / (X.shape[1] - 1)


def zdt1(X):
    f1 = X[:, 0]
    g = _g_linear(X)
    return np.column_stack([f1, g * (1.0 - np.sqrt(f1 / g))]), no_constraints(X)


def zdt2(X):
    f1 = X[:, 0]
    g = _g_linear(X)
    return np.column_stack([f1, g * (1.0 - (f1 / g) ** 2)]), no_constraints(X)


def zdt3(X):
    f1 = X[:, 0]
    g = _g_linear(X)
    h = 1.0 - np.sqrt(f1 / g) - (f1 / g) * np.sin(10.0 * np.pi * f1)
    return np.column_stack([f1, g * h]), no_constraints(X)


def zdt4(X):
    f1 = X[:, 0]
    tail = X[:, 1:]
    g = 1.0 + 10.0 * tail.shape[1] + (tail**2 - 10.0 * np.cos(4.0 * np.pi * tail)).sum(axis=1)
    return np.column_stack([f1, g * (1.0 - np.sqrt(f1 / g))]), no_constraints(X)


def zdt6(X):
    x1 = X[:, 0]
    f1 = 1.0 - np.exp(-4.0 * x1) * np.sin(6.0 * np.pi * x1) ** 6
    g = 1.0 + 9.0 * (X[:, 1:].sum(axis=1) / (X.shape[1] - 1)) ** 0.25
    return np.column_stack([f1, g * (1.0 - (f1 / g) ** 2)]), no_constraints(X)


def _zdt3_curve(t):
    t = np.asarray(t, dtype=float)
    return np.column_stack([t, 1.0 - np.sqrt(t) - t * np.sin(10.0 * np.pi * t)])


@lru_cache(maxsize=1)
def zdt3_intervals():
    return running_best_intervals(lambda t: _zdt3_curve(t)[:, 1], 0.0, 1.0)


@lru_cache(maxsize=1)
def zdt6_min_f1() -> float:
    res = minimize_scalar(lambda x: 1.0 - np.exp(-4.0 * x) * np.sin(6.0 * np.pi * x) ** 6,
                          bounds=(0.0, 1.0 / 6.0), method="bounded", options={"xatol": 1e-12})
    return float(res.fun)


def problems():
    unit30 = bounds(30, (0, 1), (0, 1))
    unit10 = bounds(10, (0, 1), (0, 1))
    return [
        Problem("ZDT1", 30, 2, *unit30, zdt1, category="I", family="ZDT", properties="Convex",
                front=convex_curve()),
        Problem("ZDT2", 30, 2, *unit30, zdt2, category="I", family="ZDT", properties="Concave",
                front=concave_curve()),
        Problem("ZDT3", 30, 2, *unit30, zdt3, category="I", family="ZDT", properties="Discontinuous",
                front=Curve2D(_zdt3_curve, zdt3_intervals)),
        Problem("ZDT4", 10, 2, *bounds(10, (0, 1), (-5, 5)), zdt4, category="I", family="ZDT",
                properties="Multimodal, Convex", front=convex_curve()),
        Problem("ZDT6", 10, 2, *unit10, zdt6, category="I", family="ZDT",
                properties="Multimodal, Biased, Concave",
                front=Curve2D(lambda t: np.column_stack([t, 1.0 - t**2]), lambda: [(zdt6_min_f1(), 1.0)])),
    ]
