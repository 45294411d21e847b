"""MOP1-7: problems with a hard-to-keep diversity (ten variables, unit box)."""

from functools import lru_cache

import numpy as np

from .base import Problem, bounds, no_constraints
from .fronts import Curve2D, concave_curve, convex_curve, quarter_circle, running_best_intervals, \
    simplex_surface, sphere_surface


def _h(t):
    return -0.9 * t**2 + np.abs(t) ** 0.6


def _k(t):
    return np.abs(t) / (1.0 + np.exp(5.0 * np.abs(t)))


def _shift(X):
    return X[:, 1:] - np.sin(0.5 * np.pi * X[:, [0]])


def _shift3(X):
    return X[:, 2:] - X[:, [0]] * X[:, [1]]


def mop1(X):
    x1 = X[:, 0]
    g = 2.0 * np.sin(np.pi * x1) * _h(_shift(X)).sum(axis=1)
    return np.column_stack([(1 + g) * x1, (1 + g) * (1.0 - np.sqrt(x1))]), no_constraints(X)


def mop2(X):
    x1 = X[:, 0]
    g = 10.0 * np.sin(np.pi * x1) * _k(_shift(X)).sum(axis=1)
    return np.column_stack([(1 + g) * x1, (1 + g) * (1.0 - x1**2)]), no_constraints(X)


def mop3(X):
    x1 = X[:, 0]
    g = 10.0 * np.sin(0.5 * np.pi * x1) * _k(_shift(X)).sum(axis=1)
    a = 0.5 * np.pi * x1
    return np.column_stack([(1 + g) * np.cos(a), (1 + g) * np.sin(a)]), no_constraints(X)


def mop4(X):
    x1 = X[:, 0]
    g = 10.0 * np.sin(np.pi * x1) * _k(_shift(X)).sum(axis=1)
    f2 = (1 + g) * (1.0 - np.sqrt(x1) * np.cos(2.0 * np.pi * x1) ** 2)
    return np.column_stack([(1 + g) * x1, f2]), no_constraints(X)


def mop5(X):
    x1 = X[:, 0]
    g = 2.0 * np.abs(np.cos(np.pi * x1)) * _h(_shift(X)).sum(axis=1)
    return np.column_stack([(1 + g) * x1, (1 + g) * (1.0 - np.sqrt(x1))]), no_constraints(X)


def mop6(X):
    x1, x2 = X[:, 0], X[:, 1]
    g = 2.0 * np.sin(np.pi * x1) * _h(_shift3(X)).sum(axis=1)
    F = (1 + g)[:, None] * np.column_stack([x1 * x2, x1 * (1.0 - x2), 1.0 - x1])
    return F, no_constraints(X)


def mop7(X):
    x1, x2 = X[:, 0], X[:, 1]
    g = 2.0 * np.sin(np.pi * x1) * _h(_shift3(X)).sum(axis=1)
    a, b = 0.5 * np.pi * x1, 0.5 * np.pi * x2
    F = (1 + g)[:, None] * np.column_stack([np.cos(a) * np.cos(b), np.cos(a) * np.sin(b), np.sin(a)])
    return F, no_constraints(X)


def _mop4_curve(t):
    return np.column_stack([t, 1.0 - np.sqrt(t) * np.cos(2.0 * np.pi * t) ** 2])


@lru_cache(maxsize=1)
def mop4_intervals():
    return running_best_intervals(lambda t: _mop4_curve(t)[:, 1], 0.0, 1.0)


def problems():
    unit = bounds(10, (0, 1), (0, 1))

    def mk(name, m, func, cat, props, front):
        return Problem(name, 10, m, *unit, func, category=cat, family="MOP", properties=props, front=front)

    return [
        mk("MOP1", 2, mop1, "VI", "Convex, Imbalanced", convex_curve()),
        mk("MOP2", 2, mop2, "VI", "Concave, Imbalanced", concave_curve()),
        mk("MOP3", 2, mop3, "VI", "Concave, Imbalanced", quarter_circle()),
        mk("MOP4", 2, mop4, "V", "Discontinuous, Imbalanced", Curve2D(_mop4_curve, mop4_intervals)),
        mk("MOP5", 2, mop5, "VI", "Convex, Imbalanced", convex_curve()),
        mk("MOP6", 3, mop6, "VI", "Linear, Imbalanced", simplex_surface()),
        mk("MOP7", 3, mop7, "VI", "Concave, Imbalanced", sphere_surface()),
    ]
