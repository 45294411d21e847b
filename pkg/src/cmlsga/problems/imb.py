"""IMB1-10: imbalanced problems whose distance function vanishes on part of the box.

IMB11-14 are registered as extension points (see ``EXTENSION_NAMES``).
"""

import numpy as np

from .base import Problem, bounds, no_constraints
from .fronts import convex_curve, linear_curve, quarter_circle, simplex_surface, sphere_surface

EXTENSION_NAMES = ("IMB11", "IMB12", "IMB13", "IMB14")


def _h(t):
    return -0.9 * t**2 + np.abs(t) ** 0.6


def _t2(X):
    return X[:, 1:] - np.sin(0.5 * np.pi * X[:, [0]])


def _t3(X):
    return X[:, 2:] - 0.5 * (X[:, [0]] + X[:, [1]])


def _convex(x1, g):
    return np.column_stack([(1 + g) * x1, (1 + g) * (1.0 - np.sqrt(x1))])


def _linear(x1, g):
    return np.column_stack([(1 + g) * x1, (1 + g) * (1.0 - x1)])


def _circle(x1, g):
    a = 0.5 * np.pi * x1
    return np.column_stack([(1 + g) * np.cos(a), (1 + g) * np.sin(a)])


def _plane(x1, x2, g):
    return (1 + g)[:, None] * np.column_stack([x1 * x2, x1 * (1.0 - x2), 1.0 - x1])


def _sphere(x1, x2, g):
    a, b = 0.5 * np.pi * x1, 0.5 * np.pi * x2
    return (1 + g)[:, None] * np.column_stack([np.cos(a) * np.cos(b), np.cos(a) * np.sin(b), np.sin(a)])


def _zoned(X, inside, shape):
    x1 = X[:, 0]
    g = np.where(inside, 0.0, _h(_t2(X)).sum(axis=1))
    return shape(x1, g), no_constraints(X)


def imb1(X):
    return _zoned(X, X[:, 0] <= 0.2, _convex)


def imb2(X):
    x1 = X[:, 0]
    return _zoned(X, (x1 >= 0.4) & (x1 <= 0.6), _linear)


def imb3(X):
    return _zoned(X, X[:, 0] >= 0.8, _circle)


def _zoned3(X, inside, shape):
    x1, x2 = X[:, 0], X[:, 1]
    g = np.where(inside, 0.0, 2.0 * np.cos(0.5 * np.pi * x1) * _h(_t3(X)).sum(axis=1))
    return shape(x1, x2, g), no_constraints(X)


def imb4(X):
    return _zoned3(X, X[:, 0] >= 2.0 / 3.0, _plane)


def imb5(X):
    return _zoned3(X, X[:, 0] <= 0.5, _sphere)


def imb6(X):
    return _zoned3(X, (X[:, 0] <= 0.75) & (X[:, 1] <= 0.75), _plane)


def _switched(X, inside, shape):
    x1 = X[:, 0]
    g_in = _h(X[:, 1:] - 0.5).sum(axis=1)
    g_out = (np.abs(_t2(X)) ** 0.6).sum(axis=1)
    return shape(x1, np.where(inside, g_in, g_out)), no_constraints(X)


def imb7(X):
    x1 = X[:, 0]
    return _switched(X, (x1 >= 0.5) & (x1 <= 0.8), _convex)


def imb8(X):
    x1 = X[:, 0]
    return _switched(X, (x1 >= 0.5) & (x1 <= 0.8), _linear)


def imb9(X):
    x1 = X[:, 0]
    return _switched(X, (x1 >= 0.5) & (x1 <= 0.8), _circle)


def imb10(X):
    x1, x2 = X[:, 0], X[:, 1]
    inside = (x1 >= 0.2) & (x1 <= 0.8) & (x2 >= 0.2) & (x2 <= 0.8)
    g_in = _h(X[:, 2:] - 0.5).sum(axis=1)
    g_out = (np.abs(X[:, 2:] - (x1 * x2)[:, None]) ** 0.6).sum(axis=1)
    return _plane(x1, x2, np.where(inside, g_in, g_out)), no_constraints(X)


def problems():
    unit = bounds(10, (0, 1), (0, 1))

    def mk(name, m, func, props, front):
        return Problem(name, 10, m, *unit, func, category="VI", family="IMB", properties=props, front=front)

    return [
        mk("IMB1", 2, imb1, "Convex, Imbalanced", convex_curve()),
        mk("IMB2", 2, imb2, "Linear, Imbalanced", linear_curve()),
        mk("IMB3", 2, imb3, "Concave, Imbalanced", quarter_circle()),
        mk("IMB4", 3, imb4, "Linear, Imbalanced", simplex_surface()),
        mk("IMB5", 3, imb5, "Concave, Imbalanced", sphere_surface()),
        mk("IMB6", 3, imb6, "Linear, Imbalanced", simplex_surface()),
        mk("IMB7", 2, imb7, "Convex, Imbalanced", convex_curve()),
        mk("IMB8", 2, imb8, "Linear, Imbalanced", linear_curve()),
        mk("IMB9", 2, imb9, "Concave, Imbalanced", quarter_circle()),
        mk("IMB10", 3, imb10, "Linear, Imbalanced", simplex_surface()),
    ]
