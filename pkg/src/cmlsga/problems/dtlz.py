"""DTLZ1-7 at three objectives."""

from functools import lru_cache

import numpy as np

from .base import Problem, bounds, no_constraints
from .fronts import Curves3D, Surface3D, map_to_intervals, running_best_intervals, simplex_surface, sphere_surface

M = 3


def _g_rastrigin(XM):
    k = XM.shape[1]
    return 100.0 * (k + ((XM - 0.5) ** 2 - np.cos(20.0 * np.pi * (XM - 0.5))).sum(axis=1))


def _g_sphere(XM):
    return ((XM - 0.5) ** 2).sum(axis=1)


def _spherical(theta, g):
    """Objectives from M-1 angles (already scaled to [0, pi/2])."""
    n = theta.shape[0]
    F = np.empty((n, M))
    r = 1.0 + g
    for i in range(M):
        v = r.copy()
        v *= np.prod(np.cos(theta[:, : M - 1 - i]), axis=1)
        if i > 0:
            v *= np.sin(theta[:, M - 1 - i])
        F[:, i] = v
    return F


def dtlz1(X):
    g = _g_rastrigin(X[:, M - 1:])
    x = X[:, : M - 1]
    F = np.empty((X.shape[0], M))
    for i in range(M):
        v = 0.5 * (1.0 + g) * np.prod(x[:, : M - 1 - i], axis=1)
        if i > 0:
            v *= 1.0 - x[:, M - 1 - i]
        F[:, i] = v
    return F, no_constraints(X)


def dtlz2(X):
    return _spherical(X[:, : M - 1] * np.pi / 2, _g_sphere(X[:, M - 1:])), no_constraints(X)


def dtlz3(X):
    return _spherical(X[:, : M - 1] * np.pi / 2, _g_rastrigin(X[:, M - 1:])), no_constraints(X)


def dtlz4(X, alpha=100.0):
    return _spherical(X[:, : M - 1] ** alpha * np.pi / 2, _g_sphere(X[:, M - 1:])), no_constraints(X)


def _degenerate(X, g):
    theta = np.empty((X.shape[0], M - 1))
    theta[:, 0] = X[:, 0] * np.pi / 2
    theta[:, 1:] = (np.pi / (4.0 * (1.0 + g)))[:, None] * (1.0 + 2.0 * g[:, None] * X[:, 1 : M - 1])
    return _spherical(theta, g)


def dtlz5(X):
    return _degenerate(X, _g_sphere(X[:, M - 1:])), no_constraints(X)


def dtlz6(X):
    return _degenerate(X, (X[:, M - 1:] ** 0.1).sum(axis=1)), no_constraints(X)


def dtlz7(X):
    XM = X[:, M - 1:]
    g = 1.0 + 9.0 / XM.shape[1] * XM.sum(axis=1)
    F = np.empty((X.shape[0], M))
    F[:, : M - 1] = X[:, : M - 1]
    h = M - (F[:, : M - 1] / (1.0 + g)[:, None] * (1.0 + np.sin(3.0 * np.pi * F[:, : M - 1]))).sum(axis=1)
    F[:, M - 1] = (1.0 + g) * h
    return F, no_constraints(X)


def _degenerate_curve(t):
    c = np.cos(t * np.pi / 2) / np.sqrt(2.0)
    return np.column_stack([c, c, np.sin(t * np.pi / 2)])


@lru_cache(maxsize=1)
def dtlz7_intervals():
    return running_best_intervals(lambda f: f * (1.0 + np.sin(3.0 * np.pi * f)), 0.0, 1.0, maximize=True)


def _dtlz7_surface(u, v):
    iv = dtlz7_intervals()
    f1 = map_to_intervals(u, iv)
    f2 = map_to_intervals(v, iv)
    f3 = 2.0 * (M - sum(f / 2.0 * (1.0 + np.sin(3.0 * np.pi * f)) for f in (f1, f2)))
    return np.column_stack([f1, f2, f3])


def problems():
    def unit(d):
        return bounds(d, (0, 1), (0, 1))

    sphere = sphere_surface()
    return [
        Problem("DTLZ1", 7, 3, *unit(7), dtlz1, category="IV", family="DTLZ", properties="Linear, Multimodal",
                front=simplex_surface(0.5)),
        Problem("DTLZ2", 12, 3, *unit(12), dtlz2, category="I", family="DTLZ", properties="", front=sphere),
        Problem("DTLZ3", 12, 3, *unit(12), dtlz3, category="I", family="DTLZ", properties="Multimodal",
                front=sphere),
        Problem("DTLZ4", 12, 3, *unit(12), dtlz4, category="I", family="DTLZ", properties="Biased", front=sphere),
        Problem("DTLZ5", 12, 3, *unit(12), dtlz5, category="I", family="DTLZ", properties="Degenerated",
                front=Curves3D([_degenerate_curve])),
        Problem("DTLZ6", 12, 3, *unit(12), dtlz6, category="I", family="DTLZ", properties="Degenerated, Biased",
                front=Curves3D([_degenerate_curve])),
        Problem("DTLZ7", 22, 3, *unit(22), dtlz7, category="V", family="DTLZ", properties="Mixed, Multimodal",
                front=Surface3D(_dtlz7_surface)),
    ]
