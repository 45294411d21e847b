"""CEC 2009 competition problems: UF1-10 (unconstrained) and CF1-10 (constrained).

Variable index ``j`` below is 1-based as in the original definitions. For two
objectives J1 holds the odd and J2 the even indices from 2..n; for three
objectives J1, J2, J3 hold indices from 3..n with j mod 3 equal to 1, 2, 0.
"""

import numpy as np

from .base import Problem, bounds, no_constraints
from .fronts import Curve2D, Curves3D, FinitePoints, Surface3D, SurfaceWithCurves, concave_curve, convex_curve, \
    linear_curve, map_to_intervals, sphere_surface


def _index_sets_2(n):
    j = np.arange(2, n + 1)
    return j, j % 2 == 1, j % 2 == 0


def _index_sets_3(n):
    j = np.arange(3, n + 1)
    return j, j % 3 == 1, j % 3 == 2, j % 3 == 0


def _mean2(v, mask):
    return 2.0 * v[:, mask].sum(axis=1) / mask.sum()


def _prod_cos_term(y, j, mask):
    """4 sum(y^2) - 2 prod(cos(20 y pi / sqrt j)) + 2 over the masked indices."""
    ym = y[:, mask]
    return 4.0 * (ym**2).sum(axis=1) - 2.0 * np.prod(np.cos(20.0 * ym * np.pi / np.sqrt(j[mask])), axis=1) + 2.0


def _sin_shift(X, j):
    n = X.shape[1]
    return X[:, 1:] - np.sin(6.0 * np.pi * X[:, [0]] + j * np.pi / n)


# ---------------------------------------------------------------------------
# UF


def uf1(X):
    j, J1, J2 = _index_sets_2(X.shape[1])
    y = _sin_shift(X, j)
    x1 = X[:, 0]
    f1 = x1 + _mean2(y**2, J1)
    f2 = 1.0 - np.sqrt(x1) + _mean2(y**2, J2)
    return np.column_stack([f1, f2]), no_constraints(X)


def uf2(X):
    n = X.shape[1]
    j, J1, J2 = _index_sets_2(n)
    x1 = X[:, [0]]
    amp = 0.3 * x1**2 * np.cos(24.0 * np.pi * x1 + 4.0 * j * np.pi / n) + 0.6 * x1
    phase = 6.0 * np.pi * x1 + j * np.pi / n
    y = np.where(J1, X[:, 1:] - amp * np.cos(phase), X[:, 1:] - amp * np.sin(phase))
    f1 = X[:, 0] + _mean2(y**2, J1)
    f2 = 1.0 - np.sqrt(X[:, 0]) + _mean2(y**2, J2)
    return np.column_stack([f1, f2]), no_constraints(X)


def uf3(X):
    n = X.shape[1]
    j, J1, J2 = _index_sets_2(n)
    x1 = X[:, [0]]
    y = X[:, 1:] - x1 ** (0.5 * (1.0 + 3.0 * (j - 2.0) / (n - 2.0)))
    f1 = X[:, 0] + 2.0 * _prod_cos_term(y, j, J1) / J1.sum()
    f2 = 1.0 - np.sqrt(X[:, 0]) + 2.0 * _prod_cos_term(y, j, J2) / J2.sum()
    return np.column_stack([f1, f2]), no_constraints(X)


def uf4(X):
    j, J1, J2 = _index_sets_2(X.shape[1])
    y = _sin_shift(X, j)
    h = np.abs(y) / (1.0 + np.exp(2.0 * np.abs(y)))
    f1 = X[:, 0] + _mean2(h, J1)
    f2 = 1.0 - X[:, 0] ** 2 + _mean2(h, J2)
    return np.column_stack([f1, f2]), no_constraints(X)


def uf5(X, N=10, eps=0.1):
    j, J1, J2 = _index_sets_2(X.shape[1])
    y = _sin_shift(X, j)
    h = 2.0 * y**2 - np.cos(4.0 * np.pi * y) + 1.0
    x1 = X[:, 0]
    bump = (0.5 / N + eps) * np.abs(np.sin(2.0 * N * np.pi * x1))
    f1 = x1 + bump + _mean2(h, J1)
    f2 = 1.0 - x1 + bump + _mean2(h, J2)
    return np.column_stack([f1, f2]), no_constraints(X)


def uf6(X, N=2, eps=0.1):
    j, J1, J2 = _index_sets_2(X.shape[1])
    y = _sin_shift(X, j)
    x1 = X[:, 0]
    bump = np.maximum(0.0, 2.0 * (0.5 / N + eps) * np.sin(2.0 * N * np.pi * x1))
    f1 = x1 + bump + 2.0 * _prod_cos_term(y, j, J1) / J1.sum()
    f2 = 1.0 - x1 + bump + 2.0 * _prod_cos_term(y, j, J2) / J2.sum()
    return np.column_stack([f1, f2]), no_constraints(X)


def uf7(X):
    j, J1, J2 = _index_sets_2(X.shape[1])
    y = _sin_shift(X, j)
    r = X[:, 0] ** 0.2
    f1 = r + _mean2(y**2, J1)
    f2 = 1.0 - r + _mean2(y**2, J2)
    return np.column_stack([f1, f2]), no_constraints(X)


def _three_obj_shift(X):
    n = X.shape[1]
    j, J1, J2, J3 = _index_sets_3(n)
    y = X[:, 2:] - 2.0 * X[:, [1]] * np.sin(2.0 * np.pi * X[:, [0]] + j * np.pi / n)
    return y, J1, J2, J3


def _sphere_base(X):
    a = 0.5 * np.pi * X[:, 0]
    b = 0.5 * np.pi * X[:, 1]
    return np.cos(a) * np.cos(b), np.cos(a) * np.sin(b), np.sin(a)


def uf8(X):
    y, J1, J2, J3 = _three_obj_shift(X)
    b1, b2, b3 = _sphere_base(X)
    h = y**2
    return np.column_stack([b1 + _mean2(h, J1), b2 + _mean2(h, J2), b3 + _mean2(h, J3)]), no_constraints(X)


def uf9(X, eps=0.1):
    y, J1, J2, J3 = _three_obj_shift(X)
    h = y**2
    x1, x2 = X[:, 0], X[:, 1]
    bump = np.maximum(0.0, (1.0 + eps) * (1.0 - 4.0 * (2.0 * x1 - 1.0) ** 2))
    f1 = 0.5 * (bump + 2.0 * x1) * x2 + _mean2(h, J1)
    f2 = 0.5 * (bump - 2.0 * x1 + 2.0) * x2 + _mean2(h, J2)
    f3 = 1.0 - x2 + _mean2(h, J3)
    return np.column_stack([f1, f2, f3]), no_constraints(X)


def uf10(X):
    y, J1, J2, J3 = _three_obj_shift(X)
    b1, b2, b3 = _sphere_base(X)
    h = 4.0 * y**2 - np.cos(8.0 * np.pi * y) + 1.0
    return np.column_stack([b1 + _mean2(h, J1), b2 + _mean2(h, J2), b3 + _mean2(h, J3)]), no_constraints(X)


# ---------------------------------------------------------------------------
# CF


def _smooth_sign(t):
    """t / (1 + exp(4|t|)): keeps the sign of t, flattens large magnitudes."""
    return t / (1.0 + np.exp(4.0 * np.abs(t)))


def _signed_sqrt(v):
    return np.sign(v) * np.sqrt(np.abs(v))


def cf1(X, N=10, a=1.0):
    n = X.shape[1]
    j, J1, J2 = _index_sets_2(n)
    y = X[:, 1:] - X[:, [0]] ** (0.5 * (1.0 + 3.0 * (j - 2.0) / (n - 2.0)))
    f1 = X[:, 0] + _mean2(y**2, J1)
    f2 = 1.0 - X[:, 0] + _mean2(y**2, J2)
    c = f1 + f2 - a * np.abs(np.sin(N * np.pi * (f1 - f2 + 1.0))) - 1.0
    return np.column_stack([f1, f2]), c[:, None]


def cf2(X, N=2, a=1.0):
    n = X.shape[1]
    j, J1, J2 = _index_sets_2(n)
    phase = 6.0 * np.pi * X[:, [0]] + j * np.pi / n
    y = np.where(J1, X[:, 1:] - np.sin(phase), X[:, 1:] - np.cos(phase))
    f1 = X[:, 0] + _mean2(y**2, J1)
    f2 = 1.0 - np.sqrt(X[:, 0]) + _mean2(y**2, J2)
    t = f2 + np.sqrt(f1) - a * np.sin(N * np.pi * (np.sqrt(f1) - f2 + 1.0)) - 1.0
    return np.column_stack([f1, f2]), _smooth_sign(t)[:, None]


def cf3(X, N=2, a=1.0):
    j, J1, J2 = _index_sets_2(X.shape[1])
    y = _sin_shift(X, j)
    f1 = X[:, 0] + 2.0 * _prod_cos_term(y, j, J1) / J1.sum()
    f2 = 1.0 - X[:, 0] ** 2 + 2.0 * _prod_cos_term(y, j, J2) / J2.sum()
    c = f2 + f1**2 - a * np.sin(N * np.pi * (f1**2 - f2 + 1.0)) - 1.0
    return np.column_stack([f1, f2]), c[:, None]


def _h2_piecewise(t):
    return np.where(t < 1.5 * (1.0 - np.sqrt(2.0) / 2.0), np.abs(t), 0.125 + (t - 1.0) ** 2)


def cf4(X):
    n = X.shape[1]
    j, J1, J2 = _index_sets_2(n)
    y = _sin_shift(X, j)
    h = np.where(j == 2, _h2_piecewise(y), y**2)
    f1 = X[:, 0] + h[:, J1].sum(axis=1)
    f2 = 1.0 - X[:, 0] + h[:, J2].sum(axis=1)
    t = X[:, 1] - np.sin(6.0 * np.pi * X[:, 0] + 2.0 * np.pi / n) - 0.5 * X[:, 0] + 0.25
    return np.column_stack([f1, f2]), _smooth_sign(t)[:, None]


def _cf56_shift(X, j):
    n = X.shape[1]
    x1 = X[:, [0]]
    phase = 6.0 * np.pi * x1 + j * np.pi / n
    return np.where(j % 2 == 1, X[:, 1:] - 0.8 * x1 * np.cos(phase), X[:, 1:] - 0.8 * x1 * np.sin(phase))


def cf5(X):
    n = X.shape[1]
    j, J1, J2 = _index_sets_2(n)
    y = _cf56_shift(X, j)
    h = np.where(j == 2, _h2_piecewise(y), 2.0 * y**2 - np.cos(4.0 * np.pi * y) + 1.0)
    f1 = X[:, 0] + h[:, J1].sum(axis=1)
    f2 = 1.0 - X[:, 0] + h[:, J2].sum(axis=1)
    c = X[:, 1] - 0.8 * X[:, 0] * np.sin(6.0 * np.pi * X[:, 0] + 2.0 * np.pi / n) - 0.5 * X[:, 0] + 0.25
    return np.column_stack([f1, f2]), c[:, None]


def _cf67_constraints(X, amp):
    n = X.shape[1]
    x1 = X[:, 0]
    u = 1.0 - x1
    c1 = X[:, 1] - amp * np.sin(6.0 * np.pi * x1 + 2.0 * np.pi / n) - _signed_sqrt(0.5 * u - u**2)
    c2 = X[:, 3] - amp * np.sin(6.0 * np.pi * x1 + 4.0 * np.pi / n) - _signed_sqrt(0.25 * np.sqrt(u) - 0.5 * u)
    return np.column_stack([c1, c2])


def cf6(X):
    j, J1, J2 = _index_sets_2(X.shape[1])
    y = _cf56_shift(X, j)
    f1 = X[:, 0] + (y[:, J1] ** 2).sum(axis=1)
    f2 = (1.0 - X[:, 0]) ** 2 + (y[:, J2] ** 2).sum(axis=1)
    return np.column_stack([f1, f2]), _cf67_constraints(X, 0.8 * X[:, 0])


def cf7(X):
    n = X.shape[1]
    j, J1, J2 = _index_sets_2(n)
    phase = 6.0 * np.pi * X[:, [0]] + j * np.pi / n
    y = np.where(J1, X[:, 1:] - np.cos(phase), X[:, 1:] - np.sin(phase))
    h = np.where((j == 2) | (j == 4), y**2, 2.0 * y**2 - np.cos(4.0 * np.pi * y) + 1.0)
    f1 = X[:, 0] + h[:, J1].sum(axis=1)
    f2 = (1.0 - X[:, 0]) ** 2 + h[:, J2].sum(axis=1)
    return np.column_stack([f1, f2]), _cf67_constraints(X, 1.0)


def _ratio(num, f3):
    den = 1.0 - f3**2
    den = np.where(np.abs(den) < 1e-12, np.where(den < 0, -1e-12, 1e-12), den)
    return num / den


def _cf8_10(X, h, N, a, absolute):
    y, J1, J2, J3 = _three_obj_shift(X)
    b1, b2, b3 = _sphere_base(X)
    hy = h(y)
    f1, f2, f3 = b1 + _mean2(hy, J1), b2 + _mean2(hy, J2), b3 + _mean2(hy, J3)
    s = np.sin(N * np.pi * (_ratio(f1**2 - f2**2, f3) + 1.0))
    if absolute:
        s = np.abs(s)
    c = _ratio(f1**2 + f2**2, f3) - a * s - 1.0
    return np.column_stack([f1, f2, f3]), c[:, None]


def cf8(X):
    return _cf8_10(X, lambda y: y**2, N=2, a=4.0, absolute=True)


def cf9(X):
    return _cf8_10(X, lambda y: y**2, N=2, a=3.0, absolute=False)


def cf10(X):
    return _cf8_10(X, lambda y: 4.0 * y**2 - np.cos(8.0 * np.pi * y) + 1.0, N=2, a=1.0, absolute=False)


# ---------------------------------------------------------------------------
# fronts


def _uf9_surface(u, v):
    x2 = np.sqrt(u)  # area-uniform on the triangle f1 + f2 + f3 = 1
    s = map_to_intervals(v, [(0.0, 0.25), (0.75, 1.0)])
    return np.column_stack([s * x2, (1.0 - s) * x2, 1.0 - x2])


def _cf8_curve(i):
    phi = np.arccos(np.sqrt(i / 4.0))

    def curve(t):
        f3 = t
        r = np.sqrt(1.0 - f3**2)
        return np.column_stack([r * np.cos(phi), r * np.sin(phi), f3])

    return curve


def _f1_zero_arc(t):
    return np.column_stack([np.zeros_like(t), np.sqrt(1.0 - t**2), t])


def _piecewise_cf4(t):
    f2 = np.where(t <= 0.5, 1.0 - t, np.where(t <= 0.75, -0.5 * t + 0.75, 1.0 - t + 0.125))
    return np.column_stack([t, f2])


def _piecewise_cf6(t):
    f2 = np.where(t <= 0.5, (1.0 - t) ** 2, np.where(t <= 0.75, 0.5 * (1.0 - t), 0.25 * np.sqrt(1.0 - t)))
    return np.column_stack([t, f2])


def problems():
    def two(name, d, first, rest, func, cat, props, front, n_constr=0):
        return Problem(name, d, 2, *bounds(d, first, rest), func, n_constr=n_constr, category=cat,
                       family=name[:2], properties=props, front=front)

    def three(name, d, rest, func, cat, props, front, n_constr=0):
        return Problem(name, d, 3, *bounds(d, (0, 1), rest, n_first=2), func, n_constr=n_constr, category=cat,
                       family=name[:2], properties=props, front=front)

    uf5_points = np.array([[i / 20.0, 1.0 - i / 20.0] for i in range(21)])
    cf1_points = np.array([[i / 20.0, 1.0 - i / 20.0] for i in range(21)])
    # feasible stretches of each front, read off the constraint on the unconstrained curve
    uf6_front = Curve2D(lambda t: np.column_stack([t, 1.0 - t]), [(0.0, 0.0), (0.25, 0.5), (0.75, 1.0)])
    cf2_front = Curve2D(lambda t: np.column_stack([t, 1.0 - np.sqrt(t)]),
                        [(0.0, 0.0), (1.0 / 16.0, 0.25), (9.0 / 16.0, 1.0)])
    cf3_front = Curve2D(lambda t: np.column_stack([t, 1.0 - t**2]),
                        [(0.0, 0.0), (np.sqrt(0.25), np.sqrt(0.5)), (np.sqrt(0.75), 1.0)])
    # two sphere patches by azimuth plus the quarter arc on the f1 = 0 plane
    cf9_front = SurfaceWithCurves(sphere_surface([(0.0, np.pi / 6.0), (np.pi / 4.0, np.pi / 3.0)]), np.pi / 4.0,
                                  [_f1_zero_arc], [np.pi / 2.0])

    return [
        two("UF1", 30, (0, 1), (-1, 1), uf1, "II", "Complex PS", convex_curve()),
        two("UF2", 30, (0, 1), (-1, 1), uf2, "II", "Complex PS", convex_curve()),
        two("UF3", 30, (0, 1), (0, 1), uf3, "II", "Complex PS", convex_curve()),
        two("UF4", 30, (0, 1), (-2, 2), uf4, "III", "Complex PS", concave_curve()),
        two("UF5", 30, (0, 1), (-1, 1), uf5, "V", "Linear, Distinct points, Complex PS", FinitePoints(uf5_points)),
        two("UF6", 30, (0, 1), (-1, 1), uf6, "V", "Complex PS", uf6_front),
        two("UF7", 30, (0, 1), (-1, 1), uf7, "IV", "Complex PS, Linear", linear_curve()),
        three("UF8", 30, (-2, 2), uf8, "I", "Complex PS", sphere_surface()),
        three("UF9", 30, (-2, 2), uf9, "V", "Complex PS", Surface3D(_uf9_surface)),
        three("UF10", 30, (-2, 2), uf10, "I", "Complex PS", sphere_surface()),
        two("CF1", 10, (0, 1), (0, 1), cf1, "VII", "Linear, Complex PS, Distinct points", FinitePoints(cf1_points), 1),
        two("CF2", 10, (0, 1), (-1, 1), cf2, "VII", "Convex, Complex PS", cf2_front, 1),
        two("CF3", 10, (0, 1), (-2, 2), cf3, "VII", "Concave, Complex PS", cf3_front, 1),
        two("CF4", 10, (0, 1), (-2, 2), cf4, "VIII", "Linear, Complex PS", Curve2D(_piecewise_cf4, [(0.0, 1.0)]), 1),
        two("CF5", 10, (0, 1), (-2, 2), cf5, "VIII", "Linear, Complex PS", Curve2D(_piecewise_cf4, [(0.0, 1.0)]), 1),
        two("CF6", 10, (0, 1), (-2, 2), cf6, "VIII", "Mixed, Complex PS", Curve2D(_piecewise_cf6, [(0.0, 1.0)]), 2),
        two("CF7", 10, (0, 1), (-2, 2), cf7, "VIII", "Mixed, Complex PS", Curve2D(_piecewise_cf6, [(0.0, 1.0)]), 2),
        three("CF8", 10, (-4, 4), cf8, "VII", "Concave, Degenerated, Complex PS",
              Curves3D([_cf8_curve(i) for i in range(5)]), 1),
        three("CF9", 10, (-2, 2), cf9, "VII", "Concave, Complex PS", cf9_front, 1),
        three("CF10", 10, (-2, 2), cf10, "VII", "Concave, Complex PS", cf9_front, 1),
    ]
