"""Regenerate ``golden_probes.json`` from scalar, loop-based problem definitions.

This script deliberately shares no code with the package: every problem is
re-transcribed with plain ``math`` so the vectorised evaluators can be
checked against it. When Platypus is importable its ZDT, DTLZ, UF and CF
objectives are compared as a second opinion.

    python tests/data/make_golden.py
"""

from __future__ import annotations

import json
import math
import random
import zlib
from pathlib import Path

PI = math.pi
TOL = 1e-8


def viol(gs):
    return sum(-g for g in gs if g < -TOL)


def unit(n):
    return [0.0] * n, [1.0] * n


# ---------------------------------------------------------------- ZDT

def zdt_g(x):
    return 1 + 9 * sum(x[1:]) / (len(x) - 1)


def zdt1(x):
    g = zdt_g(x)
    return [x[0], g * (1 - math.sqrt(x[0] / g))], []


def zdt2(x):
    g = zdt_g(x)
    return [x[0], g * (1 - (x[0] / g) ** 2)], []


def zdt3(x):
    g = zdt_g(x)
    r = x[0] / g
    return [x[0], g * (1 - math.sqrt(r) - r * math.sin(10 * PI * x[0]))], []


def zdt4(x):
    g = 1 + 10 * (len(x) - 1) + sum(v * v - 10 * math.cos(4 * PI * v) for v in x[1:])
    return [x[0], g * (1 - math.sqrt(x[0] / g))], []


def zdt6(x):
    f1 = 1 - math.exp(-4 * x[0]) * math.sin(6 * PI * x[0]) ** 6
    g = 1 + 9 * (sum(x[1:]) / (len(x) - 1)) ** 0.25
    return [f1, g * (1 - (f1 / g) ** 2)], []


# ---------------------------------------------------------------- DTLZ (M = 3)

def rastrigin(xm):
    return 100 * (len(xm) + sum((v - 0.5) ** 2 - math.cos(20 * PI * (v - 0.5)) for v in xm))


def sphere(xm):
    return sum((v - 0.5) ** 2 for v in xm)


def angles_to_f(t1, t2, g):
    return [(1 + g) * math.cos(t1) * math.cos(t2), (1 + g) * math.cos(t1) * math.sin(t2), (1 + g) * math.sin(t1)]


def dtlz1(x):
    g = rastrigin(x[2:])
    return [0.5 * x[0] * x[1] * (1 + g), 0.5 * x[0] * (1 - x[1]) * (1 + g), 0.5 * (1 - x[0]) * (1 + g)], []


def dtlz2(x):
    return angles_to_f(x[0] * PI / 2, x[1] * PI / 2, sphere(x[2:])), []


def dtlz3(x):
    return angles_to_f(x[0] * PI / 2, x[1] * PI / 2, rastrigin(x[2:])), []


def dtlz4(x):
    return angles_to_f(x[0] ** 100 * PI / 2, x[1] ** 100 * PI / 2, sphere(x[2:])), []


def dtlz5(x):
    g = sphere(x[2:])
    return angles_to_f(x[0] * PI / 2, PI / (4 * (1 + g)) * (1 + 2 * g * x[1]), g), []


def dtlz6(x):
    g = sum(v ** 0.1 for v in x[2:])
    return angles_to_f(x[0] * PI / 2, PI / (4 * (1 + g)) * (1 + 2 * g * x[1]), g), []


def dtlz7(x):
    xm = x[2:]
    g = 1 + 9 / len(xm) * sum(xm)
    h = 3 - sum(f / (1 + g) * (1 + math.sin(3 * PI * f)) for f in x[:2])
    return [x[0], x[1], (1 + g) * h], []


# ---------------------------------------------------------------- CEC 2009 (1-based j as published)

def split2(n):
    return [j for j in range(2, n + 1) if j % 2 == 1], [j for j in range(2, n + 1) if j % 2 == 0]


def split3(n):
    return ([j for j in range(3, n + 1) if (j - 1) % 3 == 0], [j for j in range(3, n + 1) if (j - 2) % 3 == 0],
            [j for j in range(3, n + 1) if j % 3 == 0])


def uf_sin(x, j):
    n = len(x)
    return x[j - 1] - math.sin(6 * PI * x[0] + j * PI / n)


def prod_term(ys_js):
    s = sum(y * y for y, _ in ys_js)
    p = 1.0
    for y, j in ys_js:
        p *= math.cos(20 * y * PI / math.sqrt(j))
    return s, p


def uf1(x):
    J1, J2 = split2(len(x))
    return [x[0] + 2 / len(J1) * sum(uf_sin(x, j) ** 2 for j in J1),
            1 - math.sqrt(x[0]) + 2 / len(J2) * sum(uf_sin(x, j) ** 2 for j in J2)], []


def uf2(x):
    n = len(x)
    J1, J2 = split2(n)
    x1 = x[0]

    def amp(j):
        return 0.3 * x1 * x1 * math.cos(24 * PI * x1 + 4 * j * PI / n) + 0.6 * x1

    s1 = sum((x[j - 1] - amp(j) * math.cos(6 * PI * x1 + j * PI / n)) ** 2 for j in J1)
    s2 = sum((x[j - 1] - amp(j) * math.sin(6 * PI * x1 + j * PI / n)) ** 2 for j in J2)
    return [x1 + 2 / len(J1) * s1, 1 - math.sqrt(x1) + 2 / len(J2) * s2], []


def uf3(x):
    n = len(x)
    J1, J2 = split2(n)
    x1 = x[0]

    def y(j):
        return x[j - 1] - x1 ** (0.5 * (1 + 3 * (j - 2) / (n - 2)))

    out = []
    for J, base in ((J1, x1), (J2, 1 - math.sqrt(x1))):
        s, p = prod_term([(y(j), j) for j in J])
        out.append(base + 2 / len(J) * (4 * s - 2 * p + 2))
    return out, []


def uf4(x):
    J1, J2 = split2(len(x))

    def h(t):
        return abs(t) / (1 + math.exp(2 * abs(t)))

    return [x[0] + 2 / len(J1) * sum(h(uf_sin(x, j)) for j in J1),
            1 - x[0] ** 2 + 2 / len(J2) * sum(h(uf_sin(x, j)) for j in J2)], []


def uf5(x):
    J1, J2 = split2(len(x))
    N, eps = 10, 0.1

    def h(t):
        return 2 * t * t - math.cos(4 * PI * t) + 1

    extra = (1 / (2 * N) + eps) * abs(math.sin(2 * N * PI * x[0]))
    return [x[0] + extra + 2 / len(J1) * sum(h(uf_sin(x, j)) for j in J1),
            1 - x[0] + extra + 2 / len(J2) * sum(h(uf_sin(x, j)) for j in J2)], []


def uf6(x):
    J1, J2 = split2(len(x))
    N, eps = 2, 0.1
    extra = max(0.0, 2 * (1 / (2 * N) + eps) * math.sin(2 * N * PI * x[0]))
    out = []
    for J, base in ((J1, x[0]), (J2, 1 - x[0])):
        s, p = prod_term([(uf_sin(x, j), j) for j in J])
        out.append(base + extra + 2 / len(J) * (4 * s - 2 * p + 2))
    return out, []


def uf7(x):
    J1, J2 = split2(len(x))
    r = x[0] ** 0.2
    return [r + 2 / len(J1) * sum(uf_sin(x, j) ** 2 for j in J1),
            1 - r + 2 / len(J2) * sum(uf_sin(x, j) ** 2 for j in J2)], []


def y3(x, j):
    n = len(x)
    return x[j - 1] - 2 * x[1] * math.sin(2 * PI * x[0] + j * PI / n)


def three_obj(x, base, term):
    return [b + 2 / len(J) * sum(term(y3(x, j)) for j in J) for b, J in zip(base, split3(len(x)))]


def sphere_base(x):
    a, b = 0.5 * PI * x[0], 0.5 * PI * x[1]
    return [math.cos(a) * math.cos(b), math.cos(a) * math.sin(b), math.sin(a)]


def uf8(x):
    return three_obj(x, sphere_base(x), lambda t: t * t), []


def uf9(x):
    eps = 0.1
    c = max(0.0, (1 + eps) * (1 - 4 * (2 * x[0] - 1) ** 2))
    base = [0.5 * (c + 2 * x[0]) * x[1], 0.5 * (c - 2 * x[0] + 2) * x[1], 1 - x[1]]
    return three_obj(x, base, lambda t: t * t), []


def uf10(x):
    return three_obj(x, sphere_base(x), lambda t: 4 * t * t - math.cos(8 * PI * t) + 1), []


def cf1(x):
    n = len(x)
    J1, J2 = split2(n)
    N, a = 10, 1.0

    def y(j):
        return x[j - 1] - x[0] ** (0.5 * (1 + 3 * (j - 2) / (n - 2)))

    f1 = x[0] + 2 / len(J1) * sum(y(j) ** 2 for j in J1)
    f2 = 1 - x[0] + 2 / len(J2) * sum(y(j) ** 2 for j in J2)
    return [f1, f2], [f1 + f2 - a * abs(math.sin(N * PI * (f1 - f2 + 1))) - 1]


def cf2(x):
    n = len(x)
    J1, J2 = split2(n)
    N, a = 2, 1.0
    f1 = x[0] + 2 / len(J1) * sum((x[j - 1] - math.sin(6 * PI * x[0] + j * PI / n)) ** 2 for j in J1)
    f2 = 1 - math.sqrt(x[0]) + 2 / len(J2) * sum((x[j - 1] - math.cos(6 * PI * x[0] + j * PI / n)) ** 2 for j in J2)
    t = f2 + math.sqrt(f1) - a * math.sin(N * PI * (math.sqrt(f1) - f2 + 1)) - 1
    return [f1, f2], [t / (1 + math.exp(4 * abs(t)))]


def cf3(x):
    J1, J2 = split2(len(x))
    N, a = 2, 1.0
    out = []
    for J, base in ((J1, x[0]), (J2, 1 - x[0] ** 2)):
        s, p = prod_term([(uf_sin(x, j), j) for j in J])
        out.append(base + 2 / len(J) * (4 * s - 2 * p + 2))
    f1, f2 = out
    return out, [f2 + f1 * f1 - a * math.sin(N * PI * (f1 * f1 - f2 + 1)) - 1]


def h2_cf45(t):
    return abs(t) if t < 1.5 * (1 - math.sqrt(2) / 2) else 0.125 + (t - 1) ** 2


def cf4(x):
    n = len(x)
    J1, J2 = split2(n)

    def h(j, t):
        return h2_cf45(t) if j == 2 else t * t

    f1 = x[0] + sum(h(j, uf_sin(x, j)) for j in J1)
    f2 = 1 - x[0] + sum(h(j, uf_sin(x, j)) for j in J2)
    t = x[1] - math.sin(6 * PI * x[0] + 2 * PI / n) - 0.5 * x[0] + 0.25
    return [f1, f2], [t / (1 + math.exp(4 * abs(t)))]


def y_cf5(x, j, odd):
    n = len(x)
    trig = math.cos if odd else math.sin
    return x[j - 1] - 0.8 * x[0] * trig(6 * PI * x[0] + j * PI / n)


def cf5(x):
    n = len(x)
    J1, J2 = split2(n)

    def h(j, t):
        return h2_cf45(t) if j == 2 else 2 * t * t - math.cos(4 * PI * t) + 1

    f1 = x[0] + sum(h(j, y_cf5(x, j, True)) for j in J1)
    f2 = 1 - x[0] + sum(h(j, y_cf5(x, j, False)) for j in J2)
    return [f1, f2], [x[1] - 0.8 * x[0] * math.sin(6 * PI * x[0] + 2 * PI / n) - 0.5 * x[0] + 0.25]


def sgn(v):
    return (v > 0) - (v < 0)


def cf67_constraints(x):
    n = len(x)
    u = 1 - x[0]
    a = 0.5 * u - u * u
    b = 0.25 * math.sqrt(u) - 0.5 * u
    return [x[1] - 0.8 * x[0] * math.sin(6 * PI * x[0] + 2 * PI / n) - sgn(a) * math.sqrt(abs(a)),
            x[3] - 0.8 * x[0] * math.sin(6 * PI * x[0] + 4 * PI / n) - sgn(b) * math.sqrt(abs(b))]


def cf6(x):
    J1, J2 = split2(len(x))
    f1 = x[0] + sum(y_cf5(x, j, True) ** 2 for j in J1)
    f2 = (1 - x[0]) ** 2 + sum(y_cf5(x, j, False) ** 2 for j in J2)
    return [f1, f2], cf67_constraints(x)


def cf7(x):
    # as in the benchmark's reference C code: no 0.8 x1 amplitude in y or the constraints
    n = len(x)
    J1, J2 = split2(n)

    def h(j, t):
        return t * t if j in (2, 4) else 2 * t * t - math.cos(4 * PI * t) + 1

    def y(j, odd):
        trig = math.cos if odd else math.sin
        return x[j - 1] - trig(6 * PI * x[0] + j * PI / n)

    f1 = x[0] + sum(h(j, y(j, True)) for j in J1)
    f2 = (1 - x[0]) ** 2 + sum(h(j, y(j, False)) for j in J2)
    u = 1 - x[0]
    a = 0.5 * u - u * u
    b = 0.25 * math.sqrt(u) - 0.5 * u
    return [f1, f2], [x[1] - math.sin(6 * PI * x[0] + 2 * PI / n) - sgn(a) * math.sqrt(abs(a)),
                      x[3] - math.sin(6 * PI * x[0] + 4 * PI / n) - sgn(b) * math.sqrt(abs(b))]


def cf8_10_constraint(f, a, N, absolute):
    f1, f2, f3 = f
    q = (f1 * f1 + f2 * f2) / (1 - f3 * f3)
    r = (f1 * f1 - f2 * f2) / (1 - f3 * f3)
    s = math.sin(N * PI * (r + 1))
    return [q - a * (abs(s) if absolute else s) - 1]


def cf8(x):
    f = three_obj(x, sphere_base(x), lambda t: t * t)
    return f, cf8_10_constraint(f, 4.0, 2, True)


def cf9(x):
    f = three_obj(x, sphere_base(x), lambda t: t * t)
    return f, cf8_10_constraint(f, 3.0, 2, False)


def cf10(x):
    f = three_obj(x, sphere_base(x), lambda t: 4 * t * t - math.cos(8 * PI * t) + 1)
    return f, cf8_10_constraint(f, 1.0, 2, False)


# ---------------------------------------------------------------- MOP1-7

def h_mop(t):
    return -0.9 * t * t + abs(t) ** 0.6


def k_mop(t):
    return abs(t) / (1 + math.exp(5 * abs(t)))


def t_sin(x):
    return [v - math.sin(0.5 * PI * x[0]) for v in x[1:]]


def t_prod(x):
    return [v - x[0] * x[1] for v in x[2:]]


def mop1(x):
    g = 2 * math.sin(PI * x[0]) * sum(h_mop(t) for t in t_sin(x))
    return [(1 + g) * x[0], (1 + g) * (1 - math.sqrt(x[0]))], []


def mop2(x):
    g = 10 * math.sin(PI * x[0]) * sum(k_mop(t) for t in t_sin(x))
    return [(1 + g) * x[0], (1 + g) * (1 - x[0] ** 2)], []


def mop3(x):
    g = 10 * math.sin(PI * x[0] / 2) * sum(k_mop(t) for t in t_sin(x))
    return [(1 + g) * math.cos(PI * x[0] / 2), (1 + g) * math.sin(PI * x[0] / 2)], []


def mop4(x):
    g = 10 * math.sin(PI * x[0]) * sum(k_mop(t) for t in t_sin(x))
    return [(1 + g) * x[0], (1 + g) * (1 - x[0] ** 0.5 * math.cos(2 * PI * x[0]) ** 2)], []


def mop5(x):
    g = 2 * abs(math.cos(PI * x[0])) * sum(h_mop(t) for t in t_sin(x))
    return [(1 + g) * x[0], (1 + g) * (1 - math.sqrt(x[0]))], []


def mop6(x):
    g = 2 * math.sin(PI * x[0]) * sum(h_mop(t) for t in t_prod(x))
    return [(1 + g) * x[0] * x[1], (1 + g) * x[0] * (1 - x[1]), (1 + g) * (1 - x[0])], []


def mop7(x):
    g = 2 * math.sin(PI * x[0]) * sum(h_mop(t) for t in t_prod(x))
    return angles_to_f(PI * x[0] / 2, PI * x[1] / 2, g), []


# ---------------------------------------------------------------- IMB1-10

def imb2d(x, inside, shape, g_in=None, g_out=None):
    if g_in is None:
        g = 0.0 if inside else sum(h_mop(t) for t in t_sin(x))
    else:
        g = g_in if inside else g_out
    x1 = x[0]
    if shape == "convex":
        return [(1 + g) * x1, (1 + g) * (1 - math.sqrt(x1))], []
    if shape == "linear":
        return [(1 + g) * x1, (1 + g) * (1 - x1)], []
    return [(1 + g) * math.cos(PI * x1 / 2), (1 + g) * math.sin(PI * x1 / 2)], []


def plane(x, g):
    return [(1 + g) * x[0] * x[1], (1 + g) * x[0] * (1 - x[1]), (1 + g) * (1 - x[0])]


def imb3d_g(x, inside):
    if inside:
        return 0.0
    return 2 * math.cos(PI * x[0] / 2) * sum(h_mop(v - 0.5 * (x[0] + x[1])) for v in x[2:])


def imb1(x):
    return imb2d(x, x[0] <= 0.2, "convex")


def imb2(x):
    return imb2d(x, 0.4 <= x[0] <= 0.6, "linear")


def imb3(x):
    return imb2d(x, x[0] >= 0.8, "circle")


def imb4(x):
    return plane(x, imb3d_g(x, x[0] >= 2 / 3)), []


def imb5(x):
    return angles_to_f(PI * x[0] / 2, PI * x[1] / 2, imb3d_g(x, x[0] <= 0.5)), []


def imb6(x):
    return plane(x, imb3d_g(x, x[0] <= 0.75 and x[1] <= 0.75)), []


def imb_switch(x, shape):
    g_in = sum(h_mop(v - 0.5) for v in x[1:])
    g_out = sum(abs(t) ** 0.6 for t in t_sin(x))
    return imb2d(x, 0.5 <= x[0] <= 0.8, shape, g_in, g_out)


def imb7(x):
    return imb_switch(x, "convex")


def imb8(x):
    return imb_switch(x, "linear")


def imb9(x):
    return imb_switch(x, "circle")


def imb10(x):
    inside = 0.2 <= x[0] <= 0.8 and 0.2 <= x[1] <= 0.8
    g_in = sum(h_mop(v - 0.5) for v in x[2:])
    g_out = sum(abs(v - x[0] * x[1]) ** 0.6 for v in x[2:])
    return plane(x, g_in if inside else g_out), []


# ---------------------------------------------------------------- roster: name -> (func, n, lower, upper)

def box(n, first, rest, n_first=1):
    lo = [first[0]] * n_first + [rest[0]] * (n - n_first)
    hi = [first[1]] * n_first + [rest[1]] * (n - n_first)
    return lo, hi


ROSTER = {
    "ZDT1": (zdt1, *unit(30)), "ZDT2": (zdt2, *unit(30)), "ZDT3": (zdt3, *unit(30)),
    "ZDT4": (zdt4, *box(10, (0, 1), (-5, 5))), "ZDT6": (zdt6, *unit(10)),
    "DTLZ1": (dtlz1, *unit(7)), "DTLZ2": (dtlz2, *unit(12)), "DTLZ3": (dtlz3, *unit(12)),
    "DTLZ4": (dtlz4, *unit(12)), "DTLZ5": (dtlz5, *unit(12)), "DTLZ6": (dtlz6, *unit(12)),
    "DTLZ7": (dtlz7, *unit(22)),
    "UF1": (uf1, *box(30, (0, 1), (-1, 1))), "UF2": (uf2, *box(30, (0, 1), (-1, 1))), "UF3": (uf3, *unit(30)),
    "UF4": (uf4, *box(30, (0, 1), (-2, 2))), "UF5": (uf5, *box(30, (0, 1), (-1, 1))),
    "UF6": (uf6, *box(30, (0, 1), (-1, 1))), "UF7": (uf7, *box(30, (0, 1), (-1, 1))),
    "UF8": (uf8, *box(30, (0, 1), (-2, 2), 2)), "UF9": (uf9, *box(30, (0, 1), (-2, 2), 2)),
    "UF10": (uf10, *box(30, (0, 1), (-2, 2), 2)),
    "CF1": (cf1, *unit(10)), "CF2": (cf2, *box(10, (0, 1), (-1, 1))), "CF3": (cf3, *box(10, (0, 1), (-2, 2))),
    "CF4": (cf4, *box(10, (0, 1), (-2, 2))), "CF5": (cf5, *box(10, (0, 1), (-2, 2))),
    "CF6": (cf6, *box(10, (0, 1), (-2, 2))), "CF7": (cf7, *box(10, (0, 1), (-2, 2))),
    "CF8": (cf8, *box(10, (0, 1), (-4, 4), 2)), "CF9": (cf9, *box(10, (0, 1), (-2, 2), 2)),
    "CF10": (cf10, *box(10, (0, 1), (-2, 2), 2)),
    **{f"MOP{i}": (f, *unit(10)) for i, f in enumerate((mop1, mop2, mop3, mop4, mop5, mop6, mop7), 1)},
    **{f"IMB{i}": (f, *unit(10)) for i, f in enumerate((imb1, imb2, imb3, imb4, imb5, imb6, imb7, imb8, imb9,
                                                        imb10), 1)},
}

N_PROBES = 3


def probes(name, lo, hi):
    """Seeded interior points plus one point on the lower-left of the box interior."""
    rnd = random.Random(zlib.crc32(name.encode()))
    pts = [[a + rnd.random() * (b - a) for a, b in zip(lo, hi)] for _ in range(N_PROBES)]
    # imbalanced families switch branches on x1, x2: add a point in each regime
    pts.append([a + 0.1 * (b - a) for a, b in zip(lo, hi)])
    pts.append([a + 0.7 * (b - a) for a, b in zip(lo, hi)])
    return pts


def platypus_check(records):
    try:
        import platypus
    except ImportError:
        print("platypus not installed; skipping the second-opinion check")
        return
    worst = 0.0
    for name, rec in records.items():
        cls = getattr(platypus, name, None)
        if cls is None or name.startswith(("MOP", "IMB")) or name in ("DTLZ5", "DTLZ6", "CF8", "CF9", "CF10"):
            # absent from Platypus, or (CF8-10) its objectives are malformed lists
            continue
        n = len(rec["lower"])
        kwargs = {"nobjs": 3} if name.startswith("DTLZ") else {}
        try:
            prob = cls(nvars=n, **kwargs)
        except TypeError:
            prob = cls(**kwargs)
        if prob.nvars != n:
            print(f"{name}: platypus uses {prob.nvars} variables, skipped")
            continue
        for p in rec["probes"]:
            sol = platypus.Solution(prob)
            sol.variables[:] = p["x"]
            sol.evaluate()
            err = max(abs(a - b) / max(1.0, abs(b)) for a, b in zip(sol.objectives[:], p["f"]))
            worst = max(worst, err)
            if err > 1e-9:
                print(f"{name}: objectives differ from platypus by {err:.3g}")
    print(f"platypus objective check: worst relative difference {worst:.3g}")


def main():
    records = {}
    for name, (func, lo, hi) in ROSTER.items():
        rows = []
        for x in probes(name, lo, hi):
            f, g = func(x)
            rows.append({"x": x, "f": f, "cv": viol(g)})
        records[name] = {"lower": lo, "upper": hi, "probes": rows}
    platypus_check(records)
    out = Path(__file__).with_name("golden_probes.json")
    out.write_text(json.dumps(records, indent=1, sort_keys=True) + "\n")
    print(f"wrote {out} ({len(records)} problems)")


if __name__ == "__main__":
    main()
