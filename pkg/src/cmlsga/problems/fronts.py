"""Analytic Pareto-front samplers and reference-front file loading.

Two-objective fronts are described as a parametric curve over one or more
parameter intervals (a zero-length interval is an isolated point). Sample
counts go to intervals in proportion to their length, so discontinuous
fronts are covered evenly. Three-objective fronts are sampled on the
surface's natural two-parameter patch with a rank-1 (R2) lattice, which
gives exactly ``n`` distinct, evenly spread points.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from ..core import nondominated_mask

logger = logging.getLogger(__name__)

DEFAULT_RESOLUTION = 10_000


class FrontParseError(ValueError):
    """Malformed reference-front file."""


@dataclass(frozen=True)
class ReferenceFront:
    points: np.ndarray
    source: str = "analytic-sampler"
    rejected: int = field(default=0, compare=False)

    def __len__(self) -> int:
        return self.points.shape[0]

    @property
    def n_obj(self) -> int:
        return self.points.shape[1]

    @property
    def nadir(self) -> np.ndarray:
        return self.points.max(axis=0)


# ---------------------------------------------------------------------------
# parameter-space helpers


def r2_lattice(n: int) -> np.ndarray:
    """First ``n`` points of the additive-recurrence R2 sequence in [0, 1)^2."""
    g = 1.32471795724474602596
    alpha = np.array([1.0 / g, 1.0 / g**2])
    i = np.arange(n)[:, None]
    return np.mod(0.5 + alpha * i, 1.0)


def map_to_intervals(u: np.ndarray, intervals: Sequence[tuple[float, float]]) -> np.ndarray:
    """Map u in [0, 1] onto a union of intervals, uniformly by length."""
    lo = np.array([a for a, _ in intervals], dtype=float)
    lengths = np.array([b - a for a, b in intervals], dtype=float)
    cum = np.concatenate([[0.0], np.cumsum(lengths)])
    s = np.asarray(u, dtype=float) * cum[-1]
    k = np.clip(np.searchsorted(cum, s, side="right") - 1, 0, len(intervals) - 1)
    return lo[k] + (s - cum[k])


def allocate(n: int, weights: Sequence[float]) -> list[int]:
    """Split ``n`` proportionally to ``weights`` with largest-remainder rounding."""
    w = np.asarray(weights, dtype=float)
    if w.sum() == 0:
        w = np.ones_like(w)
    raw = n * w / w.sum()
    counts = np.floor(raw).astype(int)
    rest = n - counts.sum()
    order = np.argsort(-(raw - counts), kind="stable")
    counts[order[:rest]] += 1
    return counts.tolist()


def running_best_intervals(func: Callable[[np.ndarray], np.ndarray], lo: float, hi: float,
                           grid: int = 2_000_001, maximize: bool = False) -> list[tuple[float, float]]:
    """Sub-intervals of [lo, hi] where ``func`` strictly improves on its running best.

    For a two-objective front ``f2 = func(f1)`` these are exactly the
    nondominated stretches (running minimum); with ``maximize`` the test is
    against the running maximum.
    """
    t = np.linspace(lo, hi, grid)
    v = np.asarray(func(t), dtype=float)
    if maximize:
        v = -v
    prev_best = np.concatenate([[np.inf], np.minimum.accumulate(v)[:-1]])
    keep = v < prev_best
    edges = np.diff(keep.astype(np.int8))
    starts = list(np.flatnonzero(edges == 1) + 1)
    ends = list(np.flatnonzero(edges == -1))
    if keep[0]:
        starts.insert(0, 0)
    if keep[-1]:
        ends.append(grid - 1)
    return [(float(t[s]), float(t[e])) for s, e in zip(starts, ends)]


# ---------------------------------------------------------------------------
# front descriptions


@dataclass(frozen=True)
class Curve2D:
    """Two-objective front traced by ``curve(t)`` over parameter intervals."""

    curve: Callable[[np.ndarray], np.ndarray]
    intervals: Sequence[tuple[float, float]] | Callable[[], Sequence[tuple[float, float]]]

    def pieces(self) -> list[tuple[float, float]]:
        iv = self.intervals() if callable(self.intervals) else self.intervals
        return [(float(a), float(b)) for a, b in iv]

    def sample(self, n: int) -> np.ndarray:
        pieces = self.pieces()
        if n == 2:
            t = np.array([pieces[0][0], pieces[-1][1]])
            return self.curve(t)
        isolated = [p for p in pieces if p[1] == p[0]]
        spans = [p for p in pieces if p[1] > p[0]]
        if n < len(isolated):
            t = np.array([p[0] for p in isolated])[np.linspace(0, len(isolated) - 1, n).round().astype(int)]
            return self.curve(t)
        counts = allocate(n - len(isolated), [b - a for a, b in spans])
        ts = [np.array([p[0]]) for p in isolated]
        for (a, b), c in zip(spans, counts):
            if c == 1:
                ts.append(np.array([0.5 * (a + b)]))
            elif c > 1:
                ts.append(np.linspace(a, b, c))
        t = np.sort(np.concatenate(ts))
        return self.curve(t)


@dataclass(frozen=True)
class FinitePoints:
    """Front made of finitely many distinct points (ordered along the front)."""

    points: np.ndarray

    def sample(self, n: int) -> np.ndarray:
        pts = np.asarray(self.points, dtype=float)
        if n >= len(pts):
            return pts.copy()
        idx = np.linspace(0, len(pts) - 1, n).round().astype(int)
        return pts[idx]


@dataclass(frozen=True)
class Surface3D:
    """Three-objective front given by ``surface(u, v)`` on the unit square."""

    surface: Callable[[np.ndarray, np.ndarray], np.ndarray]

    def sample(self, n: int) -> np.ndarray:
        uv = r2_lattice(n)
        return self.surface(uv[:, 0], uv[:, 1])


@dataclass(frozen=True)
class Curves3D:
    """Union of one-parameter curves in three objectives, sampled evenly."""

    curves: Sequence[Callable[[np.ndarray], np.ndarray]]

    def sample(self, n: int) -> np.ndarray:
        counts = allocate(n, [1.0] * len(self.curves))
        out = [c(np.linspace(0.0, 1.0, k)) for c, k in zip(self.curves, counts) if k > 0]
        return np.vstack(out)


@dataclass(frozen=True)
class SurfaceWithCurves:
    """A surface patch of known area plus lower-dimensional curves of known length.

    Points are split so that the spacing along the curves matches the mean
    spacing on the surface: ``n_s + L * sqrt(n_s / A) = n``.
    """

    surface: Surface3D
    area: float
    curves: Sequence[Callable[[np.ndarray], np.ndarray]]
    lengths: Sequence[float]

    def sample(self, n: int) -> np.ndarray:
        total_len = float(sum(self.lengths))
        root = (-total_len / np.sqrt(self.area) + np.sqrt(total_len**2 / self.area + 4.0 * n)) / 2.0
        n_surface = min(n, max(1, int(round(root**2))))
        counts = allocate(n - n_surface, self.lengths)
        parts = [self.surface.sample(n_surface)]
        parts += [c(np.linspace(0.0, 1.0, k)) for c, k in zip(self.curves, counts) if k > 0]
        return np.vstack(parts)


# ---------------------------------------------------------------------------
# stock shapes


def convex_curve():
    return Curve2D(lambda t: np.column_stack([t, 1.0 - np.sqrt(t)]), [(0.0, 1.0)])


def linear_curve():
    return Curve2D(lambda t: np.column_stack([t, 1.0 - t]), [(0.0, 1.0)])


def concave_curve():
    return Curve2D(lambda t: np.column_stack([t, 1.0 - t**2]), [(0.0, 1.0)])


def quarter_circle():
    # parameter is the polar angle measured from the f1 axis, reversed so t=0 is f1=0
    return Curve2D(lambda t: np.column_stack([np.sin(t), np.cos(t)]), [(0.0, np.pi / 2)])


def simplex_surface(scale: float = 1.0):
    def surface(u, v):
        flip = u + v > 1.0
        a = np.where(flip, 1.0 - u, u)
        b = np.where(flip, 1.0 - v, v)
        return scale * np.column_stack([a, b, 1.0 - a - b])

    return Surface3D(surface)


def sphere_surface(azimuth: Sequence[tuple[float, float]] = ((0.0, np.pi / 2),)):
    """Unit-sphere octant, area-uniform: f3 uniform, azimuth uniform on its intervals."""

    def surface(u, v):
        f3 = u
        phi = map_to_intervals(v, azimuth)
        r = np.sqrt(1.0 - f3**2)
        return np.column_stack([r * np.cos(phi), r * np.sin(phi), f3])

    return Surface3D(surface)


def sample_front(front, n: int) -> np.ndarray:
    if n < 2:
        raise ValueError("front resolution must be at least 2")
    pts = front.sample(n)
    mask = nondominated_mask(pts) if len(pts) <= 4000 else _nondominated_mask_sweep(pts)
    if not mask.all():
        logger.debug("dropping %d dominated samples", int((~mask).sum()))
    return pts[mask]


def _nondominated_mask_sweep(pts: np.ndarray) -> np.ndarray:
    """Chunked nondominance filter for large point sets."""
    n = len(pts)
    if pts.shape[1] == 2:
        # sort by f1 then f2: a point survives iff its f2 beats every earlier f2
        order = np.lexsort((pts[:, 1], pts[:, 0]))
        f2 = pts[order, 1]
        prev = np.concatenate([[np.inf], np.minimum.accumulate(f2)[:-1]])
        same_prev = np.zeros(n, dtype=bool)
        same_prev[1:] = np.all(pts[order[1:]] == pts[order[:-1]], axis=1)
        # duplicates share the verdict of the first copy
        group = np.cumsum(~same_prev) - 1
        keep = (f2 < prev)[np.flatnonzero(~same_prev)][group]
        mask = np.zeros(n, dtype=bool)
        mask[order] = keep
        return mask
    mask = np.ones(n, dtype=bool)
    chunk = max(1, 4_000_000 // max(n, 1))
    for s in range(0, n, chunk):
        block = pts[s:s + chunk]
        # le[b, j]: point j is no worse than block row b in every objective
        le = np.ones((len(block), n), dtype=bool)
        lt = np.zeros((len(block), n), dtype=bool)
        for k in range(pts.shape[1]):
            col, row = pts[:, k][None, :], block[:, k][:, None]
            le &= col <= row
            lt |= col < row
        mask[s:s + chunk] = ~np.any(le & lt, axis=1)
    return mask


# ---------------------------------------------------------------------------
# file format


def load_reference_front(path, n_obj: int | None = None) -> ReferenceFront:
    """Read a whitespace-separated front file ('#' starts a comment line).

    Duplicate rows are dropped and dominated rows rejected with a warning.
    """
    path = Path(path)
    rows = []
    with path.open() as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            try:
                row = [float(tok) for tok in text.split()]
            except ValueError as exc:
                raise FrontParseError(f"{path}:{lineno}: non-numeric field ({exc})") from None
            if n_obj is None:
                n_obj = len(row)
            if len(row) != n_obj:
                raise FrontParseError(f"{path}:{lineno}: expected {n_obj} columns, found {len(row)}")
            if not all(np.isfinite(row)):
                raise FrontParseError(f"{path}:{lineno}: non-finite value")
            rows.append(row)
    if not rows:
        raise FrontParseError(f"{path}: no points found")
    pts = np.array(rows, dtype=float)
    _, first = np.unique(pts, axis=0, return_index=True)
    pts = pts[np.sort(first)]
    mask = _nondominated_mask_sweep(pts)
    rejected = int((~mask).sum())
    if rejected:
        warnings.warn(f"{path}: rejected {rejected} dominated row(s)", stacklevel=2)
    return ReferenceFront(pts[mask], source="loaded-file", rejected=rejected)


def save_front(path, points: np.ndarray, header: str | None = None) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="\n") as fh:
        if header:
            for line in header.splitlines():
                fh.write(f"# {line}\n")
        for row in np.atleast_2d(points):
            fh.write(" ".join(repr(float(v)) for v in row) + "\n")

