"""Quality indicators: IGD and hypervolume, plus a Monte-Carlo hypervolume estimator."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

HV_REF_SCALE = 1.1


@dataclass(frozen=True)
class MetricReport:
    """Indicator values of one run."""

    problem: str
    algorithm: str
    seed: int
    igd: float
    hv: float
    evals: int
    wall_time: float = 0.0
    igd_resolution: int = 0
    hv_ref: tuple = field(default=())

    def to_dict(self) -> dict:
        d = asdict(self)
        d["hv_ref"] = list(self.hv_ref)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "MetricReport":
        d = dict(d)
        d["hv_ref"] = tuple(d.get("hv_ref", ()))
        return cls(**d)


def _as_points(P, name: str) -> np.ndarray:
    P = np.asarray(getattr(P, "points", P), dtype=float)
    if P.ndim == 1:
        P = P[None, :] if P.size else P.reshape(0, 0)
    if P.ndim != 2:
        raise ValueError(f"{name} must be a 2-D array of objective vectors")
    return P


def igd(obtained, reference, chunk: int = 2048) -> float:
    """Mean over reference points of the Euclidean distance to the nearest obtained point.

    Parameters
    ----------
    obtained : array (k, m)
    reference : array (r, m) or ReferenceFront
    """
    A = _as_points(obtained, "obtained")
    R = _as_points(reference, "reference")
    if A.shape[0] == 0:
        raise ValueError("IGD is undefined for an empty obtained set")
    if R.shape[0] == 0:
        raise ValueError("IGD needs a nonempty reference set")
    if A.shape[1] != R.shape[1]:
        raise ValueError("obtained and reference sets differ in objective count")
    d = np.empty(R.shape[0])
    for s in range(0, R.shape[0], chunk):
        diff = R[s:s + chunk, None, :] - A[None, :, :]
        d[s:s + chunk] = np.sqrt(np.min((diff * diff).sum(axis=2), axis=1))
    return math.fsum(d.tolist()) / R.shape[0]


def _hv2d(P: np.ndarray, ref: np.ndarray) -> float:
    if P.shape[0] == 0:
        return 0.0
    order = np.lexsort((P[:, 1], P[:, 0]))
    P = P[order]
    prev_best = np.concatenate([[np.inf], np.minimum.accumulate(P[:, 1])[:-1]])
    S = P[P[:, 1] < prev_best]
    widths = np.diff(np.append(S[:, 0], ref[0]))
    return float(np.sum(widths * (ref[1] - S[:, 1])))


def hypervolume(obtained, ref_point) -> float:
    """Exact dominated volume for two or three objectives (minimisation).

    Points that do not strictly dominate ``ref_point`` contribute nothing.
    Three objectives are handled by slicing along the last objective and
    summing two-dimensional staircase areas.
    """
    ref = np.asarray(ref_point, dtype=float)
    P = _as_points(obtained, "obtained")
    if P.shape[0] == 0:
        return 0.0
    if P.shape[1] != ref.shape[0]:
        raise ValueError("points and reference point differ in objective count")
    P = P[np.all(P < ref, axis=1)]
    m = ref.shape[0]
    if m == 2:
        return _hv2d(P, ref)
    if m != 3:
        raise ValueError("exact hypervolume is implemented for 2 and 3 objectives only")
    if P.shape[0] == 0:
        return 0.0
    P = P[np.argsort(P[:, 2], kind="stable")]
    z = np.append(P[:, 2], ref[2])
    total = 0.0
    for i in range(P.shape[0]):
        depth = z[i + 1] - z[i]
        if depth > 0:
            total += depth * _hv2d(P[: i + 1, :2], ref[:2])
    return total


def hv_monte_carlo_oracle(obtained, ref_point, samples: int = 1_000_000, rng=None,
                          return_stderr: bool = False):
    """Monte-Carlo estimate of the dominated volume inside [min(obtained), ref_point].

    With ``return_stderr`` the binomial standard error is returned as well.
    """
    rng = np.random.default_rng(rng)
    ref = np.asarray(ref_point, dtype=float)
    P = _as_points(obtained, "obtained")
    if P.shape[0] == 0:
        return (0.0, 0.0) if return_stderr else 0.0
    P = P[np.all(P < ref, axis=1)]
    if P.shape[0] == 0:
        return (0.0, 0.0) if return_stderr else 0.0
    lo = P.min(axis=0)
    box = float(np.prod(ref - lo))
    hits = 0
    batch = 100_000
    done = 0
    while done < samples:
        k = min(batch, samples - done)
        S = lo + rng.random((k, ref.shape[0])) * (ref - lo)
        dominated = np.zeros(k, dtype=bool)
        for p in P:
            dominated |= np.all(S >= p, axis=1)
        hits += int(dominated.sum())
        done += k
    frac = hits / samples
    est = box * frac
    if return_stderr:
        return est, box * math.sqrt(frac * (1.0 - frac) / samples)
    return est


def hv_reference_point(front) -> np.ndarray:
    """Nadir of an analytic front scaled by 1.1."""
    P = _as_points(front, "front")
    return HV_REF_SCALE * P.max(axis=0)
