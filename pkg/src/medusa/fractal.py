"""Box-covering fractal analysis, renormalization, and power-law fitting.

Covers crust components with greedy seed-grown boxes, fits N_B(l_B) on
log-log axes to extract the box dimension, classifies power-law vs
exponential decay, builds the finite-cluster size distribution of a crust,
and measures each shell's contribution to the peer-connected component.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import kernels
from ._util import derive_seed
from .graph import Graph, as_node_array, connected_components, node_mask
from .kshell import ShellAssignment, k_crust
from .partition import MedusaPartition

REGIME_POWER_LAW = "power_law"
REGIME_EXPONENTIAL = "exponential"
REGIME_CROSSOVER = "crossover"

# an r-squared gap below this means neither pure model dominates
_REGIME_R2_MARGIN = 0.05


@dataclass(frozen=True)
class Binning:
    mode: str  # "linear" (use points as-is) or "logarithmic"
    bins: Optional[int] = None

    def as_dict(self) -> dict:
        return {"mode": self.mode, "bins": self.bins}


LINEAR = Binning("linear")


@dataclass(frozen=True)
class PowerLawFit:
    """Least-squares line on log-log axes.

    ``exponent`` is the negated slope, so decay exponents come out
    positive; model y = prefactor * x ** (-exponent).
    """

    exponent: float
    prefactor: float
    fit_range: tuple[float, float]
    r_squared: float
    n_points: int
    binning: Binning

    @property
    def slope(self) -> float:
        return -self.exponent

    def as_dict(self) -> dict:
        return {
            "exponent": self.exponent,
            "slope": self.slope,
            "prefactor": self.prefactor,
            "fit_range": list(self.fit_range),
            "r_squared": self.r_squared,
            "n_points": self.n_points,
            "binning": self.binning.as_dict(),
        }


def _ols(x: np.ndarray, y: np.ndarray) -> tuple[float, float, float]:
    """Slope, intercept, r-squared; constant y counts as a perfect fit."""
    xm = x.mean()
    ym = y.mean()
    sxx = float(((x - xm) ** 2).sum())
    if sxx == 0.0:
        raise ValueError("degenerate x values (all equal)")
    sxy = float(((x - xm) * (y - ym)).sum())
    slope = sxy / sxx
    intercept = ym - slope * xm
    ss_tot = float(((y - ym) ** 2).sum())
    ss_res = float(((y - (slope * x + intercept)) ** 2).sum())
    if ss_tot == 0.0:
        r2 = 1.0 if ss_res == 0.0 else 0.0
    else:
        r2 = 1.0 - ss_res / ss_tot
    return slope, intercept, max(0.0, min(1.0, r2))


def _log_bin(x: np.ndarray, y: np.ndarray, bins: int) -> tuple[np.ndarray, np.ndarray]:
    """Aggregate (x, y) mass into geometric bins; returns (centers, densities).

    y is treated as mass sitting at x; each bin reports total mass divided
    by bin width, at the mass-weighted mean x of the bin (the geometric mid
    overestimates x for narrow bins and tilts steep fits).  For
    integer-valued x the edges snap to integers so widths count integer
    slots exactly.
    """
    lo, hi = float(x.min()), float(x.max())
    edges = np.geomspace(lo, hi, bins + 1)
    if np.all(x == np.round(x)):
        edges = np.unique(np.r_[np.floor(edges[:-1]), np.floor(hi) + 1.0])
        if len(edges) < 4:  # snapping collapsed the grid; bin per value
            edges = np.unique(np.r_[x, np.floor(hi) + 1.0])
    else:
        edges[-1] = np.nextafter(hi, np.inf)
    centers = []
    densities = []
    for i in range(len(edges) - 1):
        sel = (x >= edges[i]) & (x < edges[i + 1])
        if not sel.any():
            continue
        width = edges[i + 1] - edges[i]
        mass = float(y[sel].sum())
        centers.append(float((x[sel] * y[sel]).sum()) / mass)
        densities.append(mass / width)
    return np.asarray(centers), np.asarray(densities)


def fit_power_law(points: Sequence[tuple[float, float]], binning: Binning = LINEAR) -> PowerLawFit:
    """OLS on (log x, log y), optionally after logarithmic binning.

    All coordinates must be strictly positive and at least 3 points (or 3
    non-empty bins) must remain.
    """
    if len(points) < 3:
        raise ValueError("need at least 3 points")
    arr = np.asarray(points, dtype=np.float64)
    x, y = arr[:, 0], arr[:, 1]
    if (x <= 0).any() or (y <= 0).any():
        raise ValueError("power-law fit requires strictly positive values")
    x_range = (float(x.min()), float(x.max()))
    if binning.mode == "logarithmic":
        if not binning.bins or binning.bins < 1:
            raise ValueError("logarithmic binning requires a bin count")
        x, y = _log_bin(x, y, binning.bins)
        if len(x) < 3:
            raise ValueError("fewer than 3 non-empty bins")
    elif binning.mode != "linear":
        raise ValueError(f"unknown binning mode {binning.mode!r}")
    slope, intercept, r2 = _ols(np.log(x), np.log(y))
    return PowerLawFit(
        exponent=-slope,
        prefactor=math.exp(intercept),
        fit_range=x_range,
        r_squared=r2,
        n_points=len(x),
        binning=binning,
    )


@dataclass(frozen=True)
class BoxCovering:
    box_size: int
    boxes: tuple[np.ndarray, ...]
    seeds: np.ndarray

    @property
    def box_count(self) -> int:
        return len(self.boxes)


def box_cover(g: Graph, node_set, l_B: int, seed: int = 0) -> BoxCovering:
    """Greedy box cover of a node set.

    Seeds are drawn in seeded-random order from the still-uncovered nodes;
    each box collects every uncovered node within induced-subgraph distance
    < l_B of its seed (so l_B=1 yields singletons).  Greedy is within 2x of
    the true minimum at small sizes and the box dimension is robust to the
    remaining suboptimality.
    """
    if l_B < 1:
        raise ValueError("l_B must be >= 1")
    nodes = as_node_array(node_set)
    if len(nodes) == 0:
        raise ValueError("empty node set")
    mask = node_mask(g, nodes)
    rng = np.random.default_rng(seed)
    order = rng.permutation(nodes).astype(np.int32)
    box_id, seeds = kernels.box_cover_assign(g.indptr, g.indices, mask, order, l_B - 1)
    count = len(seeds)
    boxes = tuple(
        np.nonzero(box_id == b)[0].astype(np.int32) for b in range(count)
    )
    return BoxCovering(box_size=l_B, boxes=boxes, seeds=seeds)


def box_count(g: Graph, node_set, l_B: int, seed: int = 0) -> int:
    """Number of boxes only (skips materializing the box membership)."""
    nodes = as_node_array(node_set)
    mask = node_mask(g, nodes)
    rng = np.random.default_rng(seed)
    order = rng.permutation(nodes).astype(np.int32)
    _, seeds = kernels.box_cover_assign(g.indptr, g.indices, mask, order, l_B - 1)
    return len(seeds)


@dataclass(frozen=True)
class FractalResult:
    nb_curve: dict[int, float]  # l_B -> mean box count over trials
    nb_std: dict[int, float]
    trials: int
    fit: PowerLawFit
    regime: str

    @property
    def box_dimension(self) -> float:
        return self.fit.exponent


def fit_box_curve(nb_curve: dict[int, float]) -> tuple[PowerLawFit, str]:
    """Fit and classify an N_B(l_B) curve (also the synthetic test hook).

    Power-law and exponential models are compared by r-squared of the
    log-log vs semi-log lines; neither dominating (gap < 0.05) reports a
    crossover.
    """
    ls = np.array(sorted(nb_curve), dtype=np.float64)
    nb = np.array([nb_curve[int(l)] for l in ls], dtype=np.float64)
    fit = fit_power_law(list(zip(ls, nb)), LINEAR)
    _, _, r2_exp = _ols(ls, np.log(nb))
    if fit.r_squared - r2_exp > _REGIME_R2_MARGIN:
        regime = REGIME_POWER_LAW
    elif r2_exp - fit.r_squared > _REGIME_R2_MARGIN:
        regime = REGIME_EXPONENTIAL
    else:
        regime = REGIME_CROSSOVER
    return fit, regime


def fractal_dimension(
    g: Graph,
    node_set,
    l_range: Sequence[int],
    trials: int = 10,
    seed: int = 0,
) -> FractalResult:
    """Box dimension of a node set from trial-averaged greedy coverings."""
    nodes = as_node_array(node_set)
    if len(nodes) < 10:
        raise ValueError("insufficient for fit: need at least 10 nodes")
    ls = sorted(set(int(l) for l in l_range))
    if len(ls) < 3:
        raise ValueError("need at least 3 distinct box sizes")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    nb_curve: dict[int, float] = {}
    nb_std: dict[int, float] = {}
    for l in ls:
        counts = [
            box_count(g, nodes, l, derive_seed(seed, "box", l, t))
            for t in range(trials)
        ]
        nb_curve[l] = float(np.mean(counts))
        nb_std[l] = float(np.std(counts))
    fit, regime = fit_box_curve(nb_curve)
    return FractalResult(nb_curve=nb_curve, nb_std=nb_std, trials=trials, fit=fit, regime=regime)


def renormalize(g: Graph, node_set, l_B: int, seed: int = 0) -> Graph:
    """Collapse each box to a supernode; edges join boxes any original
    edge crosses.  Supernode labels are the box indices."""
    cover = box_cover(g, node_set, l_B, seed)
    nodes = as_node_array(node_set)
    box_of = np.full(g.node_count, -1, dtype=np.int64)
    for b, members in enumerate(cover.boxes):
        box_of[members] = b
    count = cover.box_count
    pair_codes = set()
    for v in nodes:
        bv = box_of[v]
        for u in g.neighbors(int(v)):
            bu = box_of[u]
            if bu >= 0 and bu != bv and u > v:
                lo, hi = (bu, bv) if bu < bv else (bv, bu)
                pair_codes.add(int(lo) * count + int(hi))
    pairs = np.array(
        sorted((code // count, code % count) for code in pair_codes), dtype=np.int64
    ).reshape(-1, 2)
    return Graph.from_pairs(count, pairs, labels=range(count))


def cluster_size_distribution(
    g: Graph,
    sa: ShellAssignment,
    k: int,
    bins_per_decade: int = 5,
) -> tuple[dict[int, int], Optional[PowerLawFit]]:
    """Finite-cluster size histogram of the k-crust, with a tau fit.

    The single largest component is excluded (the percolation "infinite"
    cluster); probabilities are log-binned before fitting.  The fit is
    omitted when fewer than 3 distinct sizes survive.
    """
    crust = k_crust(sa, k)
    if len(crust) == 0:
        raise ValueError("empty crust")
    parts = connected_components(g, crust)
    if parts.count < 2:
        raise ValueError("crust has fewer than 2 components")
    finite_sizes = parts.sizes[1:]  # drop exactly the largest
    histogram: dict[int, int] = {}
    for s in finite_sizes:
        histogram[int(s)] = histogram.get(int(s), 0) + 1
    histogram = dict(sorted(histogram.items()))

    fit = None
    if len(histogram) >= 3:
        total = float(len(finite_sizes))
        points = [(float(s), c / total) for s, c in histogram.items()]
        smin, smax = points[0][0], points[-1][0]
        bins = max(4, math.ceil(bins_per_decade * math.log10(smax / smin)))
        try:
            fit = fit_power_law(points, Binning("logarithmic", bins))
        except ValueError:
            fit = None
    return histogram, fit


def shell_contribution(
    mp: MedusaPartition,
    sa: ShellAssignment,
) -> tuple[dict[int, int], Optional[PowerLawFit]]:
    """Peer-connected membership count per shell, with a decay-range fit.

    The power law is fitted from the peak shell onward (the decaying side);
    fewer than 3 populated shells there omits the fit.
    """
    if len(mp.peer_connected) == 0:
        raise ValueError("peer-connected component is empty")
    counts: dict[int, int] = {}
    for s in sa.shell[mp.peer_connected]:
        counts[int(s)] = counts.get(int(s), 0) + 1
    counts = dict(sorted(counts.items()))

    fit = None
    positive = [(k, c) for k, c in counts.items() if c > 0 and k > 0]
    if positive:
        peak_idx = max(range(len(positive)), key=lambda i: (positive[i][1], -i))
        decaying = positive[peak_idx:]
        if len(decaying) >= 3:
            try:
                fit = fit_power_law([(float(k), float(c)) for k, c in decaying], LINEAR)
            except ValueError:
                fit = None
    return counts, fit
