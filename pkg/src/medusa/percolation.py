"""Crust percolation profile and transition detection.

For each crust level k the profile records the crust size, the two largest
connected-component sizes of the induced crust, and the mean distance
inside the largest component.  The percolation transition is read off the
profile as the peak of the second-largest-component curve; the distance
peak is a cross-check (it is sampled, hence noisier).
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from ._util import derive_seed, rows_as_json, write_csv, write_json
from .graph import ComponentPartition, DistanceConfig, Graph, _mean_distance_connected, connected_components
from .kshell import ShellAssignment

PROFILE_HEADER = ["k", "crust_size", "largest", "second_largest", "mean_distance", "exact"]


@dataclass(frozen=True)
class CrustRow:
    k: int
    crust_size: int
    largest_component: int
    second_largest: int
    mean_distance_largest: Optional[float]
    exact_distance: bool


@dataclass(frozen=True)
class CrustProfile:
    rows: tuple[CrustRow, ...]

    @property
    def k_max(self) -> int:
        return self.rows[-1].k

    def row(self, k: int) -> CrustRow:
        return self.rows[k]

    def as_table(self) -> list[tuple]:
        return [
            (r.k, r.crust_size, r.largest_component, r.second_largest,
             r.mean_distance_largest, r.exact_distance)
            for r in self.rows
        ]


@dataclass(frozen=True)
class TransitionReport:
    """Peak locations of the two transition signatures; None = undefined."""

    k_star_second: Optional[int]
    k_star_distance: Optional[int]
    coincide: bool

    def as_dict(self) -> dict:
        return {
            "k_star_second": self.k_star_second,
            "k_star_distance": self.k_star_distance,
            "coincide": self.coincide,
        }


def _crust_row(
    g: Graph,
    sa: ShellAssignment,
    k: int,
    config: DistanceConfig,
    with_distances: bool,
) -> CrustRow:
    crust_mask = sa.shell <= k
    crust_size = int(crust_mask.sum())
    if crust_size == 0:
        return CrustRow(k, 0, 0, 0, None, True)
    nodes = np.nonzero(crust_mask)[0].astype(np.int32)
    parts: ComponentPartition = connected_components(g, nodes)
    largest = parts.largest_size()
    second = parts.second_largest_size()
    mean_dist = None
    exact = True
    if with_distances and largest >= 2:
        comp_nodes = parts.members(0)
        md = _mean_distance_connected(g, comp_nodes, config, derive_seed(config.seed, "crust", k))
        mean_dist = md.mean_distance
        exact = md.exact
    return CrustRow(k, crust_size, largest, second, mean_dist, exact)


def crust_profile(
    g: Graph,
    sa: ShellAssignment,
    config: DistanceConfig = DistanceConfig(),
    *,
    with_distances: bool = True,
    max_workers: int = 1,
) -> CrustProfile:
    """Profile every crust level 0..k_max.

    Levels are independent read-only jobs over the shared graph; with
    ``max_workers`` > 1 they run on a thread pool.  Output is deterministic
    regardless of parallelism (per-level seeds are derived from the config
    seed and k).
    """
    ks = list(range(sa.k_max + 1))
    if max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            rows = list(pool.map(
                lambda k: _crust_row(g, sa, k, config, with_distances), ks))
    else:
        rows = [_crust_row(g, sa, k, config, with_distances) for k in ks]
    return CrustProfile(rows=tuple(rows))


def detect_transition(profile: CrustProfile) -> TransitionReport:
    """Locate the percolation transition in a crust profile.

    Argmax of the second-largest-component curve (primary signature) and of
    the mean-distance curve (cross-check) over crusts strictly below the
    nucleus; ties go to the smaller k.  A flat-zero second-largest curve
    yields an undefined (None) peak, not an error.
    """
    if not profile.rows:
        raise ValueError("empty profile")
    interior = profile.rows[:-1]  # exclude the k_max row (full graph)

    k_star_second = None
    best = 0
    for r in interior:
        if r.second_largest > best:
            best = r.second_largest
            k_star_second = r.k

    k_star_distance = None
    best_d = 0.0
    for r in interior:
        if r.mean_distance_largest is not None and r.mean_distance_largest > best_d:
            best_d = r.mean_distance_largest
            k_star_distance = r.k

    coincide = k_star_second is not None and k_star_second == k_star_distance
    return TransitionReport(k_star_second, k_star_distance, coincide)


def write_profile_csv(path: Path, profile: CrustProfile) -> None:
    write_csv(path, PROFILE_HEADER, profile.as_table())


def write_profile_json(path: Path, profile: CrustProfile) -> None:
    write_json(path, rows_as_json(PROFILE_HEADER, profile.as_table()))
