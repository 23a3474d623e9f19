"""Three-way Medusa classification and per-component statistics.

nucleus = the k_max-shell; peer-connected = largest connected component of
the (k_max-1)-crust; isolated = the remaining crust nodes.  The nucleus is
the whole top shell even if disconnected (connectivity is reported, not
enforced).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from ._util import label_sort_key
from .graph import Graph, connected_components, node_mask
from .kshell import ShellAssignment


@dataclass(frozen=True)
class MedusaPartition:
    nucleus: np.ndarray
    peer_connected: np.ndarray
    isolated: np.ndarray
    k_max: int


@dataclass(frozen=True)
class IsolatedBreakdown:
    """Anatomy of the isolated component.

    leaves: singleton clusters of original degree 1; direct_multilink:
    singletons with >= 2 links (all into the nucleus); small_clusters:
    nodes living in isolated clusters of size >= 2; disconnected:
    degree-0 singletons (possible only when the input has isolates).
    """

    leaves: int
    direct_multilink: int
    small_clusters: int
    disconnected: int
    cluster_size_histogram: dict[int, int]
    max_cluster_size: int


@dataclass(frozen=True)
class NucleusStats:
    size: int
    internal_edge_density: float
    diameter: Optional[int]
    mean_internal_degree_fraction: float
    degree_min: int
    degree_max: int


def classify(g: Graph, sa: ShellAssignment) -> MedusaPartition:
    """Partition all nodes into nucleus / peer-connected / isolated."""
    if g.node_count == 0:
        raise ValueError("empty graph")
    nucleus = np.nonzero(sa.shell == sa.k_max)[0].astype(np.int32)
    crust = np.nonzero(sa.shell < sa.k_max)[0].astype(np.int32)
    if len(crust) == 0:
        empty = np.empty(0, dtype=np.int32)
        return MedusaPartition(nucleus, empty, empty, sa.k_max)
    parts = connected_components(g, crust)
    peer = parts.members(0)
    peer_mask = np.zeros(g.node_count, dtype=bool)
    peer_mask[peer] = True
    isolated = crust[~peer_mask[crust]]
    return MedusaPartition(nucleus, peer, isolated, sa.k_max)


def isolated_breakdown(g: Graph, mp: MedusaPartition) -> IsolatedBreakdown:
    """Classify isolated nodes by the clusters they form."""
    if len(mp.isolated) == 0:
        return IsolatedBreakdown(0, 0, 0, 0, {}, 0)
    parts = connected_components(g, mp.isolated)
    degrees = g.degrees()
    leaves = 0
    multilink = 0
    small = 0
    disconnected = 0
    histogram: dict[int, int] = {}
    for c in range(parts.count):
        size = int(parts.sizes[c])
        histogram[size] = histogram.get(size, 0) + 1
    for c in range(parts.count):
        size = int(parts.sizes[c])
        if size >= 2:
            small += size
            continue
        v = int(parts.members(c)[0])
        if degrees[v] == 1:
            leaves += 1
        elif degrees[v] >= 2:
            multilink += 1
        else:
            disconnected += 1
    return IsolatedBreakdown(
        leaves=leaves,
        direct_multilink=multilink,
        small_clusters=small,
        disconnected=disconnected,
        cluster_size_histogram=dict(sorted(histogram.items())),
        max_cluster_size=max(histogram),
    )


def nucleus_stats(g: Graph, mp: MedusaPartition) -> NucleusStats:
    """Statistics of the induced nucleus subgraph (computed exactly)."""
    nucleus = mp.nucleus
    size = len(nucleus)
    if size == 0:
        raise ValueError("empty nucleus")
    degrees = g.degrees()
    mask = node_mask(g, nucleus)
    internal_deg = np.array(
        [int(mask[g.neighbors(int(v))].sum()) for v in nucleus], dtype=np.int64
    )
    if size >= 2:
        density = internal_deg.sum() / (size * (size - 1))
        mean_fraction = float(np.mean(internal_deg / (size - 1)))
    else:
        density = 0.0
        mean_fraction = 0.0

    parts = connected_components(g, nucleus)
    diam: Optional[int] = None
    if parts.count == 1:
        diam = 0
        for v in nucleus:
            dist = kernels.bfs_distances(g.indptr, g.indices, int(v), mask)
            diam = max(diam, int(dist[nucleus].max()))

    return NucleusStats(
        size=size,
        internal_edge_density=float(density),
        diameter=diam,
        mean_internal_degree_fraction=mean_fraction,
        degree_min=int(degrees[nucleus].min()),
        degree_max=int(degrees[nucleus].max()),
    )


def medusa_report(g: Graph, mp: MedusaPartition) -> dict:
    """JSON-ready report of the full three-way decomposition."""
    stats = nucleus_stats(g, mp)
    breakdown = isolated_breakdown(g, mp)
    members = sorted((g.labels[int(v)] for v in mp.nucleus), key=label_sort_key)
    return {
        "k_max": mp.k_max,
        "nucleus": {
            "size": stats.size,
            "members": members,
            "density": stats.internal_edge_density,
            "diameter": stats.diameter,
            "degree_min": stats.degree_min,
            "degree_max": stats.degree_max,
        },
        "peer_connected": {"size": int(len(mp.peer_connected))},
        "isolated": {
            "size": int(len(mp.isolated)),
            "leaves": breakdown.leaves,
            "direct_multilink": breakdown.direct_multilink,
            "small_clusters": breakdown.small_clusters,
            "disconnected": breakdown.disconnected,
            "max_cluster_size": breakdown.max_cluster_size,
            "histogram": {str(k): v for k, v in breakdown.cluster_size_histogram.items()},
        },
    }
