"""Shared test utilities: independent oracles and graph builders.

The oracles here are deliberately literal (dict/set based, quadratic) and
never share code with the package's kernels.
"""
from __future__ import annotations

from collections import deque
from itertools import combinations

import numpy as np

from medusa.ensemble import match_stubs
from medusa.graph import Graph


# ---------------------------------------------------------------- oracles

def naive_shells(adj: dict) -> dict:
    """Literal recursive pruning: k = 1, 2, ... remove degree <= k until
    none remain; initially isolated nodes get shell 0."""
    alive = set(adj)
    shell = {}
    for v in list(alive):
        if not adj[v]:
            shell[v] = 0
            alive.discard(v)
    deg = {v: len(adj[v] & alive) for v in alive}
    k = 1
    while alive:
        while True:
            removable = [v for v in alive if deg[v] <= k]
            if not removable:
                break
            for v in removable:
                shell[v] = k
                alive.discard(v)
            for v in removable:
                for u in adj[v]:
                    if u in alive:
                        deg[u] -= 1
        k += 1
    return shell


def oracle_bfs(adj: dict, source) -> dict:
    dist = {source: 0}
    q = deque([source])
    while q:
        v = q.popleft()
        for u in adj[v]:
            if u not in dist:
                dist[u] = dist[v] + 1
                q.append(u)
    return dist


def oracle_mean_distance(adj: dict) -> float:
    """Exact all-pairs mean hop distance on a connected adjacency dict."""
    total = 0
    pairs = 0
    for s in adj:
        dist = oracle_bfs(adj, s)
        total += sum(dist.values())
        pairs += len(dist) - 1
    return total / pairs


def min_ball_cover(adj: dict, radius: int) -> int:
    """Exhaustive minimum number of radius-balls covering all nodes."""
    nodes = sorted(adj)
    balls = {}
    for s in nodes:
        seen = {s}
        frontier = [s]
        for _ in range(radius):
            frontier = [u for v in frontier for u in adj[v] if u not in seen]
            seen.update(frontier)
        balls[s] = frozenset(seen)
    full = frozenset(nodes)
    for r in range(1, len(nodes) + 1):
        for centers in combinations(nodes, r):
            covered = set()
            for c in centers:
                covered |= balls[c]
            if covered == full:
                return r
    return len(nodes)


# ----------------------------------------------------------- adjacency glue

def adj_of(g: Graph) -> dict:
    """Label-keyed adjacency dict of a Graph, for feeding the oracles."""
    out = {lab: set() for lab in g.labels}
    for v in range(g.node_count):
        for u in g.neighbors(v):
            out[g.labels[v]].add(g.labels[int(u)])
    return out


def subgraph_adj(g: Graph, nodes) -> dict:
    """Internal-index adjacency of an induced subgraph."""
    keep = set(int(v) for v in np.asarray(nodes).ravel())
    out = {v: set() for v in keep}
    for v in keep:
        for u in g.neighbors(v):
            if int(u) in keep:
                out[v].add(int(u))
    return out


def check_simple_symmetric(g: Graph) -> None:
    degs = g.degrees()
    assert degs.sum() == 2 * g.edge_count
    for v in range(g.node_count):
        nb = g.neighbors(v).tolist()
        assert nb == sorted(nb)
        assert len(nb) == len(set(nb)), f"duplicate neighbor at {v}"
        assert v not in nb, f"self-loop at {v}"
        for u in nb:
            assert v in g.neighbors(u).tolist(), f"asymmetric edge {v}-{u}"


# ------------------------------------------------------------- generators

def er_graph(n: int, p: float, seed: int) -> Graph:
    rng = np.random.default_rng(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(edges, isolated=range(n))


def random_tree(n: int, seed: int) -> Graph:
    rng = np.random.default_rng(seed)
    edges = [(int(rng.integers(0, v)), v) for v in range(1, n)]
    return Graph.from_edges(edges, isolated=range(n))


def small_config_graph(n: int, seed: int) -> Graph:
    rng = np.random.default_rng(seed)
    deg = rng.integers(1, max(2, n // 3), size=n)
    if deg.sum() % 2:
        deg[0] += 1
    pairs, _ = match_stubs(deg.astype(np.int64), rng)
    return Graph.from_pairs(n, pairs, labels=range(n))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges([(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges([(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges([("hub", f"leaf{i}") for i in range(leaves)])


def path_graph(labels) -> Graph:
    labels = list(labels)
    return Graph.from_edges(list(zip(labels, labels[1:])))


def internet_like_graph(n: int, gamma: float = 1.9, max_deg: int = 2500, seed: int = 7) -> Graph:
    """Configuration-model analog of a mid-2000s AS-level snapshot: heavy
    leaf population (truncated power law from degree 1) and mean degree ~6.
    """
    rng = np.random.default_rng(seed)
    ks = np.arange(1, min(max_deg, n - 1) + 1, dtype=np.float64)
    pmf = ks ** (-gamma)
    cdf = np.cumsum(pmf)
    cdf /= cdf[-1]
    deg = 1 + np.searchsorted(cdf, rng.random(n), side="right")
    if deg.sum() % 2:
        deg[rng.integers(0, n)] += 1
    pairs, _ = match_stubs(deg.astype(np.int64), rng)
    return Graph.from_pairs(n, pairs, labels=range(n))


def medusa_example_graph(with_multilink=False, with_pair=False) -> Graph:
    """K5 nucleus + a-b-c chain (a double-linked into the nucleus) + leaf d.

    Optionally adds e (two links into the nucleus) and the f-g cluster
    (f single-linked into the nucleus).
    """
    edges = [(f"v{i}", f"v{j}") for i in range(5) for j in range(i + 1, 5)]
    edges += [("a", "v0"), ("a", "v1"), ("a", "b"), ("b", "c"), ("d", "v2")]
    if with_multilink:
        edges += [("e", "v3"), ("e", "v4")]
    if with_pair:
        edges += [("f", "v0"), ("f", "g")]
    return Graph.from_edges(edges)
