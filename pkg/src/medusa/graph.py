"""Graph representation, edge-list ingestion, and traversal primitives.

Graphs are simple, undirected, and immutable after construction; every
"pruning" view elsewhere in the package is an induced subgraph expressed
as a node subset, never a mutation.  Node subsets are numpy arrays of
internal indices (0..N-1); external labels appear only at I/O boundaries.
"""
from __future__ import annotations

import io
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterable, Sequence

import numpy as np

from . import kernels

UNREACHABLE = -1  # sentinel hop distance, never a large number


class ParseError(ValueError):
    """Malformed edge-list input; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class IngestReport:
    dropped_self_loops: int
    merged_duplicates: int
    lines_read: int


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph in CSR form.

    ``indptr``/``indices`` hold sorted per-node neighbor lists over internal
    indices; ``labels`` maps internal index -> external ID (assigned in
    first-appearance order at ingestion).
    """

    indptr: np.ndarray
    indices: np.ndarray
    labels: tuple

    def __post_init__(self):
        self.indptr.flags.writeable = False
        self.indices.flags.writeable = False
        object.__setattr__(self, "_index_of", {lab: i for i, lab in enumerate(self.labels)})

    @property
    def node_count(self) -> int:
        return len(self.indptr) - 1

    @property
    def edge_count(self) -> int:
        return len(self.indices) // 2

    def degrees(self) -> np.ndarray:
        return (self.indptr[1:] - self.indptr[:-1]).astype(np.int64)

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def index_of(self, label: Any) -> int:
        return self._index_of[label]

    def label_of(self, v: int) -> Any:
        return self.labels[v]

    def all_nodes(self) -> np.ndarray:
        return np.arange(self.node_count, dtype=np.int32)

    def labeled_edges(self) -> set:
        """Edges as frozensets of external labels (order-free)."""
        out = set()
        for v in range(self.node_count):
            for u in self.neighbors(v):
                if u > v:
                    out.add(frozenset((self.labels[v], self.labels[int(u)])))
        return out

    def __eq__(self, other) -> bool:
        """Same labeled graph; internal index assignment is not identity.

        (Note: isolated nodes are not representable in the edge-list
        format, so round-tripping drops them.)
        """
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.node_count == other.node_count
            and self.edge_count == other.edge_count
            and set(self.labels) == set(other.labels)
            and self.labeled_edges() == other.labeled_edges()
        )

    def __repr__(self) -> str:
        return f"Graph(N={self.node_count}, E={self.edge_count})"

    @classmethod
    def from_pairs(cls, n: int, pairs: np.ndarray, labels: Sequence[Any]) -> "Graph":
        """Build from an array of unique internal-index edges (u < v)."""
        if len(pairs):
            u = pairs[:, 0].astype(np.int64)
            v = pairs[:, 1].astype(np.int64)
            heads = np.concatenate([u, v])
            tails = np.concatenate([v, u])
        else:
            heads = tails = np.empty(0, dtype=np.int64)
        order = np.lexsort((tails, heads))
        heads = heads[order]
        tails = tails[order]
        indptr = np.zeros(n + 1, dtype=np.int32)
        np.cumsum(np.bincount(heads, minlength=n), out=indptr[1:])
        return cls(indptr=indptr, indices=tails.astype(np.int32), labels=tuple(labels))

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[Any, Any]], isolated: Iterable[Any] = ()) -> "Graph":
        """Build from labeled edges, merging duplicates and dropping loops.

        Convenience constructor for tests and generators; ``isolated`` adds
        degree-0 nodes that appear in no edge.
        """
        index: dict[Any, int] = {}
        labels: list[Any] = []

        def intern(lab):
            i = index.get(lab)
            if i is None:
                i = len(labels)
                index[lab] = i
                labels.append(lab)
            return i

        pair_set = set()
        for a, b in edges:
            ia, ib = intern(a), intern(b)
            if ia == ib:
                continue
            pair_set.add((min(ia, ib), max(ia, ib)))
        for lab in isolated:
            intern(lab)
        pairs = np.array(sorted(pair_set), dtype=np.int64).reshape(-1, 2)
        return cls.from_pairs(len(labels), pairs, labels)

    def canonical_edge_lines(self) -> list[str]:
        """Edges as "min max" label pairs ordered by internal indices."""
        lines = []
        for v in range(self.node_count):
            for u in self.neighbors(v):
                if u > v:
                    lines.append(f"{self.labels[v]} {self.labels[int(u)]}")
        return lines

    def write_edge_list(self, path: Path | str) -> None:
        Path(path).write_text("\n".join(self.canonical_edge_lines()) + "\n", encoding="utf-8")


def load_edge_list(
    source,
    *,
    allow_comments: bool = True,
    dedupe: bool = True,
) -> tuple[Graph, IngestReport]:
    """Parse a whitespace-separated edge list into a normalized Graph.

    One edge per line, two tokens; '#' lines are comments when
    ``allow_comments``.  Self-loops are dropped and counted.  Duplicate
    edges (either orientation) are merged and counted; with ``dedupe``
    off they are an error instead.

    Raises ParseError for malformed lines and ValueError("no edges") for
    input without any edge.
    """
    if isinstance(source, (str, Path)):
        text = Path(source).read_text(encoding="utf-8")
    else:
        raw = source.read()
        text = raw.decode("utf-8") if isinstance(raw, bytes) else raw

    index: dict[str, int] = {}
    labels: list[str] = []
    pair_set: set[tuple[int, int]] = set()
    dropped_self_loops = 0
    merged_duplicates = 0
    lines_read = 0

    for line_no, line in enumerate(text.splitlines(), start=1):
        lines_read += 1
        stripped = line.strip()
        if not stripped:
            continue
        if allow_comments and stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise ParseError(line_no, f"expected 2 tokens, got {len(tokens)}")
        a, b = tokens
        ia = index.get(a)
        if ia is None:
            ia = index[a] = len(labels)
            labels.append(a)
        ib = index.get(b)
        if ib is None:
            ib = index[b] = len(labels)
            labels.append(b)
        if ia == ib:
            dropped_self_loops += 1
            continue
        pair = (ia, ib) if ia < ib else (ib, ia)
        if pair in pair_set:
            if not dedupe:
                raise ParseError(line_no, f"duplicate edge {a} {b} (dedupe disabled)")
            merged_duplicates += 1
        else:
            pair_set.add(pair)

    if not pair_set:
        raise ValueError("no edges")

    pairs = np.array(sorted(pair_set), dtype=np.int64)
    graph = Graph.from_pairs(len(labels), pairs, labels)
    report = IngestReport(
        dropped_self_loops=dropped_self_loops,
        merged_duplicates=merged_duplicates,
        lines_read=lines_read,
    )
    return graph, report


def loads_edge_list(text: str, **kwargs) -> tuple[Graph, IngestReport]:
    return load_edge_list(io.StringIO(text), **kwargs)


def as_node_array(nodes) -> np.ndarray:
    arr = np.asarray(nodes, dtype=np.int64)
    return np.unique(arr).astype(np.int32)


def node_mask(g: Graph, nodes) -> np.ndarray:
    mask = np.zeros(g.node_count, dtype=np.uint8)
    mask[as_node_array(nodes)] = 1
    return mask


@dataclass(frozen=True)
class ComponentPartition:
    """Connected components of a graph or induced subgraph.

    ``component_id`` is dense 0..count-1 ordered by descending size, ties
    broken toward the component containing the smallest internal index;
    -1 marks nodes outside the analyzed subset.
    """

    component_id: np.ndarray
    sizes: np.ndarray

    @property
    def count(self) -> int:
        return len(self.sizes)

    def members(self, comp: int) -> np.ndarray:
        return np.nonzero(self.component_id == comp)[0].astype(np.int32)

    def largest_size(self) -> int:
        return int(self.sizes[0]) if self.count else 0

    def second_largest_size(self) -> int:
        return int(self.sizes[1]) if self.count > 1 else 0


def connected_components(g: Graph, node_filter=None) -> ComponentPartition:
    """Components of ``g`` or of the subgraph induced by ``node_filter``."""
    mask = None if node_filter is None else node_mask(g, node_filter)
    labels, count = kernels.component_labels(g.indptr, g.indices, mask)
    if count == 0:
        return ComponentPartition(component_id=labels, sizes=np.empty(0, dtype=np.int64))
    sizes = np.bincount(labels[labels >= 0], minlength=count).astype(np.int64)
    # discovery order already follows smallest-contained-index; stable sort
    # by descending size keeps that order within ties
    order = np.argsort(-sizes, kind="stable")
    rank = np.empty(count, dtype=np.int32)
    rank[order] = np.arange(count, dtype=np.int32)
    remapped = labels.copy()
    inside = labels >= 0
    remapped[inside] = rank[labels[inside]]
    return ComponentPartition(component_id=remapped, sizes=sizes[order])


def bfs_distances(g: Graph, source: int, node_filter=None) -> np.ndarray:
    """Exact hop distances from ``source`` within the induced subgraph.

    Unreachable nodes (and nodes outside the filter) carry UNREACHABLE.
    """
    if not 0 <= source < g.node_count:
        raise ValueError(f"source {source} outside graph")
    mask = None
    if node_filter is not None:
        mask = node_mask(g, node_filter)
        if not mask[source]:
            raise ValueError(f"source {source} outside node filter")
    return kernels.bfs_distances(g.indptr, g.indices, int(source), mask)


@dataclass(frozen=True)
class DistanceConfig:
    """Controls exact-vs-sampled mean-distance computation."""

    exact_threshold: int = 1000
    sample_sources: int = 200
    seed: int = 0


@dataclass(frozen=True)
class MeanDistance:
    mean_distance: float
    exact: bool


def _mean_distance_connected(
    g: Graph,
    nodes: np.ndarray,
    config: DistanceConfig,
    seed: int,
) -> MeanDistance:
    """Mean hop distance over a node set already known to be connected."""
    m = len(nodes)
    mask = node_mask(g, nodes)
    exact = m <= config.exact_threshold
    if exact:
        sources = nodes
    else:
        rng = np.random.default_rng(seed)
        sources = rng.choice(nodes, size=min(config.sample_sources, m), replace=False)
    total = 0
    pair_count = 0
    for s in sources:
        dist = kernels.bfs_distances(g.indptr, g.indices, int(s), mask)
        d = dist[nodes]
        total += int(d.sum())  # all >= 0 on a connected set
        pair_count += m - 1
    return MeanDistance(mean_distance=total / pair_count, exact=exact)


def average_distance(g: Graph, node_set, config: DistanceConfig = DistanceConfig()) -> MeanDistance:
    """Mean pairwise hop distance within a connected node set.

    Exact all-pairs when the set is small (<= exact_threshold), otherwise
    the mean over BFS trees from ``sample_sources`` seeded sources drawn
    without replacement.
    """
    nodes = as_node_array(node_set)
    if len(nodes) < 2:
        raise ValueError("set too small for distances")
    parts = connected_components(g, nodes)
    if parts.count != 1:
        raise ValueError("set not connected")
    return _mean_distance_connected(g, nodes, config, config.seed)


def diameter(g: Graph, node_set) -> int:
    """Exact maximum eccentricity within a connected node set."""
    nodes = as_node_array(node_set)
    if len(nodes) == 0:
        raise ValueError("empty set")
    parts = connected_components(g, nodes)
    if parts.count != 1:
        raise ValueError("set not connected")
    mask = node_mask(g, nodes)
    best = 0
    for s in nodes:
        dist = kernels.bfs_distances(g.indptr, g.indices, int(s), mask)
        best = max(best, int(dist[nodes].max()))
    return best
