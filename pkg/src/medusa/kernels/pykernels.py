"""Pure-Python graph kernels (fallback backend).

Same contracts as the compiled backend in ``_ckernels.pyx``; both operate on
CSR adjacency (``indptr``/``indices`` int32 arrays, neighbor lists sorted)
and produce bit-identical outputs.  All randomness lives in the callers:
kernels receive explicit source nodes / visit orders.
"""
from __future__ import annotations

from collections import deque

import numpy as np

BACKEND = "pure-python"


def core_numbers(indptr: np.ndarray, indices: np.ndarray) -> np.ndarray:
    """Shell index per node by bucket-queue pruning (linear time).

    Nodes are peeled in order of current degree; when a node is peeled its
    remaining degree is its shell index.  Initially isolated nodes get 0.
    """
    n = len(indptr) - 1
    shell = np.zeros(n, dtype=np.int32)
    if n == 0:
        return shell
    deg = (indptr[1:] - indptr[:-1]).astype(np.int64)
    max_deg = int(deg.max())

    # counting sort of nodes by degree; starts[d] = #nodes of degree < d
    bin_count = np.bincount(deg, minlength=max_deg + 1)
    starts = np.zeros(max_deg + 1, dtype=np.int64)
    np.cumsum(bin_count[:-1], out=starts[1:])
    bin_ptr = starts.copy()  # first unprocessed slot per degree bucket

    pos = np.empty(n, dtype=np.int64)
    vert = np.empty(n, dtype=np.int64)
    fill = starts.copy()
    for v in range(n):
        d = deg[v]
        pos[v] = fill[d]
        vert[fill[d]] = v
        fill[d] += 1

    indptr_l = indptr.tolist()
    indices_l = indices.tolist()
    deg_l = deg.tolist()
    pos_l = pos.tolist()
    vert_l = vert.tolist()
    ptr_l = bin_ptr.tolist()
    shell_l = [0] * n

    for i in range(n):
        v = vert_l[i]
        dv = deg_l[v]
        shell_l[v] = dv
        for j in range(indptr_l[v], indptr_l[v + 1]):
            u = indices_l[j]
            du = deg_l[u]
            if du > dv:
                # swap u to the front of its bucket, then shrink the bucket
                pu = pos_l[u]
                pw = ptr_l[du]
                w = vert_l[pw]
                if u != w:
                    vert_l[pu] = w
                    vert_l[pw] = u
                    pos_l[w] = pu
                    pos_l[u] = pw
                ptr_l[du] = pw + 1
                deg_l[u] = du - 1

    shell[:] = shell_l
    return shell


def bfs_distances(
    indptr: np.ndarray,
    indices: np.ndarray,
    source: int,
    mask: np.ndarray | None = None,
) -> np.ndarray:
    """Hop distances from ``source``; -1 marks unreachable / outside mask.

    With a mask (uint8), traversal is restricted to the induced subgraph.
    """
    n = len(indptr) - 1
    dist = np.full(n, -1, dtype=np.int32)
    dist[source] = 0
    q = deque([source])
    indptr_l = indptr
    indices_l = indices
    if mask is None:
        while q:
            v = q.popleft()
            dv = dist[v] + 1
            for u in indices_l[indptr_l[v]:indptr_l[v + 1]]:
                if dist[u] < 0:
                    dist[u] = dv
                    q.append(u)
    else:
        while q:
            v = q.popleft()
            dv = dist[v] + 1
            for u in indices_l[indptr_l[v]:indptr_l[v + 1]]:
                if dist[u] < 0 and mask[u]:
                    dist[u] = dv
                    q.append(u)
    return dist


def component_labels(
    indptr: np.ndarray,
    indices: np.ndarray,
    mask: np.ndarray | None = None,
) -> tuple[np.ndarray, int]:
    """Connected-component label per node, -1 outside the mask.

    Labels are assigned in discovery order scanning nodes 0..n-1, so a
    component's label order follows its smallest contained node index.
    """
    n = len(indptr) - 1
    labels = np.full(n, -1, dtype=np.int32)
    comp = 0
    for s in range(n):
        if labels[s] >= 0 or (mask is not None and not mask[s]):
            continue
        labels[s] = comp
        q = deque([s])
        while q:
            v = q.popleft()
            for u in indices[indptr[v]:indptr[v + 1]]:
                if labels[u] < 0 and (mask is None or mask[u]):
                    labels[u] = comp
                    q.append(u)
        comp += 1
    return labels, comp


# exact coverage-greedy below this set size (criterion domain); above it,
# candidate centers are sampled uncovered nodes plus their neighbors
EXACT_COVER_LIMIT = 64
SAMPLE_UNCOVERED = 8
CANDIDATE_CAP = 40


def _ball_walk(indptr, indices, mask, seen, stamp, center, radius, box, assign, b):
    """Stamped BFS ball of ``radius`` around ``center`` inside ``mask``.

    Counts uncovered members; with ``assign`` also claims them for box b.
    """
    covered = 0
    q = deque([(center, 0)])
    seen[center] = stamp
    if box[center] < 0:
        covered += 1
        if assign:
            box[center] = b
    while q:
        v, d = q.popleft()
        if d == radius:
            continue
        for u in indices[indptr[v]:indptr[v + 1]]:
            u = int(u)
            if seen[u] != stamp and mask[u]:
                seen[u] = stamp
                if box[u] < 0:
                    covered += 1
                    if assign:
                        box[u] = b
                q.append((u, d + 1))
    return covered


def box_cover_assign(
    indptr: np.ndarray,
    indices: np.ndarray,
    mask: np.ndarray,
    order: np.ndarray,
    radius: int,
) -> tuple[np.ndarray, np.ndarray]:
    """Coverage-ranked greedy box cover.

    Each step centers a box on the candidate whose radius-``radius`` ball
    (in the induced subgraph; paths may pass through covered nodes) claims
    the most still-uncovered nodes; the box holds exactly those nodes.
    ``order`` (the seeded permutation of the node set) breaks ties and
    drives candidate sampling.  Small sets rank every member (keeps greedy
    within 2x of the exhaustive minimum); large sets rank a sample of
    uncovered nodes plus their neighbors, so high-coverage hubs stay
    eligible after they are covered.  Returns (box id per node, -1 outside
    mask; center node per box — a center may itself be covered earlier).
    """
    n = len(indptr) - 1
    box = np.full(n, -1, dtype=np.int32)
    seen = np.full(n, -1, dtype=np.int64)
    centers = []
    m = len(order)
    exact = m <= EXACT_COVER_LIMIT
    stamp = 0
    b = 0
    cursor = 0

    if radius == 0:
        for s in order:
            box[int(s)] = b
            centers.append(int(s))
            b += 1
        return box, np.array(centers, dtype=np.int32)

    while True:
        while cursor < m and box[order[cursor]] >= 0:
            cursor += 1
        if cursor >= m:
            break
        if exact:
            candidates = [int(s) for s in order]
        else:
            candidates = []
            picked = 0
            i = cursor
            while i < m and picked < SAMPLE_UNCOVERED:
                s = int(order[i])
                if box[s] < 0:
                    candidates.append(s)
                    picked += 1
                    for u in indices[indptr[s]:indptr[s + 1]]:
                        if mask[u]:
                            candidates.append(int(u))
                    if len(candidates) >= CANDIDATE_CAP:
                        break
                i += 1
            del candidates[CANDIDATE_CAP:]
        best = -1
        best_count = 0
        for c in candidates:
            stamp += 1
            cnt = _ball_walk(indptr, indices, mask, seen, stamp, c, radius, box, False, b)
            if cnt > best_count:
                best = c
                best_count = cnt
        stamp += 1
        _ball_walk(indptr, indices, mask, seen, stamp, best, radius, box, True, b)
        centers.append(best)
        b += 1
    return box, np.array(centers, dtype=np.int32)
