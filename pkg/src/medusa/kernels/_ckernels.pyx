# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled graph kernels (hot loops of the decomposition pipeline).

Mirrors ``pykernels.py`` exactly: CSR in, identical outputs, no internal
randomness.  Selected automatically at import when built; see
``medusa.kernels``.
"""
from libc.stdint cimport int32_t, int64_t, uint8_t

import numpy as np

BACKEND = "compiled"


def core_numbers(indptr_arr, indices_arr):
    """Shell index per node by bucket-queue pruning (linear time)."""
    cdef const int32_t[::1] indptr = indptr_arr
    cdef const int32_t[::1] indices = indices_arr
    cdef Py_ssize_t n = indptr.shape[0] - 1
    shell_arr = np.zeros(n, dtype=np.int32)
    if n == 0:
        return shell_arr
    cdef int32_t[::1] shell = shell_arr

    cdef int64_t[::1] deg = np.empty(n, dtype=np.int64)
    cdef Py_ssize_t v, i, j
    cdef int64_t max_deg = 0
    for v in range(n):
        deg[v] = indptr[v + 1] - indptr[v]
        if deg[v] > max_deg:
            max_deg = deg[v]

    cdef int64_t[::1] bin_ptr = np.zeros(max_deg + 1, dtype=np.int64)
    cdef int64_t[::1] fill = np.zeros(max_deg + 1, dtype=np.int64)
    cdef int64_t[::1] pos = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] vert = np.empty(n, dtype=np.int64)
    cdef int64_t d, acc, cnt, dv, du, pu, pw, u, w

    for v in range(n):
        fill[deg[v]] += 1
    acc = 0
    for d in range(max_deg + 1):
        cnt = fill[d]
        bin_ptr[d] = acc
        fill[d] = acc
        acc += cnt
    for v in range(n):
        d = deg[v]
        pos[v] = fill[d]
        vert[fill[d]] = v
        fill[d] += 1

    with nogil:
        for i in range(n):
            v = vert[i]
            dv = deg[v]
            shell[v] = <int32_t>dv
            for j in range(indptr[v], indptr[v + 1]):
                u = indices[j]
                du = deg[u]
                if du > dv:
                    # swap u to the front of its bucket, then shrink the bucket
                    pu = pos[u]
                    pw = bin_ptr[du]
                    w = vert[pw]
                    if u != w:
                        vert[pu] = w
                        vert[pw] = u
                        pos[w] = pu
                        pos[u] = pw
                    bin_ptr[du] = pw + 1
                    deg[u] = du - 1
    return shell_arr


def bfs_distances(indptr_arr, indices_arr, source, mask_arr=None):
    """Hop distances from ``source``; -1 marks unreachable / outside mask."""
    cdef const int32_t[::1] indptr = indptr_arr
    cdef const int32_t[::1] indices = indices_arr
    cdef Py_ssize_t n = indptr.shape[0] - 1
    dist_arr = np.full(n, -1, dtype=np.int32)
    cdef int32_t[::1] dist = dist_arr
    cdef int32_t[::1] queue = np.empty(n, dtype=np.int32)
    cdef const uint8_t[::1] mask
    cdef Py_ssize_t head = 0, tail = 0
    cdef int32_t v, u, dv
    cdef Py_ssize_t j
    cdef int32_t src = source

    dist[src] = 0
    queue[tail] = src
    tail += 1
    if mask_arr is None:
        with nogil:
            while head < tail:
                v = queue[head]
                head += 1
                dv = dist[v] + 1
                for j in range(indptr[v], indptr[v + 1]):
                    u = indices[j]
                    if dist[u] < 0:
                        dist[u] = dv
                        queue[tail] = u
                        tail += 1
    else:
        mask = mask_arr
        with nogil:
            while head < tail:
                v = queue[head]
                head += 1
                dv = dist[v] + 1
                for j in range(indptr[v], indptr[v + 1]):
                    u = indices[j]
                    if dist[u] < 0 and mask[u]:
                        dist[u] = dv
                        queue[tail] = u
                        tail += 1
    return dist_arr


def component_labels(indptr_arr, indices_arr, mask_arr=None):
    """Connected-component label per node, -1 outside the mask.

    Labels follow discovery order scanning nodes 0..n-1.
    """
    cdef const int32_t[::1] indptr = indptr_arr
    cdef const int32_t[::1] indices = indices_arr
    cdef Py_ssize_t n = indptr.shape[0] - 1
    labels_arr = np.full(n, -1, dtype=np.int32)
    cdef int32_t[::1] labels = labels_arr
    cdef int32_t[::1] queue = np.empty(n, dtype=np.int32)
    cdef const uint8_t[::1] mask
    cdef bint has_mask = mask_arr is not None
    if has_mask:
        mask = mask_arr
    cdef Py_ssize_t head, tail, j, s
    cdef int32_t comp = 0
    cdef int32_t v, u

    with nogil:
        for s in range(n):
            if labels[s] >= 0:
                continue
            if has_mask and not mask[s]:
                continue
            labels[s] = comp
            queue[0] = <int32_t>s
            head = 0
            tail = 1
            while head < tail:
                v = queue[head]
                head += 1
                for j in range(indptr[v], indptr[v + 1]):
                    u = indices[j]
                    if labels[u] < 0 and (not has_mask or mask[u]):
                        labels[u] = comp
                        queue[tail] = u
                        tail += 1
            comp += 1
    return labels_arr, int(comp)


# exact coverage-greedy below this set size (criterion domain); above it,
# candidate centers are sampled uncovered nodes plus their neighbors
DEF EXACT_COVER_LIMIT = 64
DEF SAMPLE_UNCOVERED = 8
DEF CANDIDATE_CAP = 40


cdef int64_t _ball_walk(
    const int32_t[::1] indptr, const int32_t[::1] indices,
    const uint8_t[::1] mask, int64_t[::1] seen, int64_t stamp,
    int32_t center, int64_t radius, int32_t[::1] box, bint assign,
    int32_t b, int32_t[::1] queue, int64_t[::1] qdepth,
) noexcept nogil:
    """Stamped BFS ball around ``center``; counts (and optionally claims)
    uncovered members."""
    cdef int64_t covered = 0
    cdef Py_ssize_t head = 0, tail = 1, j
    cdef int64_t dnext
    cdef int32_t v, u
    seen[center] = stamp
    queue[0] = center
    qdepth[0] = 0
    if box[center] < 0:
        covered += 1
        if assign:
            box[center] = b
    while head < tail:
        v = queue[head]
        dnext = qdepth[head] + 1
        head += 1
        if dnext > radius:
            continue
        for j in range(indptr[v], indptr[v + 1]):
            u = indices[j]
            if seen[u] != stamp and mask[u]:
                seen[u] = stamp
                if box[u] < 0:
                    covered += 1
                    if assign:
                        box[u] = b
                queue[tail] = u
                qdepth[tail] = dnext
                tail += 1
    return covered


def box_cover_assign(indptr_arr, indices_arr, mask_arr, order_arr, radius):
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
    cdef const int32_t[::1] indptr = indptr_arr
    cdef const int32_t[::1] indices = indices_arr
    cdef const uint8_t[::1] mask = mask_arr
    cdef const int32_t[::1] order = order_arr
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef int64_t rad = radius
    cdef Py_ssize_t m = order.shape[0]

    box_arr = np.full(n, -1, dtype=np.int32)
    cdef int32_t[::1] box = box_arr
    cdef int64_t[::1] seen = np.full(n, -1, dtype=np.int64)
    cdef int32_t[::1] queue = np.empty(n, dtype=np.int32)
    cdef int64_t[::1] qdepth = np.empty(n, dtype=np.int64)
    centers_arr = np.empty(m, dtype=np.int32)
    cdef int32_t[::1] centers = centers_arr
    cdef int32_t[EXACT_COVER_LIMIT] cand  # exact mode fills up to m <= 64
    cdef bint exact = m <= EXACT_COVER_LIMIT
    cdef int64_t b = 0, stamp = 0, best_count, cnt
    cdef Py_ssize_t cursor = 0, i, j, k, n_cand, picked
    cdef int32_t s, u, best

    if rad == 0:
        with nogil:
            for i in range(m):
                box[order[i]] = <int32_t>b
                centers[b] = order[i]
                b += 1
        return box_arr, centers_arr[:b].copy()

    with nogil:
        while True:
            while cursor < m and box[order[cursor]] >= 0:
                cursor += 1
            if cursor >= m:
                break
            n_cand = 0
            if exact:
                for i in range(m):
                    cand[n_cand] = order[i]
                    n_cand += 1
            else:
                picked = 0
                i = cursor
                while i < m and picked < SAMPLE_UNCOVERED and n_cand < CANDIDATE_CAP:
                    s = order[i]
                    if box[s] < 0:
                        cand[n_cand] = s
                        n_cand += 1
                        picked += 1
                        for j in range(indptr[s], indptr[s + 1]):
                            u = indices[j]
                            if mask[u] and n_cand < CANDIDATE_CAP:
                                cand[n_cand] = u
                                n_cand += 1
                    i += 1
            best = -1
            best_count = 0
            for k in range(n_cand):
                stamp += 1
                cnt = _ball_walk(indptr, indices, mask, seen, stamp,
                                 cand[k], rad, box, False, <int32_t>b, queue, qdepth)
                if cnt > best_count:
                    best = cand[k]
                    best_count = cnt
            stamp += 1
            _ball_walk(indptr, indices, mask, seen, stamp,
                       best, rad, box, True, <int32_t>b, queue, qdepth)
            centers[b] = best
            b += 1
    return box_arr, centers_arr[:b].copy()
