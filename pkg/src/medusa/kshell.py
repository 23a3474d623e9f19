"""k-shell decomposition and core/crust extraction.

Shell index of a node: the pruning level k at which it is removed when all
nodes of degree <= k are recursively deleted, k = 1, 2, ...  Degree-0 input
nodes get shell 0.  The heavy lifting is the bucket-queue kernel, which
runs in O(N + E); the quadratic scan lives only in the test oracle.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import kernels
from ._util import label_sort_key, write_csv
from .graph import Graph


@dataclass(frozen=True)
class ShellAssignment:
    """Per-node shell index; shells partition the node set."""

    shell: np.ndarray
    k_max: int
    shell_sizes: dict[int, int] = field(repr=False)

    def nodes_in_shell(self, k: int) -> np.ndarray:
        return np.nonzero(self.shell == k)[0].astype(np.int32)


def decompose(g: Graph) -> ShellAssignment:
    """Assign every node its shell index (order-independent)."""
    shell = kernels.core_numbers(g.indptr, g.indices)
    shell.flags.writeable = False
    if len(shell):
        counts = np.bincount(shell)
        sizes = {int(k): int(c) for k, c in enumerate(counts) if c > 0}
        k_max = int(shell.max())
    else:
        sizes = {}
        k_max = 0
    return ShellAssignment(shell=shell, k_max=k_max, shell_sizes=sizes)


def k_core(sa: ShellAssignment, k: int) -> np.ndarray:
    """Nodes with shell index >= k (all nodes at k=0, empty past k_max)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return np.nonzero(sa.shell >= k)[0].astype(np.int32)


def k_crust(sa: ShellAssignment, k: int) -> np.ndarray:
    """Nodes with shell index <= k; complement of the (k+1)-core."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return np.nonzero(sa.shell <= k)[0].astype(np.int32)


def shell_rows(g: Graph, sa: ShellAssignment) -> list[tuple]:
    """(node label, shell) rows sorted by shell descending then label."""
    rows = [(g.labels[v], int(sa.shell[v])) for v in range(g.node_count)]
    rows.sort(key=lambda r: (-r[1], label_sort_key(r[0])))
    return rows


def write_shell_csv(path: Path, g: Graph, sa: ShellAssignment) -> None:
    write_csv(path, ["node", "shell"], shell_rows(g, sa))
