"""Immutable regular-graph value type and validation."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from ..errors import Disconnected, InvalidGraph, NotRegular, NotSimple, OddHandshake


@dataclass(frozen=True)
class Graph:
    """Simple connected d-regular graph on vertices ``0..n-1``.

    ``neighbors[v]`` is the sorted tuple of neighbours of ``v``. Instances
    are only produced through :func:`validate` (or helpers that call it), so
    every ``Graph`` satisfies the regularity, simplicity and connectivity
    invariants.
    """

    n: int
    d: int
    neighbors: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def q(self) -> int:
        return self.d - 1

    @property
    def num_edges(self) -> int:
        return self.n * self.d // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.neighbors[u] if u < v]

    def adjacency(self, dtype=np.int64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for u, nbrs in enumerate(self.neighbors):
            a[u, list(nbrs)] = 1
        return a

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        new = [[] for _ in range(self.n)]
        for u, nbrs in enumerate(self.neighbors):
            new[perm[u]] = sorted(perm[w] for w in nbrs)
        return Graph(self.n, self.d, tuple(tuple(x) for x in new))


class Provenance(str, Enum):
    ENUMERATED = "enumerated"
    INGESTED = "ingested"
    CONSTRUCTED = "constructed"


@dataclass(frozen=True)
class GraphFamily:
    d: int
    n: int
    graphs: tuple[Graph, ...]
    provenance: Provenance

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self):
        return iter(self.graphs)

    def __getitem__(self, i):
        return self.graphs[i]


def _is_connected(neighbors: Sequence[Sequence[int]]) -> bool:
    n = len(neighbors)
    if n == 0:
        return False
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for w in neighbors[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == n


def validate(adjacency, d: int | None = None) -> Graph:
    """Check a candidate adjacency structure and return a :class:`Graph`.

    ``adjacency`` may be a square 0/1 matrix (anything ``np.asarray``
    accepts) or a sequence of neighbour lists. When ``d`` is omitted the
    degree of vertex 0 is taken as the target; when it is given, an odd
    ``n*d`` is reported before anything else. Otherwise the first violated
    invariant is raised: simplicity, regularity, connectivity.
    """
    neighbors = _to_neighbor_lists(adjacency)
    n = len(neighbors)
    if n == 0:
        raise InvalidGraph("graph has no vertices")
    if d is None:
        d = len(neighbors[0])
    elif (n * d) % 2:
        # no symmetric structure can be d-regular here; report the root cause
        raise OddHandshake(f"n*d = {n * d} is odd")
    if d < 1:
        raise NotRegular(0, d)
    for v, deg in enumerate(map(len, neighbors)):
        if deg != d:
            raise NotRegular(v, deg, d)
    if not _is_connected(neighbors):
        raise Disconnected(f"graph on {n} vertices is not connected")
    if (n * d) % 2:
        raise OddHandshake(f"n*d = {n * d} is odd")
    return Graph(n, d, tuple(tuple(nb) for nb in neighbors))


def _to_neighbor_lists(adjacency) -> list[list[int]]:
    if isinstance(adjacency, Graph):
        return [list(nb) for nb in adjacency.neighbors]
    if isinstance(adjacency, np.ndarray) or _looks_like_matrix(adjacency):
        a = np.asarray(adjacency)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise InvalidGraph(f"adjacency must be square, got shape {a.shape}")
        if not np.isin(a, (0, 1)).all():
            raise NotSimple("adjacency entries must be 0 or 1")
        if np.any(np.diag(a)):
            raise NotSimple("adjacency has a loop")
        if not np.array_equal(a, a.T):
            raise InvalidGraph("adjacency is not symmetric")
        return [np.flatnonzero(row).tolist() for row in a]
    lists = [list(nb) for nb in adjacency]
    n = len(lists)
    out = []
    for u, nb in enumerate(lists):
        if len(set(nb)) != len(nb):
            raise NotSimple(f"vertex {u} has a repeated neighbour")
        if u in nb:
            raise NotSimple(f"vertex {u} has a loop")
        for w in nb:
            if not 0 <= w < n:
                raise InvalidGraph(f"neighbour {w} of {u} out of range")
            if u not in lists[w]:
                raise InvalidGraph(f"edge {u}-{w} is not symmetric")
        out.append(sorted(nb))
    return out


def _looks_like_matrix(obj) -> bool:
    # a simple graph's neighbour list never has n entries, so n rows of
    # length n can only be a matrix
    try:
        rows = list(obj)
    except TypeError:
        return False
    n = len(rows)
    return n > 0 and all(hasattr(r, "__len__") and len(r) == n for r in rows)


def from_edges(n: int, edges: Iterable[tuple[int, int]], d: int | None = None) -> Graph:
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise NotSimple(f"loop at {u}")
        if v in nbrs[u]:
            raise NotSimple(f"repeated edge {u}-{v}")
        nbrs[u].append(v)
        nbrs[v].append(u)
    return validate(nbrs, d)
