"""Named graphs used by tests and the command line."""

from __future__ import annotations

from itertools import combinations

from ..errors import InfeasibleParameters
from .graph import Graph, from_edges


def complete_graph(n: int = 4) -> Graph:
    return from_edges(n, combinations(range(n), 2))


def k4() -> Graph:
    return complete_graph(4)


def complete_bipartite(a: int = 3) -> Graph:
    return from_edges(2 * a, [(i, a + j) for i in range(a) for j in range(a)])


def petersen() -> Graph:
    """Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint."""
    pairs = list(combinations(range(5), 2))
    edges = [
        (i, j)
        for i, j in combinations(range(len(pairs)), 2)
        if not set(pairs[i]) & set(pairs[j])
    ]
    return from_edges(10, edges)


def prism(k: int = 3) -> Graph:
    """Circular ladder C_k x K_2."""
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)]
    return from_edges(2 * k, edges)


def _diamond(base: int) -> tuple[list[tuple[int, int]], int, int]:
    # tips base, base+3; middles base+1, base+2 joined by the cross edge
    a, c, e, b = base, base + 1, base + 2, base + 3
    return [(a, c), (a, e), (c, e), (c, b), (e, b)], a, b


def _clasp(base: int) -> tuple[list[tuple[int, int]], int]:
    # a diamond whose two tips share an extra vertex; that vertex is the hook
    x, y, z, w, hook = range(base, base + 5)
    return [(x, y), (x, z), (x, w), (w, y), (w, z), (hook, y), (hook, z)], hook


def string_of_diamonds(n: int) -> Graph:
    """Cubic graph on n vertices with the maximal 2*floor(n/4) triangles.

    ``n % 4 == 0`` gives a closed loop of ``n/4`` diamonds; ``n % 4 == 2``
    gives an open string of ``(n-10)/4`` diamonds closed off by a clasp at
    each end.
    """
    if n < 8 or n % 2:
        raise InfeasibleParameters(f"string of diamonds needs even n >= 8, got {n}")
    edges: list[tuple[int, int]] = []
    if n % 4 == 0:
        k = n // 4
        ends = []
        for i in range(k):
            es, a, b = _diamond(4 * i)
            edges += es
            ends.append((a, b))
        for i in range(k):
            edges.append((ends[i][1], ends[(i + 1) % k][0]))
        return from_edges(n, edges)
    k = (n - 10) // 4
    left, hook_l = _clasp(0)
    edges += left
    prev = hook_l
    for i in range(k):
        es, a, b = _diamond(5 + 4 * i)
        edges += es
        edges.append((prev, a))
        prev = b
    right, hook_r = _clasp(5 + 4 * k)
    edges += right
    edges.append((prev, hook_r))
    return from_edges(n, edges)


def by_name(name: str) -> Graph:
    """Resolve ``k4``, ``petersen``, ``k33``, ``prism:k`` or ``diamond-string:n``."""
    key, _, arg = name.strip().lower().partition(":")
    if key == "k4":
        return k4()
    if key == "petersen":
        return petersen()
    if key in ("k33", "k3,3"):
        return complete_bipartite(3)
    if key == "prism":
        return prism(int(arg or 3))
    if key == "diamond-string":
        if not arg:
            raise InfeasibleParameters("diamond-string needs a vertex count, e.g. diamond-string:12")
        return string_of_diamonds(int(arg))
    raise KeyError(f"unknown construction {name!r}")
