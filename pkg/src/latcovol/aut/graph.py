from __future__ import annotations

from typing import Hashable, Iterable, Sequence


class ColoredGraph:
    """Undirected vertex-colored graph on points ``0..n-1``.

    ``labels[i]`` is the external id of point ``i``; colors must be sortable
    with ``repr`` as a fallback key so the initial partition order is stable.
    """

    def __init__(
        self,
        labels: Sequence[Hashable],
        edges: Iterable[tuple[Hashable, Hashable]],
        colors: Sequence[Hashable] | None = None,
    ):
        self.labels = list(labels)
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self.index) != len(self.labels):
            raise ValueError("duplicate vertex labels")
        n = len(self.labels)
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for a, b in edges:
            i, j = self.index[a], self.index[b]
            if i == j:
                raise ValueError(f"loop at {a!r}")
            nbrs[i].add(j)
            nbrs[j].add(i)
        self.adj = [tuple(sorted(s)) for s in nbrs]
        self.adjset = [frozenset(s) for s in nbrs]
        self.colors = list(colors) if colors is not None else [0] * n
        if len(self.colors) != n:
            raise ValueError("one color per vertex required")

    @property
    def n(self) -> int:
        return len(self.labels)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in self.adj[i] if i < j]

    def color_classes(self) -> list[list[int]]:
        keys = sorted(set(self.colors), key=_color_key)
        where = {k: pos for pos, k in enumerate(keys)}
        classes: list[list[int]] = [[] for _ in keys]
        for v, c in enumerate(self.colors):
            classes[where[c]].append(v)
        return classes

    def recolored(self, colors: Sequence[Hashable]) -> "ColoredGraph":
        g = object.__new__(ColoredGraph)
        g.labels, g.index, g.adj, g.adjset = self.labels, self.index, self.adj, self.adjset
        g.colors = list(colors)
        return g

    def individualized(self, points: Iterable[Hashable]) -> "ColoredGraph":
        """Give every listed vertex (by label) its own color."""
        colors: list[Hashable] = [(0, c) for c in self.colors]
        for k, lab in enumerate(points):
            colors[self.index[lab]] = (1, k)
        return self.recolored(colors)

    def is_automorphism(self, perm: Sequence[int]) -> bool:
        if len(perm) != self.n or sorted(perm) != list(range(self.n)):
            return False
        for v in range(self.n):
            if self.colors[perm[v]] != self.colors[v]:
                return False
            if len(self.adj[perm[v]]) != len(self.adj[v]):
                return False
            target = self.adjset[perm[v]]
            for u in self.adj[v]:
                if perm[u] not in target:
                    return False
        return True

    def disjoint_union(self, other: "ColoredGraph") -> "ColoredGraph":
        labels = [(0, lab) for lab in self.labels] + [(1, lab) for lab in other.labels]
        edges = [((0, self.labels[i]), (0, self.labels[j])) for i, j in self.edges()]
        edges += [((1, other.labels[i]), (1, other.labels[j])) for i, j in other.edges()]
        return ColoredGraph(labels, edges, self.colors + other.colors)


def _color_key(c):
    # (kind, value) pairs so that mixed ints, strings, None and tuples never fail to compare
    if c is None:
        return (0, 0)
    if isinstance(c, int):
        return (1, c)
    if isinstance(c, str):
        return (2, c)
    if isinstance(c, tuple):
        return (3, tuple(_color_key(x) for x in c))
    return (4, repr(c))
