"""Constructors for the link graphs used as examples, and registered order data."""
from __future__ import annotations

import threading
from collections import deque
from dataclasses import dataclass
from itertools import combinations, product

from .complex import ComplexError, Graph, check
from .exact import FactoredNat, as_factored, factor, is_prime

# Irreducible polynomials for the non-prime fields, as coefficient lists (low degree first,
# monic leading term omitted).
_MODULI = {
    4: (2, [1, 1]),      # x^2 + x + 1
    8: (2, [1, 1, 0]),   # x^3 + x + 1
    9: (3, [1, 0]),      # x^2 + 1
}
SUPPORTED_Q = tuple(sorted([p for p in range(2, 14) if is_prime(p)] + list(_MODULI)))


class FiniteField:
    """GF(q) on the integers ``0..q-1``; for q = p^k an integer packs base-p coefficients."""

    def __init__(self, q: int):
        if q not in SUPPORTED_Q:
            raise ValueError(f"unsupported field order {q}; supported: {SUPPORTED_Q}")
        self.q = q
        if is_prime(q):
            self.p, self.k = q, 1
            self.add = [[(a + b) % q for b in range(q)] for a in range(q)]
            self.mul = [[(a * b) % q for b in range(q)] for a in range(q)]
        else:
            p, low = _MODULI[q]
            self.p, self.k = p, len(low)
            coeffs = [self._digits(a) for a in range(q)]
            self.add = [[self._pack([(x + y) % p for x, y in zip(coeffs[a], coeffs[b])])
                         for b in range(q)] for a in range(q)]
            self.mul = [[self._pack(self._polymul(coeffs[a], coeffs[b], low))
                         for b in range(q)] for a in range(q)]

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _pack(self, digits: list[int]) -> int:
        return sum(d * self.p**i for i, d in enumerate(digits))

    def _polymul(self, a: list[int], b: list[int], low: list[int]) -> list[int]:
        p, k = self.p, self.k
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
        # x^k = -(low[0] + low[1] x + ...)
        for d in range(2 * k - 2, k - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                for i, l in enumerate(low):
                    prod[d - k + i] = (prod[d - k + i] - c * l) % p
        return prod[:k]

    @property
    def degree(self) -> int:
        return self.k


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n}: vertices ``0..m-1`` of type "A", ``m..m+n-1`` of type "B"."""
    if m < 2 or n < 2:
        raise ValueError("complete_bipartite needs m, n >= 2")
    types = {v: ("A" if v < m else "B") for v in range(m + n)}
    return Graph.from_edges(range(m + n), [(a, m + b) for a in range(m) for b in range(n)], types)


def petersen() -> Graph:
    """Transpositions of S_5, adjacent when disjoint."""
    transpositions = list(combinations(range(1, 6), 2))
    edges = [(i, j) for (i, s), (j, t) in combinations(enumerate(transpositions), 2)
             if not set(s) & set(t)]
    return Graph.from_edges(range(10), edges)


def projective_points(field: FiniteField) -> list[tuple[int, int, int]]:
    """Normalized homogeneous triples (first nonzero coordinate 1), in lexicographic order."""
    q = field.q
    return [t for t in product(range(q), repeat=3)
            if any(t) and next(x for x in t if x) == 1]


def projective_plane_incidence(q: int) -> Graph:
    """Point-line incidence graph of PG(2, q); points first, then lines."""
    field = FiniteField(q)
    pts = projective_points(field)
    add, mul = field.add, field.mul
    N = len(pts)

    def dot(a, b):
        return add[add[mul[a[0]][b[0]]][mul[a[1]][b[1]]]][mul[a[2]][b[2]]]

    edges = [(i, N + j) for i, x in enumerate(pts) for j, y in enumerate(pts) if dot(x, y) == 0]
    types = {v: ("point" if v < N else "line") for v in range(2 * N)}
    return Graph.from_edges(range(2 * N), edges, types)


def bipartition(g: Graph) -> dict[int, int] | None:
    """2-coloring by BFS (each component colored from its smallest vertex), or None."""
    color: dict[int, int] = {}
    for s in g.vertices:
        if s in color:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in color:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    return color


def distances_from(g: Graph, s: int) -> dict[int, int]:
    dist = {s: 0}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def diameter(g: Graph) -> int | None:
    """None if disconnected."""
    best = 0
    n = len(g.vertices)
    for v in g.vertices:
        d = distances_from(g, v)
        if len(d) != n:
            return None
        best = max(best, max(d.values()))
    return best


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, None for forests."""
    best = None
    for s in g.vertices:
        dist, parent = {s: 0}, {s: None}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    length = dist[x] + dist[y] + 1
                    if best is None or length < best:
                        best = length
    return best


def generalized_polygon_load(g: Graph, m: int) -> Graph:
    """Accept ``g`` as the incidence graph of a generalized m-gon (diameter m, girth 2m).

    Untyped graphs come back typed by their bipartition.
    """
    check(g)
    if m < 2:
        raise ValueError("m must be at least 2")
    colors = bipartition(g)
    if colors is None:
        raise ComplexError("graph is not bipartite")
    types = g.types
    if types is not None:
        sides = {}
        for v, c in colors.items():
            if sides.setdefault(c, types[v]) != types[v]:
                raise ComplexError("declared types do not match the bipartition")
        if len(set(types.values())) != 2:
            raise ComplexError("a bipartite link needs exactly two declared types")
    d = diameter(g)
    if d is None:
        raise ComplexError("graph is not connected")
    gi = girth(g)
    if d != m or gi != 2 * m:
        raise ComplexError(f"not a generalized {m}-gon: diameter {d}, girth {gi}")
    if types is None:
        g = g.with_types({v: "AB"[c] for v, c in colors.items()})
    return g


@dataclass(frozen=True)
class RegisteredLink:
    """Order data for a link that is not constructed explicitly."""

    name: str
    aut_order: FactoredNat
    fixator_order: FactoredNat
    edge_count: int | None = None

    def __post_init__(self):
        if not self.fixator_order.divides(self.aut_order):
            raise ValueError(f"fixator order {self.fixator_order} does not divide "
                             f"automorphism order {self.aut_order}")
        if self.edge_count is not None and self.edge_count < 1:
            raise ValueError("edge_count must be positive")

    def to_json(self) -> dict:
        out = {"name": self.name, "aut_order": str(self.aut_order),
               "fixator_order": str(self.fixator_order)}
        if self.edge_count is not None:
            out["edge_count"] = self.edge_count
        return out

    @classmethod
    def from_json(cls, doc: dict) -> "RegisteredLink":
        def order(x):
            return as_factored(x) if isinstance(x, int) else FactoredNat.parse(str(x))
        return cls(str(doc["name"]), order(doc["aut_order"]), order(doc["fixator_order"]),
                   doc.get("edge_count"))


class LinkRegistry:
    """Name -> RegisteredLink store; writes are serialized, reads are lock-free."""

    def __init__(self):
        self._links: dict[str, RegisteredLink] = {}
        self._lock = threading.Lock()

    def register(self, name: str, aut_order, fixator_order, edge_count: int | None = None
                 ) -> RegisteredLink:
        link = RegisteredLink(name, as_factored(aut_order), as_factored(fixator_order), edge_count)
        with self._lock:
            self._links = {**self._links, name: link}
        return link

    def get(self, name: str) -> RegisteredLink:
        return self._links[name]

    def __contains__(self, name: str) -> bool:
        return name in self._links

    def names(self) -> list[str]:
        return sorted(self._links)


REGISTRY = LinkRegistry()


def register_link(name: str, aut_order, fixator_order, edge_count: int | None = None,
                  registry: LinkRegistry = REGISTRY) -> RegisteredLink:
    return registry.register(name, aut_order, fixator_order, edge_count)


__all__ = [
    "FiniteField", "LinkRegistry", "REGISTRY", "RegisteredLink", "SUPPORTED_Q",
    "bipartition", "complete_bipartite", "diameter", "factor", "generalized_polygon_load",
    "girth", "petersen", "projective_plane_incidence", "projective_points", "register_link",
]
