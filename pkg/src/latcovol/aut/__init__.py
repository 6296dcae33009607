"""Automorphism groups of colored graphs and the subgroups built from them."""
from __future__ import annotations

from typing import Hashable, Iterable

from ..exact import FactoredNat
from .graph import ColoredGraph
from .perm import Perm, PermGroup, StabChain, cycles, identity, inverse, is_identity, mul
from .search import SearchStats, automorphism_search


def _colored(g, use_types: bool = False) -> ColoredGraph:
    if isinstance(g, ColoredGraph):
        return g
    return g.as_colored(use_types=use_types)


def automorphism_group(g) -> PermGroup:
    """All color- and adjacency-preserving automorphisms of ``g``.

    ``g`` is a :class:`ColoredGraph`, or any object with ``as_colored()``
    (a :class:`~latcovol.complex.Graph` is colored uniformly, so side swaps of a
    bipartite graph are included).
    """
    return automorphism_search(_colored(g))


def group_order(G: PermGroup) -> FactoredNat:
    return G.factored_order()


def pointwise_fixator(g, S: Iterable[Hashable]) -> PermGroup:
    """Subgroup of ``Aut(g)`` fixing every vertex label in ``S``."""
    cg = _colored(g)
    S = list(S)
    unknown = [s for s in S if s not in cg.index]
    if unknown:
        raise KeyError(f"unknown vertices {unknown!r}")
    return automorphism_search(cg.individualized(S))


def type_preserving_subgroup(g) -> PermGroup:
    """Automorphisms preserving each side of the declared bipartition."""
    if isinstance(g, ColoredGraph):
        return automorphism_search(g)
    if getattr(g, "types", None) is None:
        raise ValueError("graph has no declared bipartition")
    return automorphism_search(g.as_colored(use_types=True))


def _edge_index_pairs(g, G: PermGroup) -> list[tuple[int, int]]:
    where = {lab: i for i, lab in enumerate(G.labels)}
    if isinstance(g, ColoredGraph):
        return [(where[g.labels[a]], where[g.labels[b]]) for a, b in g.edges()]
    return [(where[a], where[b]) for a, b in g.edges]


def edge_orbits(g, G: PermGroup) -> list[list[tuple[Hashable, Hashable]]]:
    """Orbits of ``G`` on the edges of ``g``, each a sorted list of label pairs."""
    pairs = [tuple(sorted(e)) for e in _edge_index_pairs(g, G)]
    seen: set[tuple[int, int]] = set()
    out = []
    for e in sorted(pairs):
        if e in seen:
            continue
        orbit = {e}
        stack = [e]
        while stack:
            a, b = stack.pop()
            for s in G.generators:
                f = tuple(sorted((s[a], s[b])))
                if f not in orbit:
                    orbit.add(f)
                    stack.append(f)
        seen |= orbit
        out.append([(G.labels[a], G.labels[b]) for a, b in sorted(orbit)])
    return out


def is_edge_transitive(g, G: PermGroup) -> bool:
    return len(edge_orbits(g, G)) == 1


def restriction_kernel_image(G: PermGroup, h) -> tuple[PermGroup, FactoredNat]:
    """Kernel and image order of restricting ``G`` to the invariant point set ``h``.

    ``h`` is a :class:`ColoredGraph` whose labels are points of ``G`` or an
    iterable of point labels.  The image order is computed independently from
    the restricted generators and checked against ``|G| = |K| |I|``.
    """
    labels = h.labels if isinstance(h, ColoredGraph) else list(h)
    where = {lab: i for i, lab in enumerate(G.labels)}
    try:
        points = sorted(where[lab] for lab in labels)
    except KeyError as exc:
        raise KeyError(f"{exc.args[0]!r} is not a point of the group") from None
    if not G.preserves(points):
        raise ValueError("sub-graph is not invariant under the group")
    kernel = G.pointwise_stabilizer(points)
    image = G.restricted(points)
    k, i = kernel.order(), image.order()
    if k * i != G.order():
        raise ArithmeticError(f"|K||I| = {k}*{i} != |G| = {G.order()}")
    return kernel, image.factored_order()


def _connected(g: ColoredGraph) -> bool:
    if g.n == 0:
        return True
    seen, stack = {0}, [0]
    while stack:
        for u in g.adj[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n


def isomorphic(g1, g2) -> bool:
    """Color-preserving isomorphism test for connected graphs.

    Connected g1, g2 are isomorphic exactly when Aut(g1 + g2) is twice as
    large as Aut(g1) x Aut(g2), the extra factor swapping the two components.
    """
    g1, g2 = _colored(g1), _colored(g2)
    if g1.n != g2.n or sorted(map(repr, g1.colors)) != sorted(map(repr, g2.colors)):
        return False
    if len(g1.edges()) != len(g2.edges()):
        return False
    if not (_connected(g1) and _connected(g2)):
        raise ValueError("isomorphism test needs connected graphs")
    both = automorphism_search(g1.disjoint_union(g2)).order()
    return both == 2 * automorphism_search(g1).order() * automorphism_search(g2).order()


__all__ = [
    "ColoredGraph", "Perm", "PermGroup", "SearchStats", "StabChain",
    "automorphism_group", "automorphism_search", "cycles", "edge_orbits", "group_order",
    "identity", "inverse", "is_edge_transitive", "is_identity", "isomorphic", "mul",
    "pointwise_fixator", "restriction_kernel_image", "type_preserving_subgroup",
]
