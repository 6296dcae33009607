"""Balls in the right-angled (r, K_{m,n})-complex and their automorphism towers.

Growth works layer by layer from B(x, k-1) to B(x, k):

* edge saturation: each edge of B(x, k-1) gets r-gons until it lies in as many
  faces as its thickness demands;
* link completion: at each vertex of B(x, k-1), freshly created corner edges on
  an over-full side of its link are identified until the side has the right
  size, then every missing link edge is filled with a new r-gon.

Each vertex records, for every incident edge, which side of K_{m,n} that edge
occupies in its link (side 0 has m members, side 1 has n).  With m != n
the side is a global edge type; with m == n and r odd it is only local.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import aut
from .complex import Cell, CellComplex, ball, link, to_colored_graph
from .exact import FactoredNat, factor
from .law import LawData, OK, Verdict, admissible_vertex_covolume
from .links import bipartition

DEFAULT_CAP = 3 * 3 * 8**2
MAX_RADIUS = 2


class GrowthError(RuntimeError):
    pass


@dataclass(frozen=True)
class GrownBall:
    complex: CellComplex
    center: int
    radius: int
    boundary_vertices: tuple[int, ...]
    m: int
    n: int
    r: int

    @property
    def interior_vertices(self) -> list[int]:
        bd = set(self.boundary_vertices)
        return [v for v in self.complex.ids(0) if v not in bd]


class _Builder:
    def __init__(self, m: int, n: int, r: int, rng: random.Random | None):
        self.m, self.n, self.r = m, n, r
        self.rng = rng
        self.next_id = 0
        self.edges: dict[int, list[int]] = {}
        self.faces: dict[int, list[int]] = {}
        self.edges_at: dict[int, set[int]] = {}
        self.faces_on: dict[int, set[int]] = {}
        self.side: dict[tuple[int, int], int] = {}
        self.born: dict[int, int] = {}
        self.layer = 0

    def _new_id(self) -> int:
        self.next_id += 1
        return self.next_id - 1

    def new_vertex(self) -> int:
        v = self._new_id()
        self.edges_at[v] = set()
        self.born[v] = self.layer
        return v

    def new_edge(self, a: int, b: int, side_a: int, side_b: int | None = None) -> int:
        if self.m != self.n:
            side_b = side_a
        elif side_b is None:
            side_b = side_a
        e = self._new_id()
        self.edges[e] = [a, b]
        self.edges_at[a].add(e)
        self.edges_at[b].add(e)
        self.faces_on[e] = set()
        self.side[(a, e)] = side_a
        self.side[(b, e)] = side_b
        return e

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if a == v else a

    def thickness(self, e: int) -> int:
        v = self.edges[e][0]
        return self.n if self.side[(v, e)] == 0 else self.m

    def required(self, s: int) -> int:
        return self.m if s == 0 else self.n

    def corner_edges(self, f: int, v: int) -> list[int]:
        return [e for e in self.faces[f] if v in self.edges[e]]

    def link_neighbors(self, v: int, e: int) -> set[int]:
        out = set()
        for f in self.faces_on[e]:
            out.update(x for x in self.corner_edges(f, v) if x != e)
        return out

    def close_path(self, path_vertices: list[int], path_edges: list[int]) -> int:
        """Add an r-gon containing the given open path of existing edges."""
        k = len(path_edges)
        start, finish = path_vertices[-1], path_vertices[0]
        edges = list(path_edges)
        cur = start
        s = 1 - self.side[(cur, path_edges[-1])]
        for step in range(self.r - k):
            last = step == self.r - k - 1
            if last:
                nxt = finish
                s_far = 1 - self.side[(finish, path_edges[0])]
                if self.m != self.n and s_far != s:
                    raise GrowthError("edge types fail to alternate around an r-gon")
            else:
                nxt = self.new_vertex()
                s_far = s
            e = self.new_edge(cur, nxt, s, s_far)
            edges.append(e)
            cur = nxt
            s = 1 - s_far
        f = self._new_id()
        self.faces[f] = edges
        for e in edges:
            self.faces_on[e].add(f)
        return f

    def face_on_edge(self, e: int) -> int:
        a, b = self.edges[e]
        return self.close_path([a, b], [e])

    def face_at_corner(self, v: int, e1: int, e2: int) -> int:
        y, z = self.other(e1, v), self.other(e2, v)
        return self.close_path([y, v, z], [e1, e2])

    def merge(self, v: int, keep: int, drop: int) -> None:
        """Identify two corner edges at v, together with their far endpoints."""
        w1, w2 = self.other(keep, v), self.other(drop, v)
        if w1 == w2:
            raise GrowthError("edges to merge already share both endpoints")
        if self.side[(w1, keep)] != self.side[(w2, drop)]:
            # w2 was born in this layer, so its sides are a free local choice
            for e in self.edges_at[w2]:
                self.side[(w2, e)] = 1 - self.side[(w2, e)]
        nbrs1 = {self.other(e, w1) for e in self.edges_at[w1]}
        nbrs2 = {self.other(e, w2) for e in self.edges_at[w2] if e != drop}
        if w2 in nbrs1 or nbrs1 & nbrs2:
            raise GrowthError("merging would create a loop or a multi-edge")
        for f in self.faces_on[drop]:
            self.faces[f] = [keep if x == drop else x for x in self.faces[f]]
            self.faces_on[keep].add(f)
        self.edges_at[v].discard(drop)
        self.edges_at[w2].discard(drop)
        del self.edges[drop], self.faces_on[drop]
        del self.side[(v, drop)], self.side[(w2, drop)]
        for e in list(self.edges_at[w2]):
            ends = self.edges[e]
            self.edges[e] = [w1 if x == w2 else x for x in ends]
            self.side[(w1, e)] = self.side.pop((w2, e))
            self.edges_at[w1].add(e)
        del self.edges_at[w2], self.born[w2]

    def _ordered(self, items):
        items = sorted(items)
        if self.rng is not None:
            self.rng.shuffle(items)
        return items

    def complete_link(self, v: int, interior: set[int]) -> None:
        by_side: dict[int, list[int]] = {0: [], 1: []}
        for e in sorted(self.edges_at[v]):
            by_side[self.side[(v, e)]].append(e)
        for s in (0, 1):
            req = self.required(s)
            if len(by_side[s]) > req:
                by_side[s] = self._merge_side(v, s, by_side[s], interior)
            while len(by_side[s]) < req:
                w = self.new_vertex()
                by_side[s].append(self.new_edge(v, w, s, None))
        for e in by_side[0]:
            have = self.link_neighbors(v, e)
            for f in by_side[1]:
                if f not in have:
                    self.face_at_corner(v, e, f)

    def _merge_side(self, v: int, s: int, edges: list[int], interior: set[int]) -> list[int]:
        rigid = [e for e in edges if self.born[self.other(e, v)] < self.layer
                 or self.other(e, v) in interior]
        flexible = [e for e in edges if e not in rigid]
        target = self.required(s) - len(rigid)
        classes: list[tuple[int, set[int]]] = []
        for e in self._ordered(flexible):
            nb = self.link_neighbors(v, e)
            for i, (rep, seen) in enumerate(classes):
                if not seen & nb:
                    self.merge(v, rep, e)
                    seen |= nb
                    break
            else:
                classes.append((e, set(nb)))
        if len(classes) > target:
            raise GrowthError(f"link at vertex {v} cannot be completed to K_{{m,n}}")
        return rigid + [rep for rep, _ in classes]

    def grow_layer(self, old_vertices: set[int]) -> None:
        self.layer += 1
        old_edges = [e for e, (a, b) in self.edges.items() if a in old_vertices and b in old_vertices]
        for e in self._ordered(old_edges):
            while len(self.faces_on[e]) < self.thickness(e):
                self.face_on_edge(e)
        for v in self._ordered(old_vertices):
            self.complete_link(v, old_vertices)

    def to_complex(self, center: int, boundary: set[int]) -> tuple[CellComplex, int, list[int]]:
        ids = sorted(set(self.edges_at) | set(self.edges) | set(self.faces))
        new = {old: i for i, old in enumerate(ids)}
        cells = [Cell(new[v], 0) for v in self.edges_at]
        cells += [Cell(new[e], 1, tuple(sorted(new[x] for x in ab))) for e, ab in self.edges.items()]
        cells += [Cell(new[f], 2, tuple(sorted(new[x] for x in es))) for f, es in self.faces.items()]
        return CellComplex(cells), new[center], sorted(new[v] for v in boundary)


def _check_params(m: int, n: int, r: int, radius: int, cap: int) -> None:
    if m < 2 or n < 2:
        raise ValueError("need m, n >= 2")
    if r < 5:
        raise ValueError("need r >= 5")
    if m != n and r % 2:
        raise ValueError("r must be even when m != n")
    if not 0 <= radius <= MAX_RADIUS:
        raise ValueError(f"radius must be between 0 and {MAX_RADIUS}")
    if m * n * r**radius > cap:
        raise ValueError(f"size guard: m*n*r^radius = {m * n * r**radius} exceeds cap {cap}")


def grow_ball(m: int, n: int, r: int, radius: int, cap: int = DEFAULT_CAP,
              rng: random.Random | None = None) -> GrownBall:
    """B(x, radius) in the unique right-angled (r, K_{m,n})-complex.

    ``rng`` shuffles the processing order of edges and vertices in every layer;
    the result is the same ball up to isomorphism.
    """
    _check_params(m, n, r, radius, cap)
    b = _Builder(m, n, r, rng)
    x = b.new_vertex()
    interior: set[int] = set()
    for _ in range(radius):
        frontier = set(b.edges_at)
        b.grow_layer(frontier)
        interior = frontier
    boundary = set(b.edges_at) - interior
    cx, center, bd = b.to_complex(x, boundary)
    return GrownBall(cx, center, radius, tuple(bd), m, n, r)


def is_complete_bipartite_link(g, m: int, n: int) -> bool:
    colors = bipartition(g)
    if colors is None:
        return False
    sizes = sorted([list(colors.values()).count(0), list(colors.values()).count(1)])
    comps_ok = len(g.vertices) == m + n and len(g.edges) == m * n
    return comps_ok and sizes == sorted([m, n])


def check_grown_ball(gb: GrownBall) -> list[str]:
    """Problems with a grown ball's local structure (empty when it is sound)."""
    problems = []
    c = gb.complex
    for v in gb.interior_vertices:
        if not is_complete_bipartite_link(link(c, v), gb.m, gb.n):
            problems.append(f"vertex {v}: link is not K_{gb.m},{gb.n}")
    interior = set(gb.interior_vertices)
    for e in c.ids(1):
        if interior & set(c.faces(e)):
            t = sum(1 for f in c.cofaces(e) if c.cell(f).dim == 2)
            if t not in (gb.m, gb.n):
                problems.append(f"edge {e}: thickness {t}")
    for f in c.ids(2):
        if len(c.faces(f)) != gb.r:
            problems.append(f"face {f}: {len(c.faces(f))} sides")
    return problems


def pointed_colored_graph(c: CellComplex, center: int):
    return to_colored_graph(c.with_labels({center: "center"}))


@dataclass(frozen=True)
class TowerStep:
    radius: int
    order: FactoredNat
    kernel_order: FactoredNat
    image_order: FactoredNat

    def to_json(self) -> dict:
        return {"radius": self.radius, "order": str(self.order),
                "kernel": str(self.kernel_order), "image": str(self.image_order)}

    @classmethod
    def from_json(cls, doc: dict) -> "TowerStep":
        return cls(int(doc["radius"]), FactoredNat.parse(doc["order"]),
                   FactoredNat.parse(doc["kernel"]), FactoredNat.parse(doc["image"]))


def aut_tower(m: int, n: int, r: int, max_radius: int, cap: int = DEFAULT_CAP,
              grown: GrownBall | None = None) -> list[TowerStep]:
    """|Aut(B(x,k))| for k <= max_radius, with kernel and image of restriction to B(x,k-1).

    Automorphisms are those of the ball fixing the centre.  Radius 0 is the bare
    vertex; its entry has trivial kernel and image.
    """
    if grown is None:
        grown = grow_ball(m, n, r, max_radius, cap)
    c, x = grown.complex, grown.center
    balls = [ball(c, x, k) for k in range(max_radius + 1)]
    steps = []
    prev = None
    for k, bk in enumerate(balls):
        G = aut.automorphism_group(pointed_colored_graph(bk, x))
        order = G.factored_order()
        if prev is None:
            kernel_order, image_order = order, FactoredNat()
        else:
            kernel, image_order = aut.restriction_kernel_image(G, prev.ids())
            kernel_order = kernel.factored_order()
        steps.append(TowerStep(k, order, kernel_order, image_order))
        prev = bk
    return steps


def check_tower_divisibility(law: LawData, tower: Sequence[TowerStep]) -> Verdict:
    """Every |H_k| obeys rules (a) and (b); every kernel avoids primes outside the law
    and primes whose edge-fixator exponent is zero."""
    for step in tower:
        v = admissible_vertex_covolume(law, Fraction(1, step.order.value))
        if not v:
            return Verdict(False, v.violated_rule, v.witness_prime,
                           {"radius": step.radius, "group": "H"})
        for p in step.kernel_order.primes:
            entry = law.entry(p)
            if entry is None:
                return Verdict(False, "(a)", p, {"radius": step.radius, "group": "K"})
            if entry.alpha_prime == 0 and step.radius >= 2:
                return Verdict(False, "(b)", p, {"radius": step.radius, "group": "K"})
    return OK


__all__ = [
    "DEFAULT_CAP", "GrownBall", "GrowthError", "TowerStep", "aut_tower", "check_grown_ball",
    "check_tower_divisibility", "factor", "grow_ball", "is_complete_bipartite_link",
    "pointed_colored_graph",
]
