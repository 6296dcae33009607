"""Independent oracles: brute-force enumeration and a group-theoretic ball builder."""
from __future__ import annotations

from itertools import permutations, product

from latcovol.aut.graph import ColoredGraph
from latcovol.complex import Cell, CellComplex


def brute_force_automorphisms(g: ColoredGraph) -> list[tuple[int, ...]]:
    """Every color-preserving bijection that preserves adjacency; tiny graphs only."""
    classes = g.color_classes()
    edges = {frozenset(e) for e in g.edges()}
    out = []
    for choice in product(*(permutations(c) for c in classes)):
        perm = [0] * g.n
        for c, img in zip(classes, choice):
            for a, b in zip(c, img):
                perm[a] = b
        if all(frozenset((perm[a], perm[b])) in edges for a, b in edges):
            out.append(tuple(perm))
    return out


def count_automorphisms(g: ColoredGraph) -> int:
    """Exhaustive backtracking count of color-preserving automorphisms.

    Images are assigned vertex by vertex and a partial map is abandoned as soon
    as it breaks adjacency or non-adjacency with an earlier vertex.
    """
    n = g.n
    adj = [set(g.adj[v]) for v in range(n)]
    image: list[int] = []
    used = [False] * n
    found = 0

    def extend(v):
        nonlocal found
        if v == n:
            found += 1
            return
        for w in range(n):
            if used[w] or g.colors[w] != g.colors[v] or len(adj[w]) != len(adj[v]):
                continue
            if all((u in adj[v]) == (image[u] in adj[w]) for u in range(v)):
                used[w] = True
                image.append(w)
                extend(v + 1)
                image.pop()
                used[w] = False

    extend(0)
    return found


class GraphProduct:
    """Graph product of cyclic groups C_{o_i} over the r-cycle (neighbours commute).

    Elements are reduced syllable words ``((gen, power), ...)`` in lexicographic
    normal form.  Its development over a single r-gon, with vertex groups
    <g_i, g_{i+1}> and edge groups <g_i>, is the right-angled (r, K)-complex.
    """

    def __init__(self, orders):
        self.orders = list(orders)
        self.r = len(self.orders)

    def commute(self, i, j):
        return (i - j) % self.r in (1, self.r - 1)

    def times(self, word, gen, power):
        word = list(word)
        for k in range(len(word) - 1, -1, -1):
            i, p = word[k]
            if i == gen:
                q = (p + power) % self.orders[gen]
                if q:
                    word[k] = (gen, q)
                else:
                    del word[k]
                return self.normal(word)
            if not self.commute(i, gen):
                break
        word.append((gen, power % self.orders[gen]))
        return self.normal(word)

    def normal(self, word):
        word = list(word)
        out = []
        while word:
            best = None
            for k, (i, _) in enumerate(word):
                if all(self.commute(i, j) for j, _ in word[:k]):
                    if best is None or i < word[best][0]:
                        best = k
            out.append(word.pop(best))
        return tuple(out)

    def coset_rep(self, word, gens):
        word = list(word)
        changed = True
        while changed:
            changed = False
            for k in range(len(word) - 1, -1, -1):
                i, _ = word[k]
                if i in gens and all(self.commute(i, j) for j, _ in word[k + 1:]):
                    del word[k]
                    changed = True
                    break
        return self.normal(word)


def developed_ball(m: int, n: int, r: int, radius: int):
    """B(x, radius) of the development, x the identity coset of <g_0, g_1>."""
    orders = [m if i % 2 == 0 else n for i in range(r)] if m != n else [m] * r
    G = GraphProduct(orders)

    def vertex(word, i):
        return ("v", i, G.coset_rep(word, {i, (i + 1) % r}))

    def faces_at(v):
        _, i, rep = v
        j = (i + 1) % r
        out = []
        for a in range(orders[i]):
            for b in range(orders[j]):
                w = rep
                if a:
                    w = G.times(w, i, a)
                if b:
                    w = G.times(w, j, b)
                out.append(w)
        return out

    center = ("v", 0, ())
    verts = {center}
    faces: set = set()
    for _ in range(radius):
        new_faces = {f for v in verts for f in faces_at(v)}
        faces |= new_faces
        verts = {vertex(f, i) for f in faces for i in range(r)}

    ids: dict = {}

    def cid(key):
        return ids.setdefault(key, len(ids))

    cells = {}
    cid(center)
    cells[center] = Cell(ids[center], 0)
    for f in sorted(faces):
        edge_ids = []
        for i in range(r):
            e = ("e", i, G.coset_rep(f, {i}))
            # edge g_i joins the corners V_{i-1} and V_i
            ends = (vertex(f, (i - 1) % r), vertex(f, i))
            for v in ends:
                if v not in cells:
                    cells[v] = Cell(cid(v), 0)
            if e not in cells:
                cells[e] = Cell(cid(e), 1, tuple(sorted(ids[v] for v in ends)))
            edge_ids.append(ids[e])
        fk = ("f", f)
        cells[fk] = Cell(cid(fk), 2, tuple(sorted(edge_ids)))
    return CellComplex(cells.values()), ids[center]
