"""Automorphism search by equitable refinement and individualization.

The ordered partition is stored nauty-style: ``lab`` lists the points, cells
are contiguous runs of ``lab`` and are named by their start position.  Every
step (initial coloring, splitting, target-cell choice) depends only on cell
positions and sizes, so it commutes with automorphisms; this is what lets a
leaf of one subtree be compared with the leaf of the first path.

The group is assembled bottom-up along the first path: at depth ``i`` every
vertex of the target cell that is not yet in the orbit of the first-path
choice is tested by searching its subtree for an automorphism.  The orbit sizes
then multiply to the group order, and the generators found form a strong
generating set relative to the first-path base.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import ColoredGraph
from .perm import Perm, PermGroup


class _Partition:
    __slots__ = ("lab", "pos", "cell", "end")

    def __init__(self, lab, pos, cell, end):
        self.lab = lab
        self.pos = pos
        self.cell = cell
        self.end = end

    def copy(self) -> "_Partition":
        return _Partition(self.lab[:], self.pos[:], self.cell[:], self.end[:])

    def starts(self) -> list[int]:
        out, s, n = [], 0, len(self.lab)
        while s < n:
            out.append(s)
            s = self.end[s]
        return out

    def is_discrete(self) -> bool:
        return all(self.end[s] == s + 1 for s in self.starts())

    def target_cell(self) -> int | None:
        """Start of the first largest non-singleton cell."""
        best, best_size = None, 1
        for s in self.starts():
            size = self.end[s] - s
            if size > best_size:
                best, best_size = s, size
        return best


def _initial_partition(g: ColoredGraph) -> _Partition:
    n = g.n
    lab: list[int] = []
    cell = [0] * n
    end = [0] * n
    for members in g.color_classes():
        s = len(lab)
        lab.extend(members)
        for v in members:
            cell[v] = s
        end[s] = s + len(members)
    pos = [0] * n
    for i, v in enumerate(lab):
        pos[v] = i
    return _Partition(lab, pos, cell, end)


def _refine(g: ColoredGraph, p: _Partition, splitters: list[int]) -> int:
    """Make ``p`` equitable in place; return an invariant hash of the process."""
    adj = g.adj
    lab, pos, cell, end = p.lab, p.pos, p.cell, p.end
    queue = list(splitters)
    queued = set(queue)
    trace = []
    head = 0
    while head < len(queue):
        w = queue[head]
        head += 1
        queued.discard(w)
        count: dict[int, int] = {}
        for x in lab[w:end[w]]:
            for u in adj[x]:
                count[u] = count.get(u, 0) + 1
        touched = sorted({cell[u] for u in count})
        for t in touched:
            e = end[t]
            if e - t == 1:
                continue
            members = lab[t:e]
            keys = [count.get(v, 0) for v in members]
            if min(keys) == max(keys):
                trace.append((w, t, keys[0]))
                continue
            order = sorted(range(len(members)), key=keys.__getitem__)
            sub_starts = []
            prev = None
            for k, idx in enumerate(order):
                v = members[idx]
                i = t + k
                lab[i] = v
                pos[v] = i
                if keys[idx] != prev:
                    sub_starts.append(i)
                    prev = keys[idx]
            bounds = sub_starts + [e]
            sizes = []
            for a, b in zip(bounds, bounds[1:]):
                end[a] = b
                for i in range(a, b):
                    cell[lab[i]] = a
                sizes.append(b - a)
            trace.append((w, t, tuple(sizes), tuple(sorted(keys))))
            if t in queued:
                new = sub_starts[1:]
            else:
                largest = max(range(len(sizes)), key=lambda k: (sizes[k], -k))
                new = [s for k, s in enumerate(sub_starts) if k != largest]
            for s in new:
                if s not in queued:
                    queued.add(s)
                    queue.append(s)
    return hash(tuple(trace))


def _individualize(g: ColoredGraph, p: _Partition, v: int) -> tuple[_Partition, int]:
    q = p.copy()
    s = q.cell[v]
    e = q.end[s]
    i = q.pos[v]
    u = q.lab[s]
    q.lab[s], q.lab[i] = v, u
    q.pos[v], q.pos[u] = s, i
    q.end[s] = s + 1
    q.end[s + 1] = e
    for k in range(s + 1, e):
        q.cell[q.lab[k]] = s + 1
    inv = _refine(g, q, [s])
    return q, hash((inv, len(q.starts())))


@dataclass
class SearchStats:
    nodes: int = 0
    leaves: int = 0


def automorphism_search(g: ColoredGraph, stats: SearchStats | None = None) -> PermGroup:
    """Full color- and adjacency-preserving automorphism group of ``g``."""
    n = g.n
    if stats is None:
        stats = SearchStats()
    if n == 0:
        return PermGroup([], 0, [], base=[], strong=True)
    root = _initial_partition(g)
    _refine(g, root, root.starts())

    # first path: a fixed choice (lowest point of the target cell) at each depth
    nodes = [root]
    invariants = [0]
    base: list[int] = []
    targets: list[int] = []
    while True:
        t = nodes[-1].target_cell()
        if t is None:
            break
        cell_pts = nodes[-1].lab[t:nodes[-1].end[t]]
        v = min(cell_pts)
        base.append(v)
        targets.append(t)
        child, inv = _individualize(g, nodes[-1], v)
        stats.nodes += 1
        nodes.append(child)
        invariants.append(inv)
    first_leaf = nodes[-1].lab

    def leaf_perm(p: _Partition) -> Perm | None:
        stats.leaves += 1
        perm = [0] * n
        for a, b in zip(first_leaf, p.lab):
            perm[a] = b
        return tuple(perm) if g.is_automorphism(perm) else None

    def descend(p: _Partition, depth: int) -> Perm | None:
        # p matches the first-path node at `depth` up to the invariants checked
        if depth == len(base):
            return leaf_perm(p)
        t = targets[depth]
        if p.target_cell() != t:
            return None
        for w in sorted(p.lab[t:p.end[t]]):
            child, inv = _individualize(g, p, w)
            stats.nodes += 1
            if inv != invariants[depth + 1]:
                continue
            found = descend(child, depth + 1)
            if found is not None:
                return found
        return None

    gens: list[Perm] = []
    for depth in range(len(base) - 1, -1, -1):
        node = nodes[depth]
        t = targets[depth]
        v = base[depth]
        orbit = _orbit(v, gens)
        for w in sorted(node.lab[t:node.end[t]]):
            if w in orbit:
                continue
            child, inv = _individualize(g, node, w)
            stats.nodes += 1
            if inv != invariants[depth + 1]:
                continue
            found = descend(child, depth + 1)
            if found is not None:
                gens.append(found)
                orbit = _orbit(v, gens)
    return PermGroup(gens, n, g.labels, base=base, strong=True)


def _orbit(v: int, gens: list[Perm]) -> set[int]:
    seen = {v}
    stack = [v]
    while stack:
        a = stack.pop()
        for s in gens:
            b = s[a]
            if b not in seen:
                seen.add(b)
                stack.append(b)
    return seen
