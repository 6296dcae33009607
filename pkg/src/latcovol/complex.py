"""Finite combinatorial polyhedral complexes, their links and balls.

Only incidence is stored: no angles or lengths.  Cell ids are integers and
unique across all dimensions of a complex.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping

from .aut.graph import ColoredGraph


class ComplexError(ValueError):
    pass


@dataclass(frozen=True)
class Cell:
    id: int
    dim: int
    faces: tuple[int, ...] = ()
    label: str | None = None


@dataclass(frozen=True)
class Validity:
    ok: bool
    violation: str | None = None

    def __bool__(self):
        return self.ok


class CellComplex:
    """Immutable cell complex given by codimension-one face lists."""

    def __init__(self, cells: Iterable[Cell]):
        by_id = {}
        for c in cells:
            if c.id in by_id:
                raise ComplexError(f"duplicate cell id {c.id}")
            by_id[c.id] = c
        self._cells = dict(sorted(by_id.items()))
        self._cofaces: dict[int, list[int]] | None = None

    def __contains__(self, cid) -> bool:
        return cid in self._cells

    def __len__(self) -> int:
        return len(self._cells)

    def __iter__(self):
        return iter(self._cells.values())

    @property
    def dim(self) -> int:
        return max((c.dim for c in self._cells.values()), default=-1)

    def cell(self, cid: int) -> Cell:
        try:
            return self._cells[cid]
        except KeyError:
            raise ComplexError(f"no cell {cid!r}") from None

    def ids(self, dim: int | None = None) -> list[int]:
        return [c.id for c in self._cells.values() if dim is None or c.dim == dim]

    def faces(self, cid: int) -> tuple[int, ...]:
        return self.cell(cid).faces

    def cofaces(self, cid: int) -> list[int]:
        if self._cofaces is None:
            co = defaultdict(list)
            for c in self._cells.values():
                for f in c.faces:
                    co[f].append(c.id)
            self._cofaces = dict(co)
        return self._cofaces.get(cid, [])

    def closure(self, ids: Iterable[int]) -> set[int]:
        out: set[int] = set()
        stack = list(ids)
        while stack:
            c = stack.pop()
            if c not in out:
                out.add(c)
                stack.extend(self.faces(c))
        return out

    def vertices_of(self, cid: int) -> set[int]:
        return {c for c in self.closure([cid]) if self._cells[c].dim == 0}

    def endpoints(self, edge: int) -> tuple[int, int]:
        a, b = self.faces(edge)
        return a, b

    def boundary_cycle(self, face: int) -> list[int]:
        """Vertices of a 2-cell in cyclic order, starting from the smallest id."""
        edges = [self.endpoints(e) for e in self.faces(face)]
        nbrs = defaultdict(list)
        for a, b in edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        start = min(nbrs)
        cyc, prev, cur = [start], None, start
        while True:
            nxt = min(x for x in nbrs[cur] if x != prev)
            if nxt == start:
                break
            cyc.append(nxt)
            prev, cur = cur, nxt
        return cyc

    def subcomplex(self, ids: Iterable[int]) -> "CellComplex":
        keep = self.closure(ids)
        return CellComplex(c for c in self._cells.values() if c.id in keep)

    def relabeled(self, mapping: Mapping[int, int]) -> "CellComplex":
        return CellComplex(
            Cell(mapping[c.id], c.dim, tuple(mapping[f] for f in c.faces), c.label)
            for c in self._cells.values()
        )

    def with_labels(self, labels: Mapping[int, str | None]) -> "CellComplex":
        return CellComplex(
            Cell(c.id, c.dim, c.faces, labels.get(c.id, c.label)) for c in self._cells.values()
        )

    def to_json(self) -> dict:
        cells = []
        for c in self._cells.values():
            d = {"id": c.id, "dim": c.dim, "faces": list(c.faces)}
            if c.label is not None:
                d["label"] = c.label
            cells.append(d)
        return {"dim": self.dim, "cells": cells}

    def __eq__(self, other) -> bool:
        return isinstance(other, CellComplex) and self._cells == other._cells

    def __hash__(self):
        return hash(tuple(self._cells.values()))

    def __repr__(self) -> str:
        counts = [len(self.ids(k)) for k in range(self.dim + 1)]
        return f"{type(self).__name__}(cells per dim={counts})"

    def as_colored(self, use_types: bool = False) -> ColoredGraph:
        return to_colored_graph(self)


class Graph(CellComplex):
    """A 1-dimensional complex; vertex labels, when all present, are the 2-coloring."""

    @classmethod
    def from_edges(cls, vertices: Iterable[int], edges: Iterable[tuple[int, int]],
                   types: Mapping[int, str] | None = None) -> "Graph":
        vertices = sorted(vertices)
        nxt = (vertices[-1] + 1) if vertices else 0
        cells = [Cell(v, 0, (), None if types is None else types[v]) for v in vertices]
        for k, (a, b) in enumerate(sorted(tuple(sorted(e)) for e in edges)):
            cells.append(Cell(nxt + k, 1, (a, b)))
        return cls(cells)

    @property
    def vertices(self) -> list[int]:
        return self.ids(0)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(self.faces(e))) for e in self.ids(1))

    def edge_cells(self) -> dict[tuple[int, int], int]:
        return {tuple(sorted(self.faces(e))): e for e in self.ids(1)}

    @property
    def types(self) -> dict[int, str] | None:
        labels = {v: self.cell(v).label for v in self.vertices}
        if not labels or any(t is None for t in labels.values()):
            return None
        return labels

    def neighbors(self, v: int) -> list[int]:
        out = []
        for e in self.cofaces(v):
            a, b = self.faces(e)
            out.append(b if a == v else a)
        return sorted(out)

    def as_colored(self, use_types: bool = False) -> ColoredGraph:
        types = self.types if use_types else None
        if use_types and types is None:
            raise ComplexError("graph has no declared bipartition")
        colors = [types[v] for v in self.vertices] if types else None
        return ColoredGraph(self.vertices, self.edges, colors)

    def with_types(self, types: Mapping[int, str]) -> "Graph":
        return Graph(Cell(c.id, c.dim, c.faces, types.get(c.id) if c.dim == 0 else c.label)
                     for c in self)

    def to_short_json(self) -> dict:
        out = {"vertices": self.vertices, "edges": [list(e) for e in self.edges]}
        if self.types is not None:
            out["types"] = {str(v): t for v, t in self.types.items()}
        return out


def validate(c: CellComplex) -> Validity:
    """Check face references, edge and 2-cell boundaries, and graph conventions."""
    for cell in c:
        if cell.dim < 0:
            return Validity(False, f"cell {cell.id} has negative dimension")
        if cell.dim == 0 and cell.faces:
            return Validity(False, f"vertex {cell.id} has faces")
        for f in cell.faces:
            if f not in c:
                return Validity(False, f"cell {cell.id} references missing face {f}")
            if c.cell(f).dim != cell.dim - 1:
                return Validity(False, f"cell {cell.id} has face {f} of wrong dimension")
        if len(set(cell.faces)) != len(cell.faces):
            return Validity(False, f"cell {cell.id} repeats a face")
        if cell.dim == 1 and len(cell.faces) != 2:
            return Validity(False, f"edge {cell.id} does not have exactly 2 distinct endpoints")
        if cell.dim == 2:
            problem = _cycle_problem(c, cell)
            if problem:
                return Validity(False, problem)
    if isinstance(c, Graph) or c.dim == 1:
        seen = set()
        for e in c.ids(1):
            pair = tuple(sorted(c.faces(e)))
            if pair in seen:
                return Validity(False, f"multi-edge between {pair[0]} and {pair[1]}")
            seen.add(pair)
        if isinstance(c, Graph) and c.types is not None:
            for a, b in c.edges:
                if c.types[a] == c.types[b]:
                    return Validity(False, f"edge ({a},{b}) joins two vertices of type {c.types[a]}")
    return Validity(True)


def _cycle_problem(c: CellComplex, cell: Cell) -> str | None:
    if len(cell.faces) < 2:
        return f"2-cell {cell.id} has fewer than 2 boundary edges"
    nbrs = defaultdict(list)
    for e in cell.faces:
        a, b = c.faces(e)
        nbrs[a].append(b)
        nbrs[b].append(a)
    if any(len(v) != 2 for v in nbrs.values()):
        return f"2-cell {cell.id} boundary is not a cycle"
    start = next(iter(nbrs))
    seen, stack = {start}, [start]
    while stack:
        for y in nbrs[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != len(nbrs):
        return f"2-cell {cell.id} boundary is not a single closed cycle"
    return None


def check(c: CellComplex) -> CellComplex:
    v = validate(c)
    if not v:
        raise ComplexError(v.violation)
    return c


def link(c: CellComplex, v: int) -> Graph:
    """Link of vertex ``v`` in a 2-complex.

    Link vertices are the edge ids at ``v``; link edges keep the ids of the
    2-cells they come from.
    """
    if v not in c or c.cell(v).dim != 0:
        raise ComplexError(f"{v!r} is not a vertex of the complex")
    edges_at = [e for e in c.cofaces(v) if c.cell(e).dim == 1]
    at = set(edges_at)
    cells = [Cell(e, 0) for e in sorted(edges_at)]
    for f in sorted({f for e in edges_at for f in c.cofaces(e) if c.cell(f).dim == 2}):
        corner = sorted(e for e in c.faces(f) if e in at)
        if len(corner) != 2:
            raise ComplexError(f"2-cell {f} meets vertex {v} in {len(corner)} edges")
        cells.append(Cell(f, 1, tuple(corner)))
    return Graph(cells)


def ball(c: CellComplex, sigma: int, n: int) -> CellComplex:
    """Combinatorial ball: B(s,0) is the closed cell, B(s,k) the top cells meeting B(s,k-1)."""
    if sigma not in c:
        raise ComplexError(f"{sigma!r} is not a cell of the complex")
    if n < 0:
        raise ValueError("radius must be non-negative")
    top = c.dim
    current = c.closure([sigma])
    for _ in range(n):
        verts = [x for x in current if c.cell(x).dim == 0]
        tops = set()
        for x in verts:
            stack = [x]
            seen = {x}
            while stack:
                y = stack.pop()
                for z in c.cofaces(y):
                    if z not in seen:
                        seen.add(z)
                        if c.cell(z).dim == top:
                            tops.add(z)
                        else:
                            stack.append(z)
        nxt = c.closure(tops)
        if nxt == current:
            break
        current = nxt
    return c.subcomplex(current)


def to_colored_graph(c: CellComplex) -> ColoredGraph:
    """Incidence graph: one point per cell colored by (dim, label); cell joined to its faces."""
    ids = c.ids()
    colors = [(c.cell(i).dim, c.cell(i).label or "") for i in ids]
    edges = [(i, f) for i in ids for f in c.faces(i)]
    return ColoredGraph(ids, edges, colors)


def complex_from_json(doc: Mapping) -> CellComplex:
    """Parse either schema; graphs come back as :class:`Graph`."""
    if "cells" in doc:
        cells = [Cell(int(d["id"]), int(d["dim"]), tuple(int(f) for f in d.get("faces", [])),
                      d.get("label")) for d in doc["cells"]]
        dim = max((x.dim for x in cells), default=-1)
        out = Graph(cells) if dim <= 1 else CellComplex(cells)
        if "dim" in doc and int(doc["dim"]) != dim and cells:
            raise ComplexError(f"declared dim {doc['dim']} but cells reach dim {dim}")
    elif "vertices" in doc:
        types = doc.get("types")
        if types is not None:
            types = {int(k): str(t) for k, t in types.items()}
        out = Graph.from_edges([int(v) for v in doc["vertices"]],
                               [(int(a), int(b)) for a, b in doc.get("edges", [])], types)
    else:
        raise ComplexError("expected a 'cells' or 'vertices' field")
    return check(out)
