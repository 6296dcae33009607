"""Covolumes from quotient stabiliser data, and the two canonical lattice families."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import aut
from .complex import Graph
from .exact import sum_reciprocals
from .links import generalized_polygon_load, girth


@dataclass(frozen=True)
class QuotientCell:
    label: str
    dim: int
    order: int


@dataclass(frozen=True)
class QuotientData:
    """One entry per orbit of cells, with the order of its stabiliser."""

    cells: tuple[QuotientCell, ...]

    def __post_init__(self):
        if not self.cells:
            raise ValueError("quotient needs at least one cell")
        for c in self.cells:
            if c.order < 1:
                raise ValueError(f"stabiliser order of {c.label!r} must be positive")
            if c.dim not in (0, 1, 2):
                raise ValueError(f"cell {c.label!r} has dimension {c.dim}, expected 0..2")

    def orders(self, dim: int) -> list[int]:
        return [c.order for c in self.cells if c.dim == dim]

    def to_json(self) -> dict:
        return {"cells": [{"label": c.label, "dim": c.dim, "order": c.order} for c in self.cells]}

    @classmethod
    def from_json(cls, doc: dict) -> "QuotientData":
        return cls(tuple(QuotientCell(str(d["label"]), int(d["dim"]), int(d["order"]))
                         for d in doc["cells"]))


def s_covolume(q: QuotientData, dim: int) -> Fraction:
    orders = q.orders(dim)
    if not orders:
        raise ValueError(f"quotient has no cells of dimension {dim}")
    return sum_reciprocals(orders)


def c_of_X(q: QuotientData) -> Fraction:
    """Ratio of vertex covolume to face covolume."""
    return s_covolume(q, 0) / s_covolume(q, 2)


def _polygon(r: int, face: int, edge_orders: Sequence[int], vertex_order: int) -> QuotientData:
    cells = [QuotientCell("f1", 2, face)]
    cells += [QuotientCell(f"e{i + 1}", 1, o) for i, o in enumerate(edge_orders)]
    cells += [QuotientCell(f"v{i + 1}", 0, vertex_order) for i in range(r)]
    return QuotientData(tuple(cells))


def bourdon_lattice(m: int, n: int, r: int) -> QuotientData:
    """Quotient a single r-gon; trivial face group, edge groups Z/m, Z/n alternating."""
    if m < 2 or n < 2:
        raise ValueError("need m, n >= 2")
    if r < 5:
        raise ValueError("need r >= 5")
    if m != n and r % 2:
        raise ValueError("r must be even when m != n")
    return _polygon(r, 1, [m if i % 2 == 0 else n for i in range(r)], m * n)


@dataclass(frozen=True)
class BNOrders:
    borel: int
    p1: int
    p2: int
    group: int


def derived_bn_orders(L: Graph) -> BNOrders:
    """Orders read off a chamber-transitive type-preserving action on ``L``.

    The group is Aut_0(L); B is a chamber stabiliser, P_i a stabiliser of a
    vertex on side i (side order follows the first vertex's type).
    """
    gi = girth(L)
    if gi is None or gi % 2:
        raise ValueError("link is not a generalized polygon")
    L = generalized_polygon_load(L, gi // 2)
    G = aut.type_preserving_subgroup(L)
    if not aut.is_edge_transitive(L, G):
        raise ValueError("type-preserving group is not chamber-transitive; supply orders")
    order = G.order()
    types = L.types
    sides = sorted(set(types.values()), key=lambda t: min(v for v in types if types[v] == t))
    sizes = [sum(1 for v in types if types[v] == t) for t in sides]
    return BNOrders(order // len(L.edges), order // sizes[0], order // sizes[1], order)


def building_lattice(L: Graph | None, r: int, orders: BNOrders | Sequence[int] | None = None
                     ) -> QuotientData:
    """Quotient a single r-gon; face group B, edge groups P_1, P_2 alternating, vertex groups G."""
    if r < 6 or r % 2:
        raise ValueError("need r >= 6 even")
    if orders is None:
        if L is None:
            raise ValueError("need a link or explicit orders")
        orders = derived_bn_orders(L)
    elif not isinstance(orders, BNOrders):
        orders = BNOrders(*orders)
    b, p1, p2, g = orders.borel, orders.p1, orders.p2, orders.group
    if min(b, p1, p2, g) < 1:
        raise ValueError("orders must be positive")
    if p1 % b or p2 % b:
        raise ValueError(f"|B| = {b} must divide |P1| = {p1} and |P2| = {p2}")
    if g % p1 or g % p2:
        raise ValueError(f"|P1| = {p1} and |P2| = {p2} must divide |G| = {g}")
    return _polygon(r, b, [p1 if i % 2 == 0 else p2 for i in range(r)], g)


def index_cover(q: QuotientData, k: int) -> QuotientData:
    """Degree-k cover stand-in: k copies of every orbit with unchanged stabilisers."""
    if k < 1:
        raise ValueError("k must be positive")
    return QuotientData(tuple(QuotientCell(f"{c.label}.{j}", c.dim, c.order)
                              for c in q.cells for j in range(k)))
