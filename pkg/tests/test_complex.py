import json

import pytest

from latcovol.balls import grow_ball
from latcovol.complex import (Cell, CellComplex, ComplexError, Graph, ball, check,
                              complex_from_json, link, to_colored_graph, validate)
from latcovol.links import complete_bipartite


def pentagon():
    cells = [Cell(v, 0) for v in range(5)]
    cells += [Cell(5 + i, 1, tuple(sorted((i, (i + 1) % 5)))) for i in range(5)]
    cells.append(Cell(10, 2, tuple(range(5, 10))))
    return CellComplex(cells)


def test_validate_examples():
    assert validate(CellComplex([Cell(0, 0)]))
    assert validate(pentagon())
    # one 2-cell bounded by two disjoint triangles
    cells = [Cell(v, 0) for v in range(6)]
    tri = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    cells += [Cell(6 + k, 1, e) for k, e in enumerate(tri)]
    cells.append(Cell(20, 2, tuple(range(6, 12))))
    v = validate(CellComplex(cells))
    assert not v and "cycle" in v.violation


def test_validate_dangling_face():
    v = validate(CellComplex([Cell(0, 0), Cell(1, 1, (0, 7))]))
    assert not v
    with pytest.raises(ComplexError):
        check(CellComplex([Cell(0, 0), Cell(1, 1, (0, 7))]))


def test_link_examples():
    gb = grow_ball(2, 2, 5, 1)
    lk = link(gb.complex, gb.center)
    assert len(lk.vertices) == 4 and len(lk.edges) == 4
    assert all(len(lk.neighbors(v)) == 2 for v in lk.vertices)
    corner = link(pentagon(), 0)
    assert (len(corner.vertices), len(corner.edges)) == (2, 1)
    lone = link(CellComplex([Cell(0, 0)]), 0)
    assert lone.vertices == [] and lone.edges == []


def test_ball_examples():
    p = pentagon()
    assert ball(p, 10, 0).ids() == p.ids()
    assert ball(p, 0, 0).ids() == [0]
    gb = grow_ball(2, 2, 5, 2)
    b1 = ball(gb.complex, gb.center, 1)
    assert len(b1.ids(2)) == 4
    assert ball(p, 0, 5).ids() == p.ids()


def test_colored_graph_examples():
    g = to_colored_graph(pentagon())
    assert g.n == 11 and len(set(g.colors)) == 3
    assert to_colored_graph(complete_bipartite(3, 2)).n == 3 + 2 + 6
    assert to_colored_graph(CellComplex([])).n == 0


def test_json_round_trip_both_schemas():
    p = pentagon()
    again = complex_from_json(json.loads(json.dumps(p.to_json())))
    assert again == p
    g = complete_bipartite(3, 2)
    short = complex_from_json(json.loads(json.dumps(g.to_short_json())))
    assert isinstance(short, Graph)
    assert short.edges == g.edges and short.types == g.types


def test_json_rejects_invalid():
    with pytest.raises(ComplexError):
        complex_from_json({"vertices": [0, 1], "edges": [[0, 5]]})


def test_relabel_preserves_structure():
    p = pentagon()
    q = p.relabeled({i: 100 - i for i in p.ids()})
    assert validate(q)
    assert sorted(len(q.faces(c)) for c in q.ids()) == sorted(len(p.faces(c)) for c in p.ids())
