from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from latcovol.lattice import (BNOrders, QuotientCell, QuotientData, bourdon_lattice,
                              building_lattice, c_of_X, derived_bn_orders, index_cover,
                              s_covolume)
from latcovol.law import admissible_face_covolume, admissible_vertex_covolume, law_from_links
from latcovol.links import complete_bipartite, projective_plane_incidence


def test_s_covolume_examples():
    assert s_covolume(QuotientData((QuotientCell("v", 0, 1),)), 0) == 1
    assert s_covolume(bourdon_lattice(2, 2, 5), 0) == F(5, 4)
    assert s_covolume(building_lattice(projective_plane_incidence(2), 6), 0) == F(1, 28)


def test_bourdon_data():
    q = bourdon_lattice(2, 2, 5)
    assert q.orders(2) == [1] and q.orders(1) == [2] * 5 and q.orders(0) == [4] * 5
    q = bourdon_lattice(3, 2, 6)
    assert q.orders(1) == [3, 2, 3, 2, 3, 2] and q.orders(0) == [6] * 6
    with pytest.raises(ValueError):
        bourdon_lattice(3, 2, 5)


def test_building_data():
    q = building_lattice(projective_plane_incidence(2), 6)
    assert q.orders(2) == [8] and q.orders(1) == [24] * 6 and q.orders(0) == [168] * 6
    assert derived_bn_orders(projective_plane_incidence(3)).borel == 108
    with pytest.raises(ValueError):
        building_lattice(None, 6, BNOrders(5, 24, 24, 168))


def test_c_of_x():
    for m, n, r in [(2, 2, 5), (3, 2, 6), (3, 3, 5)]:
        assert c_of_X(bourdon_lattice(m, n, r)) == F(r, m * n)
    assert c_of_X(building_lattice(projective_plane_incidence(2), 6)) == F(6, 21)
    q = QuotientData((QuotientCell("v", 0, 1), QuotientCell("f", 2, 1)))
    assert c_of_X(q) == 1


def test_canonical_covolumes_obey_their_laws():
    for m, n, r in [(2, 2, 5), (3, 2, 6), (3, 3, 5)]:
        q = bourdon_lattice(m, n, r)
        law = law_from_links([complete_bipartite(m, n)])
        assert admissible_vertex_covolume(law, s_covolume(q, 0))
        assert admissible_face_covolume(law, s_covolume(q, 2))
    h = projective_plane_incidence(2)
    q = building_lattice(h, 6)
    law = law_from_links([h])
    assert admissible_vertex_covolume(law, s_covolume(q, 0))
    assert admissible_face_covolume(law, s_covolume(q, 2))


def test_quotient_json_round_trip():
    q = bourdon_lattice(3, 3, 5)
    assert QuotientData.from_json(q.to_json()) == q


@given(st.sampled_from([(2, 2, 5), (3, 2, 6), (3, 3, 5), (2, 3, 8)]), st.integers(1, 6))
def test_index_cover_scales_covolumes(params, k):
    q = bourdon_lattice(*params)
    c = index_cover(q, k)
    assert s_covolume(c, 0) == k * s_covolume(q, 0)
    assert s_covolume(c, 2) == k * s_covolume(q, 2)
    assert c_of_X(c) == c_of_X(q)
