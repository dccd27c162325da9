import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import ball_facets_bruteforce
from stabsym.polytope import (DegenerateNormError, NormSpec, borromean, euler_characteristic,
                              euler_class_of_facet, faces_equivalent, facets, l1, map_polygon,
                              norm_value, strictly_feasible, zonotope_vertices)


def test_norm_examples():
    b = borromean()
    assert norm_value(b, (1, 0, 0)) == 2
    assert norm_value(b, (0, 0, 0)) == 0
    assert norm_value(b, (1, 1, 1)) == 6


def test_zonotope_examples():
    assert zonotope_vertices(NormSpec(((1,),))) == [(-1,), (1,)]
    assert zonotope_vertices(NormSpec(((1, 0), (0, 1)))) == [(-1, -1), (-1, 1), (1, -1), (1, 1)]
    assert len(zonotope_vertices(borromean())) == 14
    # parallel generators merge
    assert zonotope_vertices(NormSpec(((1, 0), (0, 1), (2, 0)))) == [(-3, -1), (-3, 1), (3, -1), (3, 1)]


def test_degenerate_rejected():
    with pytest.raises(DegenerateNormError):
        NormSpec(((1, 0, 0), (0, 1, 0)))
    with pytest.raises(DegenerateNormError):
        NormSpec(())


def test_strict_feasibility():
    assert strictly_feasible([[1, 0], [0, 1]])
    assert not strictly_feasible([[1, 0], [-1, 0]])
    assert not strictly_feasible([[1, 1], [-1, 0], [0, -1]])


@pytest.mark.parametrize("spec", [borromean(), l1(), NormSpec(((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0))),
                                  NormSpec(((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, -1, 2), (0, 1, 1)))])
def test_facets_match_bruteforce_oracle(spec):
    fs = facets(spec)
    oracle = ball_facets_bruteforce(spec.generators)
    assert {f.normal: set(f.polygon) for f in fs} == oracle
    assert euler_characteristic(fs) == 2
    for f in fs:
        assert euler_class_of_facet(f) == tuple(-x for x in f.normal)
        for x in f.polygon:
            assert norm_value(spec, x) == 1
    normals = {f.normal for f in fs}
    assert all(tuple(-x for x in u) in normals for u in normals)


def test_census():
    assert sorted(f.vertex_count for f in facets(l1())) == [3] * 8
    assert sorted(f.vertex_count for f in facets(borromean())) == [3] * 8 + [4] * 6


def test_face_equivalence():
    b = borromean()
    fs = facets(b)
    tri = next(f for f in fs if f.vertex_count == 3)
    quad = next(f for f in fs if f.vertex_count == 4)
    assert faces_equivalent(tri, quad, b, 2).verdict == "Distinct"
    same = faces_equivalent(tri, tri, b, 1)
    assert same.verdict == "Equivalent" and map_polygon(same.matrix, tri.polygon) == set(tri.polygon)
    anti = next(f for f in fs if f.normal == tuple(-x for x in tri.normal))
    res = faces_equivalent(tri, anti, b, 1)
    assert res.verdict == "Equivalent"
    assert map_polygon(res.matrix, tri.polygon) == set(anti.polygon)
    neg = ((-1, 0, 0), (0, -1, 0), (0, 0, -1))
    assert map_polygon(neg, tri.polygon) == set(anti.polygon)


def test_identity_found_for_equal_faces():
    b = borromean()
    for f in facets(b):
        res = faces_equivalent(f, f, b, 1)
        assert res.verdict == "Equivalent"


@settings(max_examples=80, deadline=None)
@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=5), min_size=3, max_size=3),
       st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=5), min_size=3, max_size=3),
       st.fractions(min_value=-4, max_value=4, max_denominator=3))
def test_norm_axioms_and_polarity(x, y, t):
    b = borromean()
    nx, ny = norm_value(b, x), norm_value(b, y)
    assert norm_value(b, [a + c for a, c in zip(x, y)]) <= nx + ny
    assert norm_value(b, [t * a for a in x]) == abs(t) * nx
    assert (nx == 0) == (not any(x))
    inside = all(sum(u * a for u, a in zip(v, x)) <= 1 for v in zonotope_vertices(b))
    assert inside == (nx <= 1)
