import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from combquot.catalog import permutohedron, product_fan, projective_space_fan
from combquot.linalg import inverse, rank, unimodular_extension
from combquot.polyhedral import (
    Cone,
    Fan,
    Polytope,
    UnboundedError,
    braid_fan,
    chamber_complex,
    common_refinement,
    cone_dual,
    convex_hull,
    fan_isomorphic,
    fan_is_valid,
    fan_report,
    fans_equal,
    is_coarsening,
    minkowski_sum,
    normal_fan,
    vertex_enumeration,
)


def brute_vertices(p: Polytope):
    """Oracle: solve every square subsystem of tight constraints."""
    d = p.rank
    eqs = [r for r in p.equations]
    out = set()
    for S in itertools.combinations(p.inequalities, d - len(eqs)):
        rows = list(eqs) + list(S)
        A = [r[:-1] for r in rows]
        if rank(A) < d:
            continue
        inv = inverse(A)
        b = [-r[-1] for r in rows]
        x = tuple(sum(inv[i][j] * b[j] for j in range(d)) for i in range(d))
        if all(sum(c * xi for c, xi in zip(r[:-1], x)) + r[-1] >= 0 for r in p.inequalities) and \
                all(sum(c * xi for c, xi in zip(r[:-1], x)) + r[-1] == 0 for r in eqs):
            out.add(x)
    return sorted(out)


def test_cube_vertices():
    ineqs = [tuple(int(i == j) for j in range(3)) + (0,) for i in range(3)] + \
            [tuple(-int(i == j) for j in range(3)) + (1,) for i in range(3)]
    p = Polytope.from_hrep(3, ineqs)
    assert len(vertex_enumeration(p)) == 8
    assert vertex_enumeration(p) == brute_vertices(p)


def test_unbounded_and_empty():
    p = Polytope.from_hrep(2, [(1, 0, 0), (0, 1, 0)])
    with pytest.raises(UnboundedError):
        vertex_enumeration(p)
    q = Polytope.from_hrep(1, [(1, -2), (-1, 1)])
    assert q.is_empty() and vertex_enumeration(q) == []


@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)),
                min_size=4, max_size=9))
def test_hull_matches_brute_force(points):
    if rank([[a - b for a, b in zip(p, points[0])] for p in points]) < 3:
        return
    p = convex_hull(points)
    verts = vertex_enumeration(p)
    assert verts == brute_vertices(p)
    assert set(verts) <= {tuple(Fraction(x) for x in q) for q in points}


def test_dual_cone():
    c = Cone.from_generators(2, [(1, 0), (1, 1)])
    d = cone_dual(c)
    assert d.same_set(Cone.from_generators(2, [(0, 1), (1, -1)]))


def test_projective_fan_report():
    r = fan_report(projective_space_fan(3))
    assert (r.is_smooth, r.is_complete, r.picard_number, r.ray_count) == (True, True, 1, 4)
    assert fan_is_valid(projective_space_fan(2))


def test_permutohedral_against_braid_oracle():
    for d in (1, 2, 3):
        assert fans_equal(normal_fan(permutohedron(d)), braid_fan(d)) or \
            fan_isomorphic(normal_fan(permutohedron(d)), braid_fan(d)) is not None
    assert len(normal_fan(permutohedron(3)).rays) == 14
    assert len(normal_fan(permutohedron(3)).max_cones) == 24


def test_common_refinement_of_overlapping_cones():
    a = Cone.from_generators(2, [(1, 0), (0, 1)])
    b = Cone.from_generators(2, [(1, 1), (-1, 1)])
    f = common_refinement([a, b], 2)
    assert fan_is_valid(f)
    assert fan_report(f).ray_count == 4


def test_chamber_complex_of_projected_orthant():
    # images of the orthant faces of R^3 under (1,0,-1), (0,1,-1)
    images = [(1, 0), (0, 1), (-1, -1)]
    f = chamber_complex(2, [list(c) for c in itertools.combinations(images, 2)])
    assert fans_equal(f, projective_space_fan(2))


def test_common_refinement_of_arbitrary_cones():
    gens = [[(1, 0), (0, 1)], [(0, 1), (-1, -1)], [(-1, -1), (1, 0)], [(1, 1), (-1, 0)]]
    f = common_refinement([Cone.from_generators(2, g) for g in gens], 2)
    assert fan_is_valid(f) and fan_report(f).is_complete
    assert is_coarsening(projective_space_fan(2), f)
    assert (1, 1) in f.rays and (-1, 0) in f.rays


unimodular = st.lists(st.integers(-3, 3), min_size=2, max_size=2).filter(
    lambda v: math.gcd(*v) == 1).map(unimodular_extension)


@given(unimodular, st.integers(-2, 2))
def test_isomorphism_invariant_under_unimodular_change(M, t):
    M = [list(M[0]), [M[1][0] + t * M[0][0], M[1][1] + t * M[0][1]]]
    for f in (projective_space_fan(2), product_fan([projective_space_fan(1)] * 2), braid_fan(2)):
        g = f.transform(M)
        A = fan_isomorphic(f, g)
        assert A is not None
        assert fans_equal(f.transform(A), g)


def test_non_isomorphic():
    assert fan_isomorphic(projective_space_fan(2), product_fan([projective_space_fan(1)] * 2)) is None


def test_minkowski_sum_of_segments_is_square():
    seg1 = convex_hull([(0, 0), (1, 0)])
    seg2 = convex_hull([(0, 0), (0, 1)])
    s = minkowski_sum([seg1, seg2])
    assert len(vertex_enumeration(s)) == 4
    assert fans_equal(normal_fan(s), product_fan([projective_space_fan(1)] * 2))


def test_fan_json_roundtrip():
    f = braid_fan(2)
    assert Fan.from_json(f.to_json()) == f
