import itertools
import math
from math import lcm

import pytest
from hypothesis import given, strategies as st

from combquot.catalog import ChartSpec, chart_weights
from combquot.linalg import matmul, rank, transposed_gale_dual, unimodular_extension
from combquot.polyhedral import fan_report, fans_equal, is_coarsening, normal_fan
from combquot.quotients import (
    QuotientError,
    WeightSystem,
    check_certificate,
    chow_polytope,
    fiber_polytope,
    git_chambers,
    git_quotient_fan,
    is_fully_definite,
    quotient_fan,
    semistable_support,
    unstable_coordinates,
)


def lattice_points(ws, v, c):
    """Oracle: all x in Z^N_{>=0} with W x = v, bounded by the positive covector c."""
    budget = sum(a * b for a, b in zip(c, v))
    cw = [sum(a * b for a, b in zip(c, w)) for w in ws.weights()]
    ranges = [range(int(budget // s) + 1) for s in cw]
    for x in itertools.product(*ranges):
        if all(sum(a * b for a, b in zip(row, x)) == vi for row, vi in zip(ws.matrix, v)):
            yield x


def test_rank_deficient_rejected():
    with pytest.raises(QuotientError, match="weight matrix not of full rank"):
        WeightSystem(((1, 2), (2, 4)))


def test_json_roundtrip_and_errors():
    ws = chart_weights(ChartSpec("quadric_odd", 3))
    assert WeightSystem.from_json(ws.to_json()) == ws
    with pytest.raises(QuotientError, match="weights"):
        WeightSystem.from_json({"wts": []})


def test_degenerate_square_system_gives_trivial_fan():
    f = quotient_fan(WeightSystem(((1, 0), (0, 1))))
    assert f.rank == 0


@pytest.mark.parametrize("spec,count", [
    (ChartSpec("quadric_odd", 3), 4),
    (ChartSpec("quadric_odd", 4), 8),
    (ChartSpec("ptpn", 2), 2),
    (ChartSpec("grassmann", 4, 1), 18),
    (ChartSpec("grassmann", 4, 2), 18),
])
def test_chamber_counts(spec, count):
    # counts computed once by the chamber walker and frozen
    assert len(git_chambers(chart_weights(spec)).chambers) == count


@pytest.mark.parametrize("spec", [ChartSpec("quadric_odd", 3), ChartSpec("grassmann", 4, 1),
                                  ChartSpec("grassmann", 4, 2), ChartSpec("ptpn", 3)])
def test_git_fans_coarsen_quotient_fan(spec):
    ws = chart_weights(spec)
    fine = quotient_fan(ws)
    for v in git_chambers(ws).representatives:
        assert fiber_polytope(ws, v).is_bounded()
        assert is_coarsening(git_quotient_fan(ws, v), fine)


def test_chamber_representatives_are_interior_integral():
    ws = chart_weights(ChartSpec("grassmann", 4, 1))
    cc = git_chambers(ws)
    for cone, v in zip(cc.chambers, cc.representatives):
        assert all(isinstance(x, int) for x in v)
        assert cone.interior_contains(v)


def test_semistable_b3_chamber():
    ws = chart_weights(ChartSpec("quadric_odd", 3))
    v = (-3, 1, 1)  # sum of -e1, e2-e1, e3-e1
    assert unstable_coordinates(ws, v) == ["rho2+", "rho3+"]


@pytest.mark.parametrize("spec", [ChartSpec("quadric_odd", 3), ChartSpec("ptpn", 2),
                                  ChartSpec("grassmann", 4, 1)])
def test_semistable_against_lattice_oracle(spec):
    ws = chart_weights(spec)
    ok, U = is_fully_definite(ws)
    c = U[0]
    for v in git_chambers(ws).representatives:
        p = fiber_polytope(ws, v)
        m = lcm(*(x.denominator for vert in p.vertices() for x in vert))
        mv = tuple(m * x for x in v)
        pts = list(lattice_points(ws, mv, c))
        oracle = [any(x[i] == 0 for x in pts) for i in range(ws.n_coords)]
        assert semistable_support(ws, v) == oracle


def test_semistable_trivial_cases():
    ws = chart_weights(ChartSpec("quadric_odd", 3))
    assert semistable_support(ws, (0, 0, 0)) == [True] * 5
    assert semistable_support(WeightSystem(((2,),)), (2,)) == [False]


def test_unbounded_fiber_raises():
    ws = WeightSystem(((1, -1),))
    with pytest.raises(QuotientError, match="not fully definite"):
        git_quotient_fan(ws, (1,))


def test_chow_polytope_normal_fan():
    ws = chart_weights(ChartSpec("quadric_odd", 4))
    assert fans_equal(normal_fan(chow_polytope(ws)), quotient_fan(ws))


def test_quotient_fans_complete():
    for spec in (ChartSpec("grassmann", 5, 1), ChartSpec("ptpn", 4), ChartSpec("quadric_even", 4)):
        assert fan_report(quotient_fan(chart_weights(spec))).is_complete


def test_quotient_fan_basis_independent():
    ws = chart_weights(ChartSpec("quadric_odd", 3))
    Q = transposed_gale_dual(ws.matrix)
    Q2 = matmul(((2, 1), (1, 1)), Q)
    f2 = quotient_fan(ws, Q2)
    assert fan_report(f2).ray_count == 3
    assert fans_equal(f2.transform(((1, -1), (-1, 2))), quotient_fan(ws))


positive_weights = st.integers(1, 3).flatmap(
    lambda r: st.lists(st.lists(st.integers(0, 3), min_size=r, max_size=r).filter(any),
                       min_size=r + 1, max_size=r + 3))


@given(positive_weights, st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_certificate_for_twisted_positive_systems(weights, seed_vec):
    r = len(weights[0])
    base = WeightSystem.from_weights(weights) if _full_rank(weights) else None
    if base is None:
        return
    v = seed_vec[:r]
    if r > 1 and math.gcd(*v) == 1:
        M = unimodular_extension(v)
    else:
        M = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
    twisted = WeightSystem(matmul(M, base.matrix))
    ok, U = is_fully_definite(twisted)
    assert ok and check_certificate(twisted, U)


def _full_rank(weights):
    return rank(weights) == len(weights[0])


@given(st.lists(st.lists(st.integers(-2, 2), min_size=2, max_size=2), min_size=2, max_size=5))
def test_zero_weight_never_definite(weights):
    weights = weights + [[0, 0]]
    if not _full_rank(weights):
        return
    ok, U = is_fully_definite(WeightSystem.from_weights(weights))
    assert not ok and U is None
