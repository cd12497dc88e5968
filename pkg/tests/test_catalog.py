import pytest

from combquot.acceptance import catalog_specs
from combquot.catalog import (
    REFERENCE_WEIGHTS_GR_5_2,
    CatalogError,
    ChartSpec,
    chart_weights,
    expected_gale,
    fixed_point_weights,
    grassmann_simple_root_basis,
    grassmann_weight_matrix_blocks,
    identify,
    product_fan,
    projective_space_fan,
    standard_fan,
    subtorus_gale,
)
from combquot.linalg import determinant, matmul, same_row_lattice, transposed_gale_dual
from combquot.polyhedral import fan_report, vertex_enumeration
from combquot.quotients import quotient_fan


def test_invalid_parameters():
    for bad in (("grassmann", 4, 3), ("quadric_even", 2), ("ptpn", 1), ("nope", 3)):
        with pytest.raises(CatalogError):
            ChartSpec(*bad)


@pytest.mark.parametrize("spec", [s for s in catalog_specs() if s.family != "product_diagonal"])
def test_gale_matches_family_formula(spec):
    assert same_row_lattice(transposed_gale_dual(chart_weights(spec).matrix), expected_gale(spec))


@pytest.mark.parametrize("n,k", [(3, 1), (4, 1), (4, 2), (5, 1), (5, 2), (5, 3)])
def test_grassmann_block_formula(n, k):
    assert grassmann_weight_matrix_blocks(n, k) == chart_weights(ChartSpec("grassmann", n, k)).matrix


def test_reference_weight_matrix_gr_5_2():
    assert chart_weights(ChartSpec("grassmann", 5, 2)).matrix == REFERENCE_WEIGHTS_GR_5_2


def test_simple_root_basis_unimodular():
    for n in range(2, 6):
        assert abs(determinant(grassmann_simple_root_basis(n))) == 1


def test_subtorus_gale_kills_last_rows():
    for n, k in ((4, 1), (5, 2)):
        W = chart_weights(ChartSpec("grassmann", n, k)).matrix[k:]
        G = subtorus_gale(n, k)
        assert all(not any(r) for r in matmul(W, tuple(zip(*G))))


def test_ptpn_weights_are_positive_roots():
    ws = chart_weights(ChartSpec("ptpn", 3))
    assert sorted(ws.weights()) == sorted([(1, 0, 0), (1, 1, 0), (1, 1, 1), (0, 1, 1), (0, 0, 1)])


def test_standard_fans():
    assert fan_report(standard_fan("projective_space", 3)).ray_count == 4
    assert fan_report(standard_fan("product", [1, 2])).max_cone_count == 6
    r = fan_report(standard_fan("permutohedral", 2))
    assert (r.ray_count, r.max_cone_count) == (6, 6)
    with pytest.raises(CatalogError):
        standard_fan("simplex", 2)


def test_fixed_point_weight_polytopes():
    q = fixed_point_weights(ChartSpec("quadric_odd", 3))
    assert q.labels[0] == "P1" and q.labels[-1] == "P6"
    assert len(vertex_enumeration(q.weight_polytope())) == 6  # octahedron
    g = fixed_point_weights(ChartSpec("grassmann", 3, 1))
    assert len(g.weights) == 6  # hypersimplex Delta(2,4)


def test_identify_order():
    assert identify(quotient_fan(chart_weights(ChartSpec("quadric_odd", 4))))["identified"] \
        == "projective_space:3"
    assert identify(product_fan([projective_space_fan(1)] * 3))["identified"] == "product:1,1,1"
    assert identify(quotient_fan(chart_weights(ChartSpec("grassmann", 5, 1))))["identified"] \
        == "permutohedral:3"
    out = identify(projective_space_fan(2), against="product:1,1")
    assert out["isomorphic"] is False and out["identified"] is None
