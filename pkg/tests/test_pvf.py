import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from toricpvf.classify import classify_point, stratify
from toricpvf.exact_linalg import Multivector, rank, wedge
from toricpvf.generators import hirzebruch, product_projective, projective_space
from toricpvf.polytope import lattice_points
from toricpvf.pvf import (decomposition, dimension_table, dims_by_face_formula,
                          weight_space)

from conftest import TEST_FANS, random_unimodular


def test_weight_space_origin():
    fan = projective_space(2)
    ws = weight_space(fan, classify_point(fan, (0, 0)), 1)
    assert ws.dim == 2
    assert ws.generators == [Multivector.basis(2, (0,)), Multivector.basis(2, (1,))]


def test_weight_space_vertex_too_deep():
    fan = projective_space(2)
    assert weight_space(fan, classify_point(fan, (-1, -1)), 1).dim == 0


def test_weight_space_edge_point_top_degree():
    fan = projective_space(2)
    ws = weight_space(fan, classify_point(fan, (0, -1)), 2)
    # tight ray (0,1) wedged with the completion e1: e2 ^ e1 = -e1 ^ e2
    assert ws.rank == 1
    assert [g.coeffs for g in ws.generators] == [{(0, 1): -1}]


def test_weight_space_bad_k():
    fan = projective_space(2)
    with pytest.raises(ValueError):
        weight_space(fan, classify_point(fan, (0, 0)), 3)


def test_face_formula_p2():
    fan = projective_space(2)
    strat = stratify(fan, lattice_points(fan))
    total, rows = dims_by_face_formula(strat, 1)
    assert total == 8
    assert rows == [(0, 1, 2, 2), (1, 6, 1, 6)]
    total, rows = dims_by_face_formula(strat, 2)
    assert total == 10
    assert rows == [(0, 1, 1, 1), (1, 6, 1, 6), (2, 3, 1, 3)]


def test_decomposition_p1():
    spaces = decomposition(projective_space(1), 1)
    assert [(w.weight, w.dim) for w in spaces] == [((-1,), 1), ((0,), 1), ((1,), 1)]
    assert spaces[0].character == (1,)


def test_decomposition_p2_k1():
    spaces = decomposition(projective_space(2), 1)
    assert len(spaces) == 7
    dims = {w.weight: w.dim for w in spaces}
    assert dims.pop((0, 0)) == 2
    assert set(dims.values()) == {1}


@pytest.mark.parametrize("fan, table", [
    (projective_space(1), [1, 3]),
    (projective_space(2), [1, 8, 10]),
    (projective_space(3), [1, 15, 45, 35]),
    (hirzebruch(0), [1, 6, 9]),
    (hirzebruch(1), [1, 6, 9]),
    (hirzebruch(2), [1, 7, 9]),
    (hirzebruch(3), [1, 8, 9]),
    (product_projective([1, 1]), [1, 6, 9]),
])
def test_dimension_tables(fan, table):
    assert dimension_table(fan).as_list() == table


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_projective_matches_closed_form(n):
    # dim H^0(P^n, wedge^k T) = C(n+k+1, n+1) * C(n, k), k >= 1
    table = dimension_table(projective_space(n))
    for k in range(1, n + 1):
        assert table[k] == comb(n + k + 1, n + 1) * comb(n, k)


def test_decomposition_matches_formula(named_fan):
    _, fan = named_fan
    table = dimension_table(fan)
    for k in range(fan.dim + 1):
        assert sum(w.dim for w in decomposition(fan, k)) == table[k]


def test_generators_annihilate_tight_rays(named_fan):
    _, fan = named_fan
    strat = stratify(fan, lattice_points(fan))
    for k in range(fan.dim + 1):
        for pc in strat.all_points():
            ws = weight_space(fan, pc, k)
            assert ws.dim == (comb(fan.dim - pc.rank, k - pc.rank) if pc.rank <= k else 0)
            if ws.generators:
                assert rank([g.vector() for g in ws.generators]) == ws.dim
            for g in ws.generators:
                assert g.is_integral()
                if k < fan.dim:
                    for t in pc.active:
                        assert wedge(g, fan.rays[t]).is_zero()


def test_extreme_degrees(named_fan):
    _, fan = named_fan
    n = fan.dim
    pts = lattice_points(fan)
    assert [w.weight for w in decomposition(fan, 0)] == [(0,) * n]
    top = decomposition(fan, n)
    assert [w.weight for w in top] == list(pts.points)
    assert all(w.dim == 1 for w in top)


def test_demazure_roots(named_fan):
    _, fan = named_fan
    strat = stratify(fan, lattice_points(fan))
    roots = {w.weight for w in decomposition(fan, 1)} - {(0,) * fan.dim}
    assert roots == {pc.point for pc in strat.by_rank[1]}


def test_hirzebruch_zero_equals_product():
    for k in range(3):
        assert dimension_table(hirzebruch(0))[k] == dimension_table(product_projective([1, 1]))[k]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(sorted(TEST_FANS)), st.integers(0, 10**6))
def test_unimodular_invariance(name, seed):
    fan = TEST_FANS[name]()
    moved = fan.transform(random_unimodular(fan.dim, random.Random(seed)))
    assert dimension_table(moved).entries == dimension_table(fan).entries
