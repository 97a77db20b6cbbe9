import pytest

from toricpvf.exact_linalg import det
from toricpvf.fan import validate
from toricpvf.generators import (from_family, hirzebruch, product_projective,
                                 projective_space)
from toricpvf.oracle import crosscheck
from toricpvf.pvf import dimension_table


def test_projective_rays():
    assert projective_space(1).rays == ((1,), (-1,))
    p2 = projective_space(2)
    assert p2.rays == ((1, 0), (0, 1), (-1, -1))
    assert len(p2.max_cones) == 3
    p3 = projective_space(3)
    assert len(p3.rays) == 4 and len(p3.max_cones) == 4
    assert all(abs(det(p3.cone_rays(c))) == 1 for c in range(4))


def test_product():
    sq = product_projective([1, 1])
    assert set(sq.rays) == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    assert len(sq.max_cones) == 4
    f = product_projective([2, 1])
    assert f.dim == 3 and len(f.rays) == 5 and len(f.max_cones) == 6


def test_hirzebruch_rays():
    assert hirzebruch(3).rays == ((1, 0), (0, 1), (-1, 3), (0, -1))


@pytest.mark.parametrize("bad", [lambda: projective_space(0), lambda: hirzebruch(-1),
                                 lambda: product_projective([]), lambda: product_projective([0])])
def test_bad_parameters(bad):
    with pytest.raises(ValueError):
        bad()


@pytest.mark.parametrize("fan", [projective_space(n) for n in range(1, 5)]
                         + [hirzebruch(a) for a in range(6)]
                         + [product_projective(d) for d in ([1, 1], [2, 1], [1, 2], [1, 1, 1], [2, 2])])
def test_generated_fans_validate(fan):
    assert validate(fan).ok


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_projective_vector_fields(n):
    assert dimension_table(projective_space(n))[1] == n * n + 2 * n
    if n <= 3:
        report = crosscheck(projective_space(n), 1, 1)
        assert report.passed
        assert report.totals["kernel"] == report.totals["charts"] == n * n + 2 * n


def test_hirzebruch_top_degree():
    assert dimension_table(hirzebruch(3))[2] == 9
    assert dimension_table(hirzebruch(1))[1] == 6


def test_from_family():
    assert from_family("projective:2") == projective_space(2)
    assert from_family("product:1,1") == product_projective([1, 1])
    assert from_family("hirzebruch:2") == hirzebruch(2)
    for bad in ["nope:1", "projective", "projective:x", "hirzebruch:1,2"]:
        with pytest.raises(ValueError):
            from_family(bad)
