"""Structure constants and the invariant form of the integral Lie algebra."""

import pytest

from liekit.liealg import lie_algebra
from liekit.rootdata import root_system

SMALL = [("A", 1), ("A", 2), ("B", 2), ("G", 2)]
ALL = SMALL + [("A", 3), ("B", 3), ("C", 3)]


@pytest.mark.parametrize("series,rank", ALL)
def test_dimension(series, rank):
    alg = lie_algebra(series, rank)
    rs = root_system(series, rank)
    assert alg.dim == 2 * len(rs.positive) + rank


@pytest.mark.parametrize("series,rank", ALL)
def test_jacobi(series, rank):
    ok, witness = lie_algebra(series, rank).jacobi_check()
    assert ok, witness


@pytest.mark.parametrize("series,rank", ALL)
def test_antisymmetry_and_grading(series, rank):
    alg = lie_algebra(series, rank)
    cat = alg.cat
    for (ix, iy), (il, g) in alg.gamma.items():
        # gamma_{YX}^L = -gamma_{XY}^L
        assert alg.gamma.get((iy, ix)) == (il, -g)
        # class grading
        x, y, l = alg.objects[ix], alg.objects[iy], alg.objects[il]
        assert tuple(a + b for a, b in zip(x.cls, y.cls)) == l.cls
        assert g != 0 and abs(g) <= 3


@pytest.mark.parametrize("series,rank",
                         [t for t in SMALL if t != ("A", 1)])
def test_gamma_pair_products(series, rank):
    vals = lie_algebra(series, rank).gamma_pair_products()
    assert vals and all(v in (-1, -2, -3, -4) for v in vals)


@pytest.mark.parametrize("series,rank", SMALL)
def test_killing_form(series, rank):
    alg = lie_algebra(series, rank)
    ok, witness = alg.killing_equals_trace_form()
    assert ok, witness
    ok, witness = alg.invariance_check()
    assert ok, witness


def test_sl2_bracket_values():
    """[u_X, u_TX] = H'_X and [H', u] eigenvalues in the rank-1 case."""
    alg = lie_algebra("A", 1)
    # objects: 0 = (alpha, +), 1 = (alpha, -); basis index 2 = H'
    assert alg.bracket({0: 1}, {1: 1}) == {2: 1}
    assert alg.bracket({2: 1}, {0: 1}) == {0: -2}
    assert alg.bracket({2: 1}, {1: 1}) == {1: 2}


def test_g2_gamma_magnitudes():
    """G2 has structure constants of absolute value up to 3."""
    alg = lie_algebra("G", 2)
    mags = {abs(g) for (_, g) in alg.gamma.values()}
    assert mags == {1, 2, 3}
