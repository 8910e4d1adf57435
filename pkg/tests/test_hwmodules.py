"""Highest-weight modules: dimensions, multiplicities, generators."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from liekit.exact import QI, QQ, GaussianRational, sp_eq, sp_mul, sp_mul_many
from liekit.hwmodules import (FreudenthalTable, ModuleGenerators,
                              adjoint_check, build_irrep, direct_sum,
                              dominant_conjugate, longest_word,
                              shapovalov_binomial_check, unitarity_deviation,
                              weight_bilinear, weyl_dim,
                              xh_injectivity_probe)
from liekit.rootdata import build_cartan, root_system

KNOWN_DIMS = [
    ("A", 1, (1,), 2), ("A", 1, (4,), 5),
    ("A", 2, (1, 0), 3), ("A", 2, (0, 1), 3), ("A", 2, (1, 1), 8),
    ("A", 2, (2, 0), 6),
    ("A", 3, (1, 0, 0), 4), ("A", 3, (0, 1, 0), 6), ("A", 3, (1, 0, 1), 15),
    ("B", 2, (1, 0), 5), ("B", 2, (0, 1), 4), ("B", 2, (1, 1), 16),
    ("B", 3, (1, 0, 0), 7), ("B", 3, (0, 0, 1), 8),
    ("C", 3, (1, 0, 0), 6), ("C", 3, (0, 1, 0), 14),
    ("G", 2, (1, 0), 7), ("G", 2, (0, 1), 14),
]


@pytest.mark.parametrize("series,rank,lam,dim", KNOWN_DIMS)
def test_weyl_dimension_formula(series, rank, lam, dim):
    assert weyl_dim(build_cartan(series, rank), lam) == dim


@pytest.mark.parametrize("series,rank,lam,dim", KNOWN_DIMS)
def test_module_construction(series, rank, lam, dim):
    cartan = build_cartan(series, rank)
    mod = build_irrep(cartan, lam)
    assert mod.dim == dim
    ok, witness = mod.commutation_check()
    assert ok, witness
    ok, witness = mod.gram_positive_definite()
    assert ok, witness


@pytest.mark.parametrize("series,rank,lam",
                         [("A", 2, (1, 1)), ("B", 2, (1, 1)),
                          ("G", 2, (0, 1)), ("A", 3, (1, 0, 1))])
def test_freudenthal_matches_module(series, rank, lam):
    cartan = build_cartan(series, rank)
    mod = build_irrep(cartan, lam)
    table = FreudenthalTable(cartan, lam)
    for data in mod.weights.values():
        assert table.multiplicity(data["fund"]) == len(data["basis"])
    assert sum(len(d["basis"]) for d in mod.weights.values()) == mod.dim


@pytest.mark.parametrize("series,rank,lam",
                         [("A", 2, (1, 1)), ("B", 2, (0, 1)), ("G", 2, (1, 0))])
def test_serre_relations(series, rank, lam):
    mod = build_irrep(build_cartan(series, rank), lam)
    ok, witness = mod.serre_check()
    assert ok, witness


@given(st.sampled_from([("A", 2), ("B", 2), ("G", 2)]),
       st.tuples(st.integers(-6, 6), st.integers(-6, 6)))
def test_dominant_conjugate_properties(tp, mu):
    """The dominant conjugate is dominant and has the same length."""
    cartan = build_cartan(*tp)
    dom = dominant_conjugate(cartan, mu)
    assert all(v >= 0 for v in dom)
    assert weight_bilinear(cartan, dom, dom) == weight_bilinear(cartan, mu, mu)
    assert dominant_conjugate(cartan, dom) == dom


@given(st.sampled_from([("A", 2), ("B", 2)]),
       st.tuples(st.integers(-5, 5), st.integers(-5, 5)),
       st.tuples(st.integers(-5, 5), st.integers(-5, 5)))
def test_weight_bilinear_symmetric(tp, mu, nu):
    cartan = build_cartan(*tp)
    assert weight_bilinear(cartan, mu, nu) == weight_bilinear(cartan, nu, mu)


@pytest.mark.parametrize("series,rank", [("A", 2), ("B", 2), ("G", 2)])
def test_longest_word(series, rank):
    cartan = build_cartan(series, rank)
    word = longest_word(cartan)
    assert len(word) == len(root_system(series, rank).positive)


def test_longest_word_a2_explicit():
    assert longest_word(build_cartan("A", 2)) in ([0, 1, 0], [1, 0, 1])


@pytest.mark.parametrize("series,rank,lam",
                         [("A", 2, (1, 1)), ("B", 2, (1, 0)), ("G", 2, (1, 0))])
def test_shapovalov_binomials(series, rank, lam):
    mod = build_irrep(build_cartan(series, rank), lam)
    ok, witness = shapovalov_binomial_check(mod)
    assert ok, witness


@pytest.mark.parametrize("series,rank,lam",
                         [("A", 2, (1, 1)), ("B", 2, (0, 1))])
def test_generator_identities(series, rank, lam):
    mod = build_irrep(build_cartan(series, rank), lam)
    gens = ModuleGenerators(mod)
    for i in range(rank):
        assert sp_eq(gens.s_second(i), gens.s_second_sum(i), QQ)
        for u in (Fraction(2), Fraction(-1), Fraction(3, 5)):
            assert sp_eq(gens.t_torus(i, u), gens.t_torus_diagonal(i, u), QQ)


def test_torus_conjugates_unipotents():
    """t_j(u) x_i(h) t_j(u)^-1 = x_i(u^{a_ji} h)."""
    cartan = build_cartan("A", 2)
    mod = build_irrep(cartan, (1, 1))
    gens = ModuleGenerators(mod)
    u, h = Fraction(3, 5), Fraction(-7, 2)
    for i in range(2):
        for j in range(2):
            t = gens.t_torus_diagonal(j, u)
            tinv = gens.t_torus_diagonal(j, 1 / u)
            lhs = sp_mul_many([t, gens.x(i, h, QQ), tinv], QQ)
            rhs = gens.x(i, u ** cartan.a[j][i] * h, QQ)
            assert sp_eq(lhs, rhs, QQ)


@pytest.mark.parametrize("series,rank,lam",
                         [("A", 2, (1, 0)), ("B", 2, (0, 1))])
def test_adjoint_and_unitarity(series, rank, lam):
    mod = build_irrep(build_cartan(series, rank), lam)
    ok, witness = adjoint_check(mod)
    assert ok, witness
    assert unitarity_deviation(mod) < 1e-10


def test_direct_sum_dimensions():
    cartan = build_cartan("A", 2)
    mods = [build_irrep(cartan, (1, 0)), build_irrep(cartan, (0, 1))]
    tot = direct_sum(mods)
    assert tot.dim == 6
    ok, _ = tot.commutation_check()
    assert ok


def test_unipotent_parametrization_injective():
    ok, count = xh_injectivity_probe(build_cartan("A", 2), samples=40)
    assert ok and count == 40
