from itertools import permutations

import pytest

from seminormal_hecke.hecke import jucys_murphy, murphy_basis_oracle
from seminormal_hecke.qcoeff import ONE, Q, quantum_int
from seminormal_hecke.specht import (
    DimensionLimitError,
    SpechtVector,
    act_gen,
    act_hecke,
    bilinear_form,
    gram_matrix,
    specht_module,
    straighten,
)
from seminormal_hecke.tableaux import Tableau, partitions_of


def row_words(lam):
    """Every row-standard lam-tableau as a row word."""
    letters = [r for r, p in enumerate(lam) for _ in range(p)]
    return sorted(set(permutations(letters)))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_generator_matrices_match_murphy_oracle(n):
    mb = murphy_basis_oracle(n)
    for lam in partitions_of(n):
        mod = specht_module(lam)
        for i in range(1, n):
            cols = mod.columns(i)
            for k, rw in enumerate(mod.basis):
                assert cols[k] == mb.action_column(lam, rw, i)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_straightening_matches_murphy_oracle(n):
    mb = murphy_basis_oracle(n)
    for lam in partitions_of(n):
        mod = specht_module(lam)
        for rw in row_words(lam):
            assert mod.straighten(rw) == mb.straighten(lam, rw)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_gram_routes_agree(n):
    for lam in partitions_of(n):
        oracle = gram_matrix(lam, "oracle").entries
        assert gram_matrix(lam, "definitional").entries == oracle
        assert gram_matrix(lam, "seminormal").entries == oracle


def test_gram_of_21():
    g = gram_matrix((2, 1))
    assert [str(t) for t in g.order] == ["1,2/3", "1,3/2"]
    assert g.entries == ((1 + Q, -ONE), (-ONE, 1 + Q * Q))


def test_gram_of_one_row_is_factorial():
    g = gram_matrix((4,))
    assert g.entries == ((quantum_int(2) * quantum_int(3) * quantum_int(4),),)


def test_superstandard_vector_is_a_q_eigenvector():
    top = SpechtVector.basis_vector(Tableau.parse("1,2,3/4,5"))
    for i in (1, 2, 4):
        assert act_gen(top, i) == top.scale(Q)


def test_jm_action_matches_element():
    lam = (3, 2, 1)
    mod = specht_module(lam)
    for rw in mod.basis[:6]:
        v = {rw: ONE}
        for m in range(1, 7):
            assert mod.jm_action(v, m) == mod.act_hecke(v, jucys_murphy(m, 6))
            assert mod.jm_action(v, m) == mod.jm_action_sum(v, m)


def test_straighten_wrapper():
    u = Tableau.parse("2,3/1,4")
    v = straighten(u)
    # e_u for a row standard u lies in the span of standard e_t
    assert all(t.is_standard() for t, _ in v.terms())
    assert straighten(Tableau.parse("1,3/2,4")) == SpechtVector.basis_vector(Tableau.parse("1,3/2,4"))


def test_vector_arithmetic_and_form():
    a = SpechtVector.basis_vector(Tableau.parse("1,2/3"))
    b = SpechtVector.basis_vector(Tableau.parse("1,3/2"))
    assert (a + b) - b == a
    assert (a - a).coeffs == {}
    assert bilinear_form(a, b) == -ONE
    assert bilinear_form(a + b, a + b) == (1 + Q) + (1 + Q * Q) - 2
    with pytest.raises(ValueError):
        a + SpechtVector.basis_vector(Tableau.parse("1,2,3"))


def test_act_hecke_agrees_with_generator_products():
    from seminormal_hecke.hecke import HeckeElement

    v = SpechtVector.basis_vector(Tableau.parse("1,3/2,4"))
    h = HeckeElement.generator(2, 4) * HeckeElement.generator(3, 4)
    assert act_hecke(v, h) == act_gen(act_gen(v, 2), 3)


def test_dimension_guard(monkeypatch):
    from seminormal_hecke import specht

    monkeypatch.setenv("SEMINORMAL_MAX_DIM", "10")
    specht.clear_caches()
    with pytest.raises(DimensionLimitError):
        specht_module((3, 2, 1))
    monkeypatch.delenv("SEMINORMAL_MAX_DIM")
    specht.clear_caches()
    assert specht_module((3, 2, 1)).dim == 16
