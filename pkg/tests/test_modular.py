import pytest

from seminormal_hecke.modular import (
    branching_filtration,
    is_pole_free,
    quantum_int_vanishes,
    radical_rank,
    reduce_vector,
    verify_submodule_fn,
    verify_submodule_tleq,
)
from seminormal_hecke.qcoeff import PoleAtZeta, quantum_int
from seminormal_hecke.tableaux import Tableau, dimension, partitions_of

T = Tableau.parse


def test_filtration_21():
    filt = branching_filtration((2, 1))
    assert filt.closed
    assert [l.node for l in filt.layers] == [(1, 2), (2, 1)]
    assert [l.quotient_shape for l in filt.layers] == [(1, 1), (2,)]
    assert [l.layer_dim for l in filt.layers] == [1, 1]


def test_filtration_one_row():
    filt = branching_filtration((4,))
    assert len(filt.layers) == 1 and filt.layers[0].layer_dim == 1


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_filtration_layers_are_specht_quotients(n):
    for lam in partitions_of(n):
        filt = branching_filtration(lam)
        assert filt.closed
        assert sum(l.layer_dim for l in filt.layers) == dimension(lam)
        assert [l.layer_dim for l in filt.layers] == [dimension(l.quotient_shape) for l in filt.layers]


def test_reduction_helpers():
    assert quantum_int_vanishes(3, 3) and not quantum_int_vanishes(2, 3)
    v = {(0, 0, 1): quantum_int(3).inverse()}
    assert not is_pole_free(v, 3)
    assert is_pole_free(v, 2)
    with pytest.raises(PoleAtZeta):
        reduce_vector(v, 3)
    assert reduce_vector({(0,): quantum_int(4)}, 4) == {}


def test_fn_21_top_node_e3():
    rep = verify_submodule_fn((2, 1), 1, 3)
    assert rep.hypothesis == [{"i": 2, "r": 2, "nonzero": True}]
    assert rep.verdict == "confirmed"
    assert rep.matrices_equal == [True] and rep.independent


def test_fn_lowest_node_needs_no_hypothesis():
    for lam in [(3, 2), (2, 2, 1), (4, 2, 1)]:
        for e in (2, 3):
            rep = verify_submodule_fn(lam, len(branching_filtration(lam).layers), e)
            assert rep.hypothesis == []
            assert rep.verdict == "confirmed"


def test_fn_32_top_node_e2():
    rep = verify_submodule_fn((3, 2), 1, 2)
    # radial distance from (1,3) to (2,2) is 2, and [2] vanishes at -1
    assert rep.hypothesis == [{"i": 2, "r": 2, "nonzero": False}]
    assert rep.verdict == "hypothesis-failed"


def test_fn_scan_up_to_5():
    for n in range(1, 6):
        for lam in partitions_of(n):
            for j in range(1, len(branching_filtration(lam).layers) + 1):
                for e in (2, 3, 4, 5):
                    rep = verify_submodule_fn(lam, j, e)
                    if rep.hypothesis_holds:
                        assert rep.verdict == "confirmed", (lam, j, e)


def test_tleq_311():
    t = T("1,4,5/2/3")
    rep = verify_submodule_tleq((3, 1, 1), t, 4, 5)
    assert rep.verdict == "confirmed" and rep.kind == "tleq"
    assert rep.to_json()["r"] == 4
    # f for t<= with r = 4 has the denominator [3], a pole at cube roots of unity
    assert verify_submodule_tleq((3, 1, 1), t, 4, 3).verdict == "pole"


def test_tleq_22():
    for t, node in ((T("1,2/3,4"), (2, 1)), (T("1,3/2,4"), (1, 2))):
        rep = verify_submodule_tleq((2, 2), t, 3, 3)
        assert rep.node == node
        assert rep.verdict == "confirmed"
        assert rep.matrices_equal == [True] and rep.independent


def test_tleq_r_equals_n_is_fn():
    t = T("1,3,5/2,4")
    a = verify_submodule_tleq((3, 2), t, 5, 3)
    b = verify_submodule_fn((3, 2), 1, 3)
    assert a.to_json() == b.to_json()


def test_tleq_argument_checks():
    with pytest.raises(ValueError):
        verify_submodule_tleq((2, 1), T("1,2/3"), 1, 3)
    with pytest.raises(ValueError):
        verify_submodule_fn((2, 1), 3, 3)
    with pytest.raises(ValueError):
        verify_submodule_fn((2, 1), 1, 1)


def test_radical_rank():
    assert radical_rank((2, 1), 3) == 1
    # trivial row stabiliser: the 1x1 Gram matrix is [1]
    assert radical_rank((1, 1), 2) == 1
    assert radical_rank((2, 1), 2) == 2
    # e beyond every hook length: semisimple, full rank
    assert radical_rank((3, 2), 7) == dimension((3, 2))


def test_report_json_keys():
    rep = verify_submodule_fn((2, 1), 1, 3).to_json()
    assert {"shape", "node", "e", "hypothesis", "pole_free", "generators_checked", "verdict"} <= set(rep)
    assert rep["shape"] == [2, 1] and rep["node"] == [1, 2]
