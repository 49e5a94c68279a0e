from itertools import permutations

import pytest

from seminormal_hecke.tableaux import (
    Tableau,
    addable_nodes,
    apply,
    compose,
    conjugate,
    content,
    d_of,
    dimension,
    dominance_leq,
    dominance_leq_tableaux,
    garnir_coset,
    garnir_mu,
    garnir_tableau,
    identity,
    inverse,
    is_lattice,
    james_murphy_tableau,
    length,
    mul_simple_right,
    parse_partition,
    partitions_of,
    radial_distance,
    reduced_word,
    remove_node,
    removable_nodes,
    restrict,
    sigma,
    simple,
    standard_row_words,
    standard_tableaux,
    superstandard,
    t_leq,
    total_prec,
    transposition,
    word_to_perm,
)

# p(n) for n = 0..10
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def brute_force_syt(lam):
    """Count standard tableaux by filling the diagram with every permutation."""
    n = sum(lam)
    count = 0
    for p in permutations(range(1, n + 1)):
        rows, k = [], 0
        for part in lam:
            rows.append(p[k : k + part])
            k += part
        if Tableau(rows).is_standard():
            count += 1
    return count


def test_partition_counts():
    for n, count in enumerate(PARTITION_COUNTS):
        parts = partitions_of(n)
        assert len(parts) == count
        assert len(set(parts)) == count
        assert all(sum(p) == n and list(p) == sorted(p, reverse=True) for p in parts)


def test_partitions_in_decreasing_lex_order():
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert parse_partition("3,2,2") == (3, 2, 2)


def test_hook_formula_matches_enumeration():
    for n in range(1, 8):
        for lam in partitions_of(n):
            assert dimension(lam) == brute_force_syt(lam) == len(standard_row_words(lam))


def test_dimension_squares_sum_to_factorial():
    for n, fact in [(5, 120), (6, 720), (7, 5040)]:
        assert sum(dimension(lam) ** 2 for lam in partitions_of(n)) == fact


def test_dominance_and_total_order():
    assert dominance_leq((2, 2), (3, 1))
    assert not dominance_leq((3, 1, 1, 1), (2, 2, 2))
    assert not dominance_leq((2, 2, 2), (3, 1, 1, 1))
    for n in range(1, 7):
        parts = partitions_of(n)
        for a in parts:
            for b in parts:
                if dominance_leq(a, b):
                    assert total_prec(a, b)
                    # conjugation reverses dominance
                    assert dominance_leq(conjugate(b), conjugate(a))


def test_nodes_and_contents():
    lam = (4, 3, 2, 2)
    assert removable_nodes(lam) == [(1, 4), (2, 3), (4, 2)]
    assert addable_nodes(lam) == [(1, 5), (2, 4), (3, 3), (5, 1)]
    assert content((2, 3)) == 1
    assert radial_distance((4, 2), (1, 4)) == 5
    assert remove_node(lam, (2, 3)) == (4, 2, 2, 2)
    with pytest.raises(ValueError):
        remove_node(lam, (3, 2))


def test_permutation_conventions():
    n = 5
    s1, s2 = simple(1, n), simple(2, n)
    # left to right composition
    assert compose(s1, s2) == word_to_perm([1, 2], n)
    w = sigma(2, 5, n)
    assert w == (1, 5, 2, 3, 4)
    assert length(w) == 3 and reduced_word(w) == [2, 3, 4]
    assert transposition(2, 4, n) == (1, 4, 3, 2, 5)
    for p in permutations(range(1, n + 1)):
        assert word_to_perm(reduced_word(p), n) == p
        assert len(reduced_word(p)) == length(p)
        assert compose(p, inverse(p)) == identity(n)
    for i in range(1, n):
        assert abs(length(mul_simple_right(w, i)) - length(w)) == 1


def test_tableau_parse_and_shape():
    t = Tableau.parse("1,2,7/3,4/5,6")
    assert t.shape == (3, 2, 2)
    assert str(t) == "1,2,7/3,4/5,6"
    assert t[(1, 3)] == 7 and t.node_of(5) == (3, 1)
    assert t.row_word() == (0, 0, 1, 1, 2, 2, 0)
    assert Tableau.from_row_word(t.row_word()) == t
    assert Tableau.from_json(t.to_json()) == t


def test_first_violation():
    assert Tableau.parse("1,3/2,4").first_violation() is None
    assert "row 1" in Tableau.parse("2,1/3,4").first_violation()
    assert "column" in Tableau.parse("3,4/1,2").first_violation()
    # repeated entries are rejected outright
    with pytest.raises(ValueError):
        Tableau.parse("1,2,5/2/4")


def test_row_words_are_lattice_words():
    for lam in [(3, 2, 1), (2, 2, 2), (4, 1, 1)]:
        rws = standard_row_words(lam)
        assert all(is_lattice(rw) for rw in rws)
        # the first basis element is t^lam and the order extends dominance
        assert rws[0] == superstandard(lam).row_word()
        ts = [Tableau.from_row_word(rw) for rw in rws]
        for a, s in enumerate(ts):
            for b, t in enumerate(ts):
                if s != t and dominance_leq_tableaux(s, t):
                    assert b < a


def test_d_of_acts_on_superstandard():
    for t in standard_tableaux((3, 2, 1)):
        assert apply(superstandard(t.shape), d_of(t)) == t


def test_james_murphy_tableau():
    assert james_murphy_tableau((3, 2, 2), (1, 3)) == Tableau.parse("1,2,7/3,4/5,6")
    assert james_murphy_tableau((3, 1, 1), (1, 3)) == Tableau.parse("1,2,5/3/4")


def test_restrict_and_t_leq():
    t = Tableau.parse("1,4,5/2/3")
    assert restrict(t, 3) == Tableau.parse("1/2/3")
    assert t_leq(t, 4, 5) == Tableau.parse("1,4,5/2/3")
    assert t_leq(t, 5, 5) == Tableau.parse("1,2,5/3/4")


def test_garnir_data():
    assert garnir_mu((3, 2, 2), 3, 2) == (3, 1, 2)
    assert garnir_tableau((3, 2, 2), 3, 2) == Tableau.parse("1,2,3/4,7/5,6")
    assert len(garnir_coset((3, 2), 2, 2)) == 6
    g = garnir_tableau((3, 2), 2, 2)
    assert g.is_row_standard()
    assert not g.is_standard()
