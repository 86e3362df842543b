from collections import Counter
from math import factorial, prod

import pytest

from cyclefact.enumeration import (
    OracleTooLarge, all_types, brute_force_classes, brute_force_words, count_by_profile,
    count_trees, enumerate_trees, oracle_cap,
)
from cyclefact.perm_core import (
    Factorization, HeadTailProfile, TypeVector, canonical_form, heads_and_tails,
)
from cyclefact.plane_tree import validate

from conftest import swap_closure, types_up_to

A = TypeVector.of


def planted_tree_count(alpha):
    """Ordered trees with prescribed child counts: (1/N) * N! / prod(k_i!)."""
    nodes = Counter({2 * j - 1: c for j, c in alpha.as_dict().items()})
    nodes[0] = 2 * alpha.weight + 1
    total = sum(nodes.values())
    return factorial(total) // prod(factorial(c) for c in nodes.values()) // total


def test_all_types():
    assert list(all_types(0)) == [TypeVector()]
    assert set(all_types(2)) == {A(a2=2), A(a3=1)}
    assert [sum(1 for _ in all_types(w)) for w in range(1, 7)] == [1, 2, 3, 5, 7, 11]


@pytest.mark.parametrize("alpha,count", [(A(), 1), (A(a2=1), 1), (A(a2=2), 3), (A(a2=3), 12),
                                         (A(a2=1, a3=1), 8)])
def test_count_examples(alpha, count):
    assert count_trees(alpha) == count
    assert sum(1 for _ in enumerate_trees(alpha)) == count


@pytest.mark.parametrize("k", range(1, 9))
def test_transposition_counts_are_ternary_trees(k):
    from math import comb
    assert count_trees(A(a2=k)) == comb(3 * k, k) // (2 * k + 1)


def test_count_matches_degree_sequence_formula():
    for a in types_up_to(8):
        assert count_trees(a) == planted_tree_count(a), a


def test_enumeration_is_valid_and_distinct():
    for a in types_up_to(5):
        trees = list(enumerate_trees(a))
        assert len(set(trees)) == len(trees) == count_trees(a)
        assert all(validate(t, a) for t in trees)


def test_enumeration_order_top_degree_ascending():
    degs = [len(t.root_child) for t in enumerate_trees(A(a2=2, a3=1))]
    assert degs == sorted(degs)


def test_enumeration_is_deterministic():
    a = A(a2=2, a3=1)
    assert list(enumerate_trees(a)) == list(enumerate_trees(a))


def test_brute_force_examples():
    got = {str(f) for f in brute_force_classes(A(a2=2), 3)}
    expected = {str(canonical_form(Factorization.parse(s, 3)))
                for s in ("(1 3)(1 2)", "(2 3)(1 3)", "(1 2)(2 3)")}
    assert got == expected
    assert [str(f) for f in brute_force_classes(A(a2=1), 2)] == ["(1 2)"]
    assert brute_force_classes(A(a2=1), 3) == []


def test_brute_force_agrees_with_swap_closure_grouping():
    for a in types_up_to(4, 1):
        words = list(brute_force_words(a, a.weight + 1))
        seen, classes = set(), 0
        for f in words:
            if f.factors in seen:
                continue
            classes += 1
            seen |= swap_closure(f.factors)
        assert seen == {f.factors for f in words}
        assert classes == len(brute_force_classes(a, a.weight + 1)) == count_trees(a)


def test_oracle_cap(monkeypatch):
    assert oracle_cap() == 7
    with pytest.raises(OracleTooLarge):
        brute_force_classes(A(a2=7), 8)
    monkeypatch.setenv("CYCLEFACT_ORACLE_CAP", "3")
    assert oracle_cap() == 3
    with pytest.raises(OracleTooLarge):
        list(brute_force_words(A(a2=3), 4))
    assert len(brute_force_classes(A(a2=2), 3)) == 3


def test_count_by_profile_examples():
    one = HeadTailProfile(((2, 1),), ((2, 1),))
    assert count_by_profile(A(a2=1)) == {one: 1}
    assert count_by_profile(A(a2=2)) == {one: 3}
    prof = count_by_profile(A(a2=3))
    _, _, p = heads_and_tails(Factorization.parse("(3 4)(1 2)(2 4)"))
    assert p == HeadTailProfile(((2, 2),), ((2, 1),))
    assert prof[p] >= 1
    assert sum(prof.values()) == 12


def test_count_by_profile_matches_oracle():
    for a in types_up_to(4, 1):
        oracle = Counter(heads_and_tails(f)[2] for f in brute_force_classes(a, a.weight + 1))
        assert count_by_profile(a) == dict(oracle)


def test_head_tail_symmetry():
    for a in types_up_to(5, 1):
        prof = count_by_profile(a)
        assert {p.swapped(): c for p, c in prof.items()} == prof
