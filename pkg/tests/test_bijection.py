import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from cyclefact.bijection import (
    boundary_walk, contour_edges, factorization_to_tree, tree_to_factorization,
)
from cyclefact.enumeration import enumerate_trees
from cyclefact.perm_core import (
    Factorization, canonical_form, equivalent, evaluate, is_minimal_ncycle_factorization,
)
from cyclefact.plane_tree import LEAF, PlaneTree, boundary_leaves, validate

from conftest import swap_closure, types_up_to

V = (LEAF, LEAF, LEAF)


def fact(s, n=None):
    return Factorization.parse(s, n)


def test_single_transposition():
    t = factorization_to_tree(fact("(1 2)"))
    assert t == PlaneTree(V)
    assert tree_to_factorization(t) == fact("(1 2)")


def test_leaf_tree_is_empty_factorization():
    assert tree_to_factorization(PlaneTree()) == Factorization(1, ())


def test_commuting_words_share_a_tree():
    a = factorization_to_tree(fact("(3 4)(1 2)(2 4)"))
    b = factorization_to_tree(fact("(1 2)(3 4)(2 4)"))
    assert a == b
    assert validate(a, a.degree_census())
    assert a.degree_census().weight == 3


def test_three_cycle_example():
    f = fact("(3 4)(1 2 4)")
    t = factorization_to_tree(f)
    assert sorted(len(node) for _, node in t.internal_vertices()) == [3, 5]
    assert equivalent(tree_to_factorization(t), f)


def test_non_commuting_pair_gives_distinct_trees():
    assert factorization_to_tree(fact("(1 3)(1 2)")) != factorization_to_tree(fact("(2 3)(1 3)"))


def test_eight_point_roundtrip():
    f = fact("(4 5)(2 3 5)(1 5 6 8)(6 7)")
    t = factorization_to_tree(f)
    assert t.n == 8
    assert equivalent(tree_to_factorization(t), f)


def test_rejects_non_minimal():
    with pytest.raises(ValueError):
        factorization_to_tree(fact("(2 3)(1 2)", 3))


ALL_TREES = [t for a in types_up_to(5) for t in enumerate_trees(a)]


def test_roundtrip_tree_first():
    for t in ALL_TREES:
        f = tree_to_factorization(t)
        assert is_minimal_ncycle_factorization(f)
        assert all(c.is_increasing() for c in f.factors)
        assert factorization_to_tree(f) == t


def test_roundtrip_factorization_first(words_n6):
    for _, f in words_n6:
        t = factorization_to_tree(f)
        assert t.degree_census().weight == f.n - 1
        assert tree_to_factorization(t) == canonical_form(f)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, len(ALL_TREES) - 1), st.integers(0, 2**32))
def test_random_tiebreak_stays_in_class(i, seed):
    t = ALL_TREES[i]
    f = tree_to_factorization(t, rng=random.Random(seed))
    assert canonical_form(f) == tree_to_factorization(t)
    assert factorization_to_tree(f) == t


@settings(max_examples=30, deadline=None)
@given(st.integers(0, len(ALL_TREES) - 1), st.randoms())
def test_constant_on_swap_class(i, rnd):
    f = tree_to_factorization(ALL_TREES[i])
    cls = sorted(swap_closure(f.factors), key=lambda w: [c.sort_key for c in w])
    w = rnd.choice(cls)
    assert factorization_to_tree(Factorization(f.n, w)) == ALL_TREES[i]


def test_boundary_walk_order():
    assert boundary_walk(PlaneTree()) == ["t1", "h1"]
    assert boundary_walk(PlaneTree(V)) == ["t1", "h2", "t2", "h1"]
    t = factorization_to_tree(fact("(4 5)(2 3 5)(1 5 6 8)(6 7)"))
    n = t.n
    expected = ["t1"] + [f"{c}{k}" for k in range(2, n + 1) for c in "ht"] + ["h1"]
    assert boundary_walk(t) == expected


def test_walk_visits_every_edge_twice():
    for t in ALL_TREES[:400]:
        walk = contour_edges(t)
        undirected = Counter(frozenset(e) for e in walk)
        assert len(walk) == 2 * t.n_edges
        assert set(undirected.values()) == {2}
        assert len(undirected) == t.n_edges


def test_walk_leaves_are_all_leaves_once():
    for t in ALL_TREES[:400]:
        assert sorted(boundary_walk(t)) == sorted(lab for _, lab in boundary_leaves(t))


def test_products_are_the_long_cycle():
    for t in ALL_TREES[:400]:
        f = tree_to_factorization(t)
        assert evaluate(f)(f.n) == 1
