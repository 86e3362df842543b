"""Acceptance gate.  conftest prints one PASS/FAIL line per criterion after the run."""

from collections import Counter
from math import comb

from cyclefact.bijection import factorization_to_tree, tree_to_factorization
from cyclefact.cactus import arrange, cactus_to_tree, is_arrangeable, tree_to_cactus
from cyclefact.enumeration import (
    brute_force_classes, brute_force_words, count_by_profile, count_trees, enumerate_trees,
)
from cyclefact.genfunc import (
    catalan_check, f_series, g_from_f, g_symmetric, g_series, profile_counts,
    single_vertex_correction, xi_series,
)
from cyclefact.perm_core import (
    Factorization, Permutation, TypeVector, canonical_form, equivalent, evaluate,
    heads_and_tails, parse_multiset,
)

from conftest import types_up_to


def test_criterion_1_bijection_roundtrip():
    trees = 0
    for a in types_up_to(5):
        for t in enumerate_trees(a):
            f = tree_to_factorization(t)
            assert factorization_to_tree(f) == t
            trees += 1
        for f in brute_force_words(a, a.weight + 1):
            assert tree_to_factorization(factorization_to_tree(f)) == canonical_form(f)
    assert trees == sum(count_trees(a) for a in types_up_to(5))


def test_criterion_2_triple_count():
    A = TypeVector.of
    xi = xi_series(5)
    for a in types_up_to(5):
        g = xi.coefficient(x=a.as_dict())
        t = count_trees(a)
        o = len(brute_force_classes(a, a.weight + 1)) if a.weight else 1
        assert g == t == o, (str(a), g, t, o)
    assert count_trees(A(a2=2)) == 3
    assert count_trees(A(a2=3)) == 12
    assert count_trees(A(a2=1, a3=1)) == 8


def test_criterion_3_catalan():
    for n in range(1, 9):
        total, cat = catalan_check(n, 8)
        assert cat == comb(2 * n, n) // (n + 1)
        assert total == cat, (n, total, cat)


def test_criterion_4_heads_tails():
    W = 4
    f, fhat = f_series(W)
    corr = single_vertex_correction(W)
    assert g_from_f(f) + corr == g_symmetric(f, fhat) + corr
    g = g_series(W)
    assert g.swap_uv() == g
    assert g.at_uv_one() == xi_series(W)
    for a in types_up_to(W):
        assert profile_counts(g, a) == count_by_profile(a), str(a)


def test_criterion_5_worked_examples():
    f = Factorization.parse("(3 4)(1 2)(2 4)")
    assert evaluate(f) == Permutation.ncycle(4)
    _, _, prof = heads_and_tails(f)
    assert (prof.heads, prof.tails) == (2, 1)
    assert evaluate(Factorization.parse("(3 4)(1 2 4)")) == Permutation.ncycle(4)
    verdicts = [is_arrangeable(parse_multiset(s), 5) for s in
                ("{(1 4 5),(1 3),(2 4)}", "{(1 4 5),(1 2 3),(3 4)}", "{(1 4 5),(1 2),(2 3)}")]
    assert [bool(d) for d in verdicts] == [False, False, True]
    assert [d.violated for d in verdicts] == [(3,), (4,), ()]
    eight = arrange(parse_multiset("{(4 5),(2 3 5),(1 5 6 8),(6 7)}"), 8)
    assert equivalent(eight, Factorization.parse("(4 5)(2 3 5)(1 5 6 8)(6 7)"))


def test_criterion_6_increasing_and_distinct():
    for a in types_up_to(5, 1):
        classes = brute_force_classes(a, a.weight + 1, increasing_only=False)
        assert len(classes) == count_trees(a)
        assert all(c.is_increasing() for f in classes for c in f.factors)
        multisets = Counter(tuple(sorted(f.factors)) for f in classes)
        assert all(v == 1 for v in multisets.values())


def test_criterion_7_cactus():
    for a in types_up_to(4):
        for t in enumerate_trees(a):
            assert cactus_to_tree(tree_to_cactus(t)) == t
    for a in types_up_to(5, 1):
        for f in brute_force_words(a, a.weight + 1):
            assert arrange(f.factors, f.n) == canonical_form(f)
