"""Exhaustive consistency checks, scaled by a maximum type weight."""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import comb
from typing import Callable

from .bijection import factorization_to_tree, tree_to_factorization
from .cactus import arrange, cactus_to_tree, is_arrangeable, tree_to_cactus
from .enumeration import (
    all_types, brute_force_classes, brute_force_words, count_by_profile,
    count_trees, enumerate_trees, oracle_cap,
)
from .genfunc import catalan_check, g_series, profile_counts, xi_series
from .perm_core import (
    Factorization, canonical_form, equivalent, evaluate, heads_and_tails,
    is_minimal_ncycle_factorization, parse_multiset,
)

__all__ = ["CheckResult", "run_checks", "CHECKS"]


@dataclass
class CheckResult:
    name: str
    passed: bool
    seconds: float
    detail: str = ""


def _types(W: int):
    return [a for w in range(W + 1) for a in all_types(w)]


def check_bijection(W: int) -> str:
    trees = 0
    for a in _types(W):
        for t in enumerate_trees(a):
            trees += 1
            f = tree_to_factorization(t)
            assert factorization_to_tree(f) == t, f"tree roundtrip failed for {t.to_json()}"
            assert is_minimal_ncycle_factorization(f)
    words = 0
    for a in _types(min(W, oracle_cap() - 1)):
        for f in brute_force_words(a, a.weight + 1):
            words += 1
            assert tree_to_factorization(factorization_to_tree(f)) == canonical_form(f), str(f)
    return f"{trees} trees, {words} words"


def check_counts(W: int) -> str:
    xi = xi_series(W)
    n_types = 0
    for a in _types(W):
        n_types += 1
        h = count_trees(a)
        assert xi.coefficient(x=a.as_dict()) == h, f"xi coefficient differs at {a}"
        assert sum(1 for _ in enumerate_trees(a)) == h, f"tree enumeration differs at {a}"
        if a.weight + 1 <= oracle_cap():
            assert len(brute_force_classes(a, a.weight + 1)) == h, f"oracle differs at {a}"
    return f"{n_types} types"


def check_catalan(W: int) -> str:
    top = max(8, W)
    for n in range(1, top + 1):
        s, c = catalan_check(n, top)
        assert s == c == comb(2 * n, n) // (n + 1), f"n={n}: {s} != {c}"
    return f"n <= {top}"


def check_profiles(W: int) -> str:
    g = g_series(W)
    assert g.swap_uv() == g, "g is not symmetric in u and v"
    assert g.at_uv_one() == xi_series(W), "g at u = v = 1 differs from xi"
    for a in _types(W):
        assert profile_counts(g, a) == count_by_profile(a), f"profiles differ at {a}"
    return f"{len(g)} terms"


def check_cactus(W: int) -> str:
    trees = 0
    for a in _types(W):
        for t in enumerate_trees(a):
            trees += 1
            c = tree_to_cactus(t)
            assert cactus_to_tree(c) == t, f"cactus roundtrip failed for {t.to_json()}"
            assert tree_to_cactus(cactus_to_tree(c)) == c
    classes = 0
    for a in _types(min(W, oracle_cap() - 1)):
        for f in brute_force_classes(a, a.weight + 1):
            classes += 1
            assert is_arrangeable(f.factors, f.n)
            assert equivalent(arrange(f.factors, f.n), f), str(f)
    return f"{trees} trees, {classes} classes"


def check_examples(W: int) -> str:
    f = Factorization.parse("(3 4)(1 2)(2 4)")
    assert str(evaluate(f)) == "(1 2 3 4)"
    _, _, prof = heads_and_tails(f)
    assert (prof.heads, prof.tails) == (2, 1)
    assert str(evaluate(Factorization.parse("(3 4)(1 2 4)"))) == "(1 2 3 4)"
    verdicts = [is_arrangeable(parse_multiset(s), 5) for s in
                ("{(1 4 5),(1 3),(2 4)}", "{(1 4 5),(1 2 3),(3 4)}", "{(1 4 5),(1 2),(2 3)}")]
    assert [d.violated for d in verdicts] == [(3,), (4,), ()]
    eight = arrange(parse_multiset("{(1 5 6 8),(2 3 5),(4 5),(6 7)}"), 8)
    assert equivalent(eight, Factorization.parse("(4 5)(2 3 5)(1 5 6 8)(6 7)"))
    return "worked examples"


CHECKS: list[tuple[str, Callable[[int], str]]] = [
    ("bijection roundtrips", check_bijection),
    ("triple count agreement", check_counts),
    ("catalan identity", check_catalan),
    ("head/tail generating function", check_profiles),
    ("cactus roundtrips and arrange", check_cactus),
    ("worked examples", check_examples),
]


def run_checks(W: int = 4) -> list[CheckResult]:
    if W < 1:
        raise ValueError("max weight must be >= 1")
    results = []
    for name, fn in CHECKS:
        start = time.perf_counter()
        try:
            detail = fn(W)
            ok = True
        except AssertionError as exc:
            detail, ok = str(exc) or "assertion failed", False
        results.append(CheckResult(name, ok, time.perf_counter() - start, detail))
    return results
