"""
Generating and counting trees of a given type, plus the brute-force oracle.

A tree of type alpha splits at its top vertex, of degree 2(d+1), into
2d+1 subtrees whose types sum to alpha - e_d.  Counting and generation
both follow that split.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from functools import lru_cache
from typing import Iterator

from .perm_core import (
    Cycle, Factorization, HeadTailProfile, TypeVector, canonical_form,
)
from .plane_tree import LEAF, PlaneTree, tree_profile

__all__ = [
    "OracleTooLarge", "enumerate_trees", "count_trees", "count_by_profile",
    "brute_force_classes", "brute_force_words", "oracle_cap", "all_types",
]

DEFAULT_ORACLE_CAP = 7


class OracleTooLarge(RuntimeError):
    """The brute-force search was asked for more points than the cap allows."""


def oracle_cap() -> int:
    return int(os.environ.get("CYCLEFACT_ORACLE_CAP", DEFAULT_ORACLE_CAP))


def all_types(weight: int) -> Iterator[TypeVector]:
    """Every type vector of the given weight, ordered by the dense vector."""
    def parts(w, j):
        # counts for lengths >= j summing (with weights j-1) to w
        if w == 0:
            yield {}
            return
        if j - 1 > w:
            return
        for c in range(w // (j - 1), -1, -1):
            for rest in parts(w - c * (j - 1), j + 1):
                out = dict(rest)
                if c:
                    out[j] = c
                yield out
    for d in parts(weight, 2):
        yield TypeVector(tuple(d.items()))


# ─────────────────────────────────────────────
# Counting
# ─────────────────────────────────────────────

def _sub_vectors(beta: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    return itertools.product(*(range(b + 1) for b in beta))


def _minus(a, b):
    return tuple(x - y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def _count(alpha: tuple[int, ...]) -> int:
    if not any(alpha):
        return 1
    total = 0
    for d, a in enumerate(alpha, start=1):
        if a:
            rest = list(alpha)
            rest[d - 1] -= 1
            total += _forests(tuple(rest), 2 * d + 1)
    return total


@lru_cache(maxsize=None)
def _forests(beta: tuple[int, ...], k: int) -> int:
    """Ordered k-tuples of trees whose types sum to beta."""
    if k == 1:
        return _count(beta)
    return sum(_count(g) * _forests(_minus(beta, g), k - 1) for g in _sub_vectors(beta))


def _trim(dense: tuple[int, ...]) -> tuple[int, ...]:
    dense = list(dense)
    while dense and dense[-1] == 0:
        dense.pop()
    return tuple(dense)


def count_trees(alpha: TypeVector) -> int:
    return _count(_trim(alpha.dense(alpha.max_length - 1)))


# ─────────────────────────────────────────────
# Generation
# ─────────────────────────────────────────────

def _compositions(beta: tuple[int, ...], k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    if k == 1:
        yield (beta,)
        return
    for g in _sub_vectors(beta):
        for rest in _compositions(_minus(beta, g), k - 1):
            yield (g,) + rest


def _nodes(alpha: tuple[int, ...]) -> Iterator[tuple]:
    if not any(alpha):
        yield LEAF
        return
    for d, a in enumerate(alpha, start=1):
        if not a:
            continue
        rest = list(alpha)
        rest[d - 1] -= 1
        for parts in _compositions(tuple(rest), 2 * d + 1):
            for children in itertools.product(*(list(_nodes(p)) for p in parts)):
                yield tuple(children)


def enumerate_trees(alpha: TypeVector) -> Iterator[PlaneTree]:
    """Every plane tree of type ``alpha`` exactly once.

    Order: top-vertex degree ascending, then composition order of the
    subtree types, then subtree order.
    """
    for node in _nodes(_trim(alpha.dense(alpha.max_length - 1))):
        yield PlaneTree(node)


def count_by_profile(alpha: TypeVector) -> dict[HeadTailProfile, int]:
    cnt = Counter(tree_profile(t) for t in enumerate_trees(alpha))
    return dict(sorted(cnt.items(), key=lambda kv: kv[0].sort_key()))


# ─────────────────────────────────────────────
# Brute-force oracle
# ─────────────────────────────────────────────

def _cycles_on(n: int, length: int, increasing_only: bool) -> list[tuple[Cycle, tuple[int, ...]]]:
    out = []
    for subset in itertools.combinations(range(1, n + 1), length):
        if increasing_only:
            orders = [subset]
        else:
            first, rest = subset[0], subset[1:]
            orders = [(first,) + p for p in itertools.permutations(rest)]
        for els in orders:
            c = Cycle(els)
            m = c.mapping()
            out.append((c, tuple(m.get(x, x) for x in range(n + 1))))
    return out


def brute_force_words(alpha: TypeVector, n: int, *, increasing_only: bool = True,
                      cap: int | None = None) -> Iterator[Factorization]:
    """Every word of cycles of type ``alpha`` on {1..n} evaluating to (1 2 ... n).

    With ``increasing_only=False`` all cycles are tried, not only increasing ones.
    """
    cap = oracle_cap() if cap is None else cap
    if n > cap:
        raise OracleTooLarge(f"brute force refused for n={n} > cap {cap}")
    if alpha.weight != n - 1:
        return
    target = tuple([0] + list(range(2, n + 1)) + [1]) if n else (0,)
    pools = {j: _cycles_on(n, j, increasing_only) for j in alpha.as_dict()}
    remaining = alpha.as_dict()
    word: list[Cycle] = []  # right to left

    def dfs(prod):
        if not any(remaining.values()):
            if prod == target:
                yield Factorization(n, tuple(reversed(word)))
            return
        for j in sorted(remaining):
            if not remaining[j]:
                continue
            remaining[j] -= 1
            for c, img in pools[j]:
                word.append(c)
                yield from dfs(tuple(img[x] for x in prod))
                word.pop()
            remaining[j] += 1

    yield from dfs(tuple(range(n + 1)))


@lru_cache(maxsize=64)
def _classes(alpha: TypeVector, n: int, increasing_only: bool, cap: int) -> tuple[Factorization, ...]:
    reps = {canonical_form(f) for f in brute_force_words(alpha, n, increasing_only=increasing_only, cap=cap)}
    return tuple(sorted(reps, key=lambda f: [c.sort_key for c in f.factors]))


def brute_force_classes(alpha: TypeVector, n: int, *, increasing_only: bool = True,
                        cap: int | None = None) -> list[Factorization]:
    """Canonical representatives of every class found by exhaustive search."""
    cap = oracle_cap() if cap is None else cap
    if n > cap:
        raise OracleTooLarge(f"brute force refused for n={n} > cap {cap}")
    return list(_classes(alpha, n, increasing_only, cap))
