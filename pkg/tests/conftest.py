"""Shared oracles, independent of the package's canonical forms."""

from collections import deque

import pytest

from cyclefact.enumeration import all_types, brute_force_words


def as_map(cycle):
    els = cycle.elements
    return {a: els[(i + 1) % len(els)] for i, a in enumerate(els)}


def products_equal(a, b):
    ma, mb = as_map(a), as_map(b)
    pts = set(ma) | set(mb)
    return all(ma.get(mb.get(x, x), mb.get(x, x)) == mb.get(ma.get(x, x), ma.get(x, x)) for x in pts)


def swap_closure(factors):
    """Every word reachable by swapping adjacent commuting factors."""
    start = tuple(factors)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in range(len(w) - 1):
            if products_equal(w[i], w[i + 1]):
                v = w[:i] + (w[i + 1], w[i]) + w[i + 2:]
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    return seen


def oracle_words(max_weight):
    """(alpha, word) for every minimal factorization word with <alpha> <= max_weight."""
    for w in range(1, max_weight + 1):
        for a in all_types(w):
            for f in brute_force_words(a, w + 1):
                yield a, f


def types_up_to(max_weight, min_weight=0):
    return [a for w in range(min_weight, max_weight + 1) for a in all_types(w)]


@pytest.fixture(scope="session")
def words_n6():
    return list(oracle_words(5))


def pytest_terminal_summary(terminalreporter):
    reports = [r for key in ("passed", "failed") for r in terminalreporter.stats.get(key, [])
               if getattr(r, "when", "") == "call" and "test_acceptance.py" in r.nodeid]
    if not reports:
        return
    terminalreporter.section("acceptance criteria")
    for r in sorted(reports, key=lambda r: r.nodeid):
        name = r.nodeid.split("::")[-1]
        terminalreporter.write_line(f"{'PASS' if r.passed else 'FAIL'}  {name}  ({r.duration:.2f}s)")
