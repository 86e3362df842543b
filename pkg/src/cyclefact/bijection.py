"""
Minimal factorizations of (1 2 ... n) up to commutation  <->  plane trees.

Forward: factors are processed right to left.  Every point k owns one free
head end of an edge labelled k (initially the edge leaving leaf t_k).  A
factor (k1 ... km) joins the free heads of k1..km at a new vertex and emits
fresh outgoing edges, arranged counterclockwise as
out k1, in k1, out k2, in k2, ...  The free heads left at the end are the
leaves h_k, and the tree is rooted at h1.

Backward: repeatedly delete a vertex all of whose in slots are leaves,
reading the factor off the in-slot labels.  Out edges that led to other
vertices become new t-leaves carrying the label of the in slot that
follows them counterclockwise.
"""

from __future__ import annotations

import random

from .perm_core import (
    Cycle, Factorization, canonical_form, is_minimal_ncycle_factorization,
)
from .plane_tree import LEAF, PlaneTree, boundary_leaves, ccw_graph, vertex_types

__all__ = ["factorization_to_tree", "tree_to_factorization", "boundary_walk", "contour_edges"]


def factorization_to_tree(f: Factorization) -> PlaneTree:
    if not is_minimal_ncycle_factorization(f):
        raise ValueError(f"{f} is not a minimal factorization of the {f.n}-cycle")
    n = f.n
    # rot[v]: counterclockwise list of edge ids at vertex v; ends[e] = [tail, head]
    ends: list[list] = []
    rot: dict[tuple, list[int]] = {}
    free_head = {}
    for k in range(1, n + 1):
        e = len(ends)
        ends.append([("t", k), None])
        rot[("t", k)] = [e]
        free_head[k] = e
    for i, cyc in enumerate(reversed(f.factors)):
        v = ("v", i)
        order = []
        for k in cyc.elements:
            incoming = free_head[k]
            ends[incoming][1] = v
            out = len(ends)
            ends.append([v, None])
            free_head[k] = out
            order += [out, incoming]
        rot[v] = order
    for k in range(1, n + 1):
        ends[free_head[k]][1] = ("h", k)
        rot[("h", k)] = [free_head[k]]

    def other(e, v):
        a, b = ends[e]
        return b if a == v else a

    def build(v, via):
        if v[0] != "v":
            return LEAF
        order = rot[v]
        i = order.index(via)
        return tuple(build(other(e, v), e) for e in order[i + 1:] + order[:i])

    e0 = rot[("h", 1)][0]
    tree = PlaneTree(build(other(e0, ("h", 1)), e0))

    # the boundary order must reproduce the construction's leaf labels
    expected = [f"{'t' if i % 2 else 'h'}{i // 2 + 1}" for i in range(2 * n)]
    if [lab for _, lab in boundary_leaves(tree)] != expected:  # pragma: no cover
        raise AssertionError("leaf labelling does not match the boundary order")
    return tree


def tree_to_factorization(tree: PlaneTree, rng: random.Random | None = None) -> Factorization:
    """Read a factorization off ``tree`` by repeated deletion.

    Among deletable vertices the one with the smallest t-label is taken,
    unless ``rng`` is given, in which case the choice is random.  The
    result is returned in canonical form.
    """
    g = ccw_graph(tree)
    types = vertex_types(tree)
    n = g.n
    if n == 1:
        return Factorization(1, ())

    # in_label[v][s]: current t-label at in slot s of vertex v (None while pending)
    slots: dict = {}
    in_label: dict = {}
    for v, nbrs in g.rot.items():
        if v[0] != "v":
            continue
        in_parity = 1 if types[v[1]] == "t" else 0  # position in rot, parent at 0
        slots[v] = [s for s in range(len(nbrs)) if s % 2 == in_parity]
        in_label[v] = {}
        for s in slots[v]:
            w = nbrs[s]
            if w[0] == "leaf":
                i = w[1]
                if i % 2 == 0:  # pragma: no cover - guaranteed by slot parity
                    raise ValueError("in slot adjacent to an h-leaf")
                in_label[v][s] = i // 2 + 1
            else:
                in_label[v][s] = None

    factors = []  # right to left
    alive = set(slots)
    while alive:
        ready = [v for v in alive if all(x is not None for x in in_label[v].values())]
        if not ready:  # pragma: no cover - pigeonhole
            raise AssertionError("no deletable vertex")
        if rng is None:
            v = min(ready, key=lambda u: min(in_label[u].values()))
        else:
            v = rng.choice(sorted(ready))
        nbrs = g.rot[v]
        deg = len(nbrs)
        factors.append(Cycle(tuple(in_label[v][s] for s in slots[v])))
        for s in range(deg):
            if s in in_label[v]:
                continue
            w = nbrs[s]
            if w[0] == "v" and w in alive:
                # out edge: the far end becomes a t-leaf labelled like the next in slot
                label = in_label[v][(s + 1) % deg]
                ws = g.rot[w].index(v)
                in_label[w][ws] = label
        alive.remove(v)
    return canonical_form(Factorization(n, tuple(reversed(factors))))


def contour_edges(tree: PlaneTree) -> list[tuple[tuple, tuple]]:
    """Directed edges in the order of the counterclockwise walk around the tree, from h1."""
    g = ccw_graph(tree)
    root = ("leaf", 0)
    walk = []
    prev, cur = root, g.rot[root][0]
    walk.append((prev, cur))
    while not (cur == root):
        nbrs = g.rot[cur]
        nxt = nbrs[(nbrs.index(prev) + 1) % len(nbrs)]
        prev, cur = cur, nxt
        walk.append((prev, cur))
    return walk


def boundary_walk(tree: PlaneTree) -> list[str]:
    """Leaf labels in walk order t1, h2, t2, ..., hn, tn, h1."""
    labels = {i: lab for i, (_, lab) in enumerate(boundary_leaves(tree))}
    return [labels[b[1]] for _, b in contour_edges(tree) if b[0] == "leaf"]
