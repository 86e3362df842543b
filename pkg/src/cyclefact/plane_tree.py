"""
Rooted plane trees whose root is a leaf and whose internal vertices have
even degree 2j >= 4.

A node is either ``LEAF`` (the empty tuple) or a tuple of its children.
An internal vertex of degree 2j has 2j - 1 children.  Child order is the
counterclockwise order around the vertex, starting just after the edge
towards the root.  Leaves are therefore labelled h1, t1, h2, t2, ... in
depth-first order, the root being h1.

Slots.  Around a vertex the edges alternate between *out* (towards an
h-leaf) and *in* (towards a t-leaf).  The root edge is an out edge of the
top vertex.  A vertex is of *t-type* when the edge towards the root is an
out edge; then its children at even positions are in slots.  For an
h-type vertex the even positions are out slots.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Union

from .perm_core import HeadTailProfile, TypeVector

__all__ = [
    "LEAF", "Node", "PlaneTree", "LeafLabeling", "boundary_leaves", "validate",
    "tree_profile", "vertex_types", "CcwGraph", "ccw_graph",
]

LEAF: tuple = ()
Node = Union[tuple, "tuple[Node, ...]"]

Path = tuple[int, ...]
ROOT_PATH: Path = ()


def _check_node(node, depth=0):
    if not isinstance(node, tuple):
        raise TypeError(f"tree nodes are tuples, got {type(node).__name__}")
    if node == LEAF:
        return
    if len(node) < 3 or len(node) % 2 == 0:
        raise ValueError(f"internal vertex with {len(node)} children has odd degree or degree 2")
    for child in node:
        _check_node(child, depth + 1)


@dataclass(frozen=True)
class PlaneTree:
    """A rooted plane tree; ``root_child`` is the node hanging off the root leaf h1."""
    root_child: Node = LEAF

    def __post_init__(self):
        _check_node(self.root_child)

    # -- structure --------------------------------------------------------

    def internal_vertices(self) -> Iterator[tuple[Path, tuple]]:
        """Internal vertices in depth-first order, with their paths."""
        stack = [((0,), self.root_child)]
        while stack:
            path, node = stack.pop()
            if node == LEAF:
                continue
            yield path, node
            for i in reversed(range(len(node))):
                stack.append((path + (i,), node[i]))

    def degree_census(self) -> TypeVector:
        cnt = Counter((len(node) + 1) // 2 for _, node in self.internal_vertices())
        return TypeVector(tuple(cnt.items()))

    @property
    def n_leaves(self) -> int:
        return 2 + sum(len(node) - 1 for _, node in self.internal_vertices())

    @property
    def n(self) -> int:
        """Number of points of the cycle this tree encodes."""
        return self.n_leaves // 2

    @property
    def n_vertices(self) -> int:
        return self.n_leaves + sum(1 for _ in self.internal_vertices())

    @property
    def n_edges(self) -> int:
        return 1 + sum(len(node) for _, node in self.internal_vertices())

    def node_at(self, path: Path) -> Node:
        node = self.root_child
        for i in path[1:]:
            node = node[i]
        return node

    # -- serialization ----------------------------------------------------

    def to_json(self) -> str:
        return json.dumps({"root_child": _node_to_obj(self.root_child)}, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "PlaneTree":
        obj = json.loads(text)
        if not isinstance(obj, dict) or set(obj) != {"root_child"}:
            raise ValueError('tree JSON must be an object {"root_child": ...}')
        return cls(_obj_to_node(obj["root_child"]))

    def to_dot(self) -> str:
        labels = dict(boundary_leaves(self))
        lines = ["graph tree {", '\tnode [shape=point];']
        names = {ROOT_PATH: "h1"}
        lines.append('\t"h1" [shape=plaintext, label="h1 (root)"];')
        for path, _ in self.internal_vertices():
            names[path] = "v" + "_".join(map(str, path))
            lines.append(f'\t"{names[path]}" [shape=circle, label="", width=0.15];')
        for path, node in self.internal_vertices():
            for i, child in enumerate(node):
                cp = path + (i,)
                if child == LEAF:
                    names[cp] = labels[cp]
                    lines.append(f'\t"{labels[cp]}" [shape=plaintext, label="{labels[cp]}"];')
        if self.root_child == LEAF:
            names[(0,)] = "t1"
            lines.append('\t"t1" [shape=plaintext, label="t1"];')
        lines.append(f'\t"h1" -- "{names[(0,)]}";')
        for path, node in self.internal_vertices():
            for i in range(len(node)):
                lines.append(f'\t"{names[path]}" -- "{names[path + (i,)]}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _node_to_obj(node):
    if node == LEAF:
        return "leaf"
    return [_node_to_obj(c) for c in node]


def _obj_to_node(obj):
    if obj == "leaf":
        return LEAF
    if isinstance(obj, list) and obj:
        return tuple(_obj_to_node(c) for c in obj)
    raise ValueError(f'tree JSON nodes are "leaf" or a non-empty list, got {obj!r}')


# ─────────────────────────────────────────────
# Labels, types and profiles
# ─────────────────────────────────────────────

LeafLabeling = list[tuple[Path, str]]


def boundary_leaves(tree: PlaneTree) -> LeafLabeling:
    """Leaves in counterclockwise boundary order, labelled h1, t1, h2, t2, ...

    The root leaf has path ``()``; the node under it has path ``(0,)``.
    """
    leaves: list[Path] = [ROOT_PATH]
    stack = [((0,), tree.root_child)]
    while stack:
        path, node = stack.pop()
        if node == LEAF:
            leaves.append(path)
            continue
        for i in reversed(range(len(node))):
            stack.append((path + (i,), node[i]))
    if len(leaves) % 2:
        raise ValueError(f"odd number of leaves ({len(leaves)})")
    return [(p, ("t" if i % 2 else "h") + str(i // 2 + 1)) for i, p in enumerate(leaves)]


def vertex_types(tree: PlaneTree) -> dict[Path, str]:
    """'t' or 'h' for each internal vertex, propagated from the root edge."""
    types = {}
    stack = [((0,), tree.root_child, "t")]
    while stack:
        path, node, kind = stack.pop()
        if node == LEAF:
            continue
        types[path] = kind
        flip = "h" if kind == "t" else "t"
        for i, child in enumerate(node):
            # even children of a t-type vertex are in slots; the child at the
            # other end of an in edge sees it as out, i.e. is t-type again
            stack.append((path + (i,), child, kind if i % 2 == 0 else flip))
    return types


def validate(tree: PlaneTree, alpha: TypeVector) -> bool:
    return tree.degree_census() == alpha and tree.n_leaves == 2 * (alpha.weight + 1)


def tree_profile(tree: PlaneTree) -> HeadTailProfile:
    """Count tails (all in slots are leaves) and heads (all out slots are leaves).

    The root edge counts as a free out slot of the top vertex.
    """
    h: Counter = Counter()
    t: Counter = Counter()
    types = vertex_types(tree)
    for path, node in tree.internal_vertices():
        j = (len(node) + 1) // 2
        parent_is_leaf = path == (0,)
        even_free = all(c == LEAF for c in node[0::2])
        odd_free = all(c == LEAF for c in node[1::2])
        if types[path] == "t":
            # in slots: even children; out slots: parent + odd children
            if even_free:
                t[j] += 1
            if parent_is_leaf and odd_free:
                h[j] += 1
        else:
            # out slots: even children; in slots: parent + odd children
            if even_free:
                h[j] += 1
    return HeadTailProfile(tuple(h.items()), tuple(t.items()))


# ─────────────────────────────────────────────
# Unrooted view with counterclockwise rotations
# ─────────────────────────────────────────────

@dataclass
class CcwGraph:
    """Vertices with counterclockwise neighbour lists.

    Vertex ids: ``("leaf", i)`` for the i-th boundary leaf (0 is the root h1)
    and ``("v", path)`` for internal vertices.  ``rot[v]`` lists neighbours in
    counterclockwise order starting with the edge towards the root.
    """
    rot: dict[tuple, list[tuple]]
    leaf_index: dict[Path, int]

    @property
    def n(self) -> int:
        return len(self.leaf_index) // 2


def ccw_graph(tree: PlaneTree) -> CcwGraph:
    leaf_index = {p: i for i, (p, _) in enumerate(boundary_leaves(tree))}

    def vid(path, node):
        return ("leaf", leaf_index[path]) if node == LEAF else ("v", path)

    root = ("leaf", 0)
    top = vid((0,), tree.root_child)
    rot: dict[tuple, list[tuple]] = {root: [top]}
    if tree.root_child == LEAF:
        rot[top] = [root]
    for path, node in tree.internal_vertices():
        parent = root if path == (0,) else ("v", path[:-1])
        me = ("v", path)
        rot[me] = [parent]
        for i, child in enumerate(node):
            cid = vid(path + (i,), child)
            rot[me].append(cid)
            if child == LEAF:
                rot[cid] = [me]
    return CcwGraph(rot, leaf_index)
