"""
Cycles drawn as polygons inscribed in a circle, and their trees.

Points 1..n sit counterclockwise on a circle; an increasing cycle is drawn
as the convex polygon on its points (a transposition as a doubled chord).
A set of cycles can be arranged into a factorization of (1 2 ... n)
exactly when the drawing is a cactus: every point is used, the cycles are
increasing, no two polygons cross, and the union is simply connected.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable

from .bijection import tree_to_factorization
from .perm_core import Cycle, Factorization
from .plane_tree import LEAF, PlaneTree, ccw_graph

__all__ = [
    "Cactus", "Arrangeability", "NotArrangeable", "is_noncrossing",
    "is_arrangeable", "arrange", "cactus_to_tree", "tree_to_cactus",
]

CONDITIONS = {
    1: "every point 1..n lies on some cycle",
    2: "every cycle is increasing",
    3: "no two polygons cross",
    4: "the union of the polygons is simply connected",
}


@dataclass(frozen=True)
class Cactus:
    n: int
    polygons: tuple[Cycle, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "polygons", tuple(sorted(self.polygons)))

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "polygons": [list(p.elements) for p in self.polygons]},
                          separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "Cactus":
        obj = json.loads(text)
        if not isinstance(obj, dict) or set(obj) != {"n", "polygons"}:
            raise ValueError('cactus JSON must be {"n": ..., "polygons": [...]}')
        return cls(int(obj["n"]), tuple(Cycle(tuple(p)) for p in obj["polygons"]))

    def _position(self, j: int, radius: float = 1.0) -> tuple[float, float]:
        # point 1 at the top, counterclockwise
        a = math.pi / 2 + 2 * math.pi * (j - 1) / self.n
        return radius * math.cos(a), radius * math.sin(a)

    def to_dot(self) -> str:
        lines = ["graph cactus {", "\tlayout=neato;", "\tnode [shape=circle, width=0.3, fixedsize=true];"]
        for j in range(1, self.n + 1):
            x, y = self._position(j, 2.0)
            lines.append(f'\t"{j}" [pos="{x:.4f},{y:.4f}!"];')
        for p in self.polygons:
            els = p.elements
            if len(els) == 2:
                lines.append(f'\t"{els[0]}" -- "{els[1]}";')
                lines.append(f'\t"{els[0]}" -- "{els[1]}";')
            else:
                for a, b in zip(els, els[1:] + els[:1]):
                    lines.append(f'\t"{a}" -- "{b}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_svg(self, size: int = 240) -> str:
        r = size * 0.4
        c = size / 2

        def xy(j):
            x, y = self._position(j, r)
            return c + x, c - y

        out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}">',
               f'<circle cx="{c}" cy="{c}" r="{r:.2f}" fill="none" stroke="#999"/>']
        for p in self.polygons:
            pts = [xy(j) for j in p.elements]
            if len(pts) == 2:
                (x1, y1), (x2, y2) = pts
                mx, my = (x1 + x2) / 2, (y1 + y2) / 2
                dx, dy = (y2 - y1) * 0.1, (x1 - x2) * 0.1
                for s in (1, -1):
                    out.append(f'<path d="M{x1:.2f},{y1:.2f} Q{mx + s * dx:.2f},{my + s * dy:.2f} '
                               f'{x2:.2f},{y2:.2f}" fill="none" stroke="black"/>')
            else:
                coords = " ".join(f"{x:.2f},{y:.2f}" for x, y in pts)
                out.append(f'<polygon points="{coords}" fill="#ddd" stroke="black"/>')
        for j in range(1, self.n + 1):
            x, y = xy(j)
            out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3"/>')
            lx, ly = self._position(j, r + 14)
            out.append(f'<text x="{c + lx:.2f}" y="{c - ly + 4:.2f}" text-anchor="middle" '
                       f'font-size="12">{j}</text>')
        out.append("</svg>")
        return "\n".join(out) + "\n"


# ─────────────────────────────────────────────
# Arrangeability
# ─────────────────────────────────────────────

def _edges(els: tuple[int, ...]) -> list[tuple[int, int]]:
    if len(els) == 2:
        return [tuple(sorted(els))]
    return [tuple(sorted(p)) for p in zip(els, els[1:] + els[:1])]


def _chords_cross(e: tuple[int, int], f: tuple[int, int]) -> bool:
    p, q = e
    r, s = f
    if len({p, q, r, s}) < 4:
        return False
    return (p < r < q) != (p < s < q)


def is_noncrossing(a: Cycle, b: Cycle, n: int) -> bool:
    """Whether the inscribed polygons of ``a`` and ``b`` can be drawn without crossing.

    Two sides cross exactly when their four endpoints are distinct and
    interleave around the circle.
    """
    for c in (a, b):
        if not c.is_increasing():
            raise ValueError(f"{c} is not increasing")
        if max(c.elements) > n:
            raise ValueError(f"{c} has points outside 1..{n}")
    return not any(_chords_cross(e, f) for e in _edges(a.elements) for f in _edges(b.elements))


@dataclass(frozen=True)
class Arrangeability:
    violated: tuple[int, ...]
    covers: bool
    sizes_match: bool

    @property
    def ok(self) -> bool:
        return not self.violated

    def __bool__(self) -> bool:
        return self.ok

    @property
    def first_failure(self) -> int | None:
        return self.violated[0] if self.violated else None

    def describe(self) -> str:
        if self.ok:
            return "arrangeable"
        conds = ", ".join(f"condition {k} ({CONDITIONS[k]})" for k in self.violated)
        return f"not arrangeable: {conds}"


class NotArrangeable(ValueError):
    def __init__(self, diagnosis: Arrangeability):
        super().__init__(diagnosis.describe())
        self.diagnosis = diagnosis


def _components(cycles: list[Cycle]) -> int:
    parent: dict = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, c in enumerate(cycles):
        find(("c", i))
        for j in c.elements:
            parent[find(("c", i))] = find(("p", j))
    return len({find(x) for x in list(parent)})


def is_arrangeable(cycles: Iterable[Cycle], n: int) -> Arrangeability:
    cycles = list(cycles)
    points = {j for c in cycles for j in c.elements}
    covers = points == set(range(1, n + 1))
    sizes_match = 1 + sum(len(c) - 1 for c in cycles) == n
    violated = []
    if not covers:
        violated.append(1)
    if not all(c.is_increasing() for c in cycles):
        violated.append(2)
    polys = [Cycle(tuple(sorted(c.elements))) for c in cycles]
    if any(not is_noncrossing(polys[i], polys[k], max(points, default=n))
           for i in range(len(polys)) for k in range(i + 1, len(polys))):
        violated.append(3)
    # connected incidence graph (cycles <-> points) that is a tree
    tree_like = (_components(cycles) <= 1
                 and sum(len(c) - 1 for c in cycles) == len(points) - 1)
    if n == 1 and not cycles:
        return Arrangeability((), True, True)
    if not tree_like:
        violated.append(4)
    return Arrangeability(tuple(violated), covers, sizes_match)


# ─────────────────────────────────────────────
# Cactus <-> tree
# ─────────────────────────────────────────────

def cactus_to_tree(c: Cactus) -> PlaneTree:
    """Separate touching corners, cut every arc (j, j+1), shrink the polygons."""
    diag = is_arrangeable(c.polygons, c.n)
    if not diag:
        raise ValueError(f"invalid cactus: {diag.describe()}")
    n = c.n
    if n == 1:
        return PlaneTree(LEAF)
    # polygons at each point, from the h_j side to the t_j side; the chord
    # towards the nearest counterclockwise neighbour lies next to t_j
    at: dict[int, list[int]] = {j: [] for j in range(1, n + 1)}
    for i, p in enumerate(c.polygons):
        for j in p.elements:
            at[j].append(i)
    rot: dict[tuple, list[tuple]] = {("P", i): [] for i in range(len(c.polygons))}
    side: dict[tuple[int, int], tuple[tuple, tuple]] = {}  # (polygon, point) -> (h-side, t-side)
    for j in range(1, n + 1):
        def nearest(i):
            return min((k - j) % n for k in c.polygons[i].elements if k != j)
        chain = [("h", j)] + [("P", i) for i in sorted(at[j], key=nearest, reverse=True)] + [("t", j)]
        for a, b, d in zip(chain, chain[1:], chain[2:]):
            side[(b[1], j)] = (a, d)
        rot[("h", j)] = [chain[1]]
        rot[("t", j)] = [chain[-2]]
    for i, p in enumerate(c.polygons):
        for j in p.elements:
            rot[("P", i)].extend(side[(i, j)])

    def build(v, parent):
        if v[0] != "P":
            leaves.append(v)
            return LEAF
        order = rot[v]
        k = order.index(parent)
        return tuple(build(w, v) for w in order[k + 1:] + order[:k])

    leaves: list[tuple] = [("h", 1)]
    tree = PlaneTree(build(rot[("h", 1)][0], ("h", 1)))
    expected = [(s, k) for k in range(1, n + 1) for s in "ht"]
    if leaves != expected:
        raise ValueError("cactus does not unfold to a tree with boundary labels h1, t1, ..., tn")
    return tree


def _walk_types(tree: PlaneTree) -> dict:
    """Vertex types from the counterclockwise walk starting at h1.

    A vertex first reached right after a t-leaf is of type h, otherwise t.
    """
    g = ccw_graph(tree)
    root = ("leaf", 0)
    types = {}
    last = "h"  # the walk starts at h1
    prev, cur = root, g.rot[root][0]
    while cur != root:
        if cur[0] == "leaf":
            last = "t" if cur[1] % 2 else "h"
        elif cur not in types:
            types[cur] = "h" if last == "t" else "t"
        nbrs = g.rot[cur]
        prev, cur = cur, nbrs[(nbrs.index(prev) + 1) % len(nbrs)]
    return types


def tree_to_cactus(t: PlaneTree) -> Cactus:
    """Inflate each vertex into a polygon, pairing its edges according to its type."""
    n = t.n
    g = ccw_graph(t)
    types = _walk_types(t)
    # partner[v][s] = the t-side slot paired with h-side slot s
    partner = {}
    for v, kind in types.items():
        deg = len(g.rot[v])
        start = 0 if kind == "t" else 1
        partner[v] = {(start + 2 * i) % deg: (start + 2 * i + 1) % deg for i in range(deg // 2)}

    def corner_point(v, ts):
        w = g.rot[v][ts]
        while w[0] != "leaf":
            hs = g.rot[w].index(v)
            if hs not in partner[w]:
                raise ValueError("inconsistent vertex types")
            v, w = w, g.rot[w][partner[w][hs]]
        if w[1] % 2 == 0:
            raise ValueError("corner chain ends at an h-leaf")
        return w[1] // 2 + 1

    polys = []
    for v in types:
        pts = sorted(corner_point(v, ts) for ts in partner[v].values())
        polys.append(Cycle(tuple(pts)))
    return Cactus(n, tuple(polys))


def arrange(cycles: Iterable[Cycle], n: int) -> Factorization:
    cycles = list(cycles)
    diag = is_arrangeable(cycles, n)
    if not diag:
        raise NotArrangeable(diag)
    f = tree_to_factorization(cactus_to_tree(Cactus(n, tuple(cycles))))
    if sorted(f.factors) != sorted(cycles):  # pragma: no cover
        raise AssertionError("arranged factors differ from the input")
    return f
