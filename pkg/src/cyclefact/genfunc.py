"""
Truncated multivariate power series with exact integer coefficients.

Variables are x_j, u_j, v_j for j = 2 .. W+1.  A monomial has weight
sum_j (j-1) * deg(x_j); u and v carry no weight.  Terms heavier than the
truncation weight W are dropped, so every fixed-point iteration below is
exact after W+1 rounds.

>>> xi = xi_series(3)
>>> xi.coefficient(x={2: 3})
12
"""

from __future__ import annotations

import json
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping

from .perm_core import HeadTailProfile, TypeVector

__all__ = [
    "MultiSeries", "xi_series", "f_series", "g_series", "g_from_f",
    "g_symmetric", "single_vertex_correction", "catalan_check", "profile_counts",
]

Mono = tuple[int, ...]


class MultiSeries:
    """Immutable truncated series; ``terms`` maps flat exponent tuples to ints.

    A key has 3*W entries: x_2..x_{W+1}, then u_2..u_{W+1}, then v_2..v_{W+1}.
    """

    __slots__ = ("W", "terms")

    def __init__(self, W: int, terms: Mapping[Mono, int] | None = None):
        if W < 0:
            raise ValueError("truncation weight must be nonnegative")
        self.W = W
        out = {}
        for k, c in (terms or {}).items():
            if len(k) != 3 * W:
                raise ValueError(f"exponent vector of length {len(k)}, expected {3 * W}")
            if c and self._weight(k) <= W:
                out[k] = c
        self.terms: dict[Mono, int] = out

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, W: int, c: int = 1) -> "MultiSeries":
        return cls(W, {(0,) * (3 * W): c})

    @classmethod
    def var(cls, W: int, name: str, j: int) -> "MultiSeries":
        """The monomial x_j, u_j or v_j (zero when x_j exceeds the truncation)."""
        block = "xuv".index(name)
        if not 2 <= j:
            raise ValueError(f"variable index must be >= 2, got {j}")
        if j - 1 > W:
            return cls(W)
        k = [0] * (3 * W)
        k[block * W + j - 2] = 1
        return cls(W, {tuple(k): 1})

    # -- structure --------------------------------------------------------

    def _weight(self, k: Mono) -> int:
        return sum((i + 1) * e for i, e in enumerate(k[:self.W]))

    def weight(self, k: Mono) -> int:
        return self._weight(k)

    def _check(self, other: "MultiSeries") -> None:
        if self.W != other.W:
            raise ValueError(f"mismatched truncation: {self.W} vs {other.W}")

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiSeries.const(self.W, other)
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return self.W == other.W and self.terms == other.terms

    def __hash__(self):
        return hash((self.W, frozenset(self.terms.items())))

    def __len__(self) -> int:
        return len(self.terms)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "MultiSeries":
        if isinstance(other, int):
            return MultiSeries.const(self.W, other)
        self._check(other)
        return other

    def __add__(self, other) -> "MultiSeries":
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return MultiSeries(self.W, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiSeries":
        return MultiSeries(self.W, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "MultiSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MultiSeries":
        if isinstance(other, int):
            return MultiSeries(self.W, {k: c * other for k, c in self.terms.items()})
        self._check(other)
        W = self.W
        out: dict[Mono, int] = {}
        b_items = [(k, c, self._weight(k)) for k, c in other.terms.items()]
        for ka, ca in self.terms.items():
            wa = self._weight(ka)
            for kb, cb, wb in b_items:
                if wa + wb > W:
                    continue
                k = tuple(p + q for p, q in zip(ka, kb))
                out[k] = out.get(k, 0) + ca * cb
        return MultiSeries(W, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "MultiSeries":
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = MultiSeries.const(self.W)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def truncate(self, W: int) -> "MultiSeries":
        """Drop terms heavier than ``W`` and shrink the variable set accordingly."""
        if W > self.W:
            raise ValueError("can only truncate to a smaller weight")
        out = {}
        for k, c in self.terms.items():
            if self._weight(k) > W:
                continue
            x, u, v = k[:self.W], k[self.W:2 * self.W], k[2 * self.W:]
            out[x[:W] + u[:W] + v[:W]] = c
        return MultiSeries(W, out)

    # -- substitutions ----------------------------------------------------

    def swap_uv(self) -> "MultiSeries":
        W = self.W
        return MultiSeries(W, {k[:W] + k[2 * W:] + k[W:2 * W]: c for k, c in self.terms.items()})

    def at_uv_one(self) -> "MultiSeries":
        """Set every u_j = v_j = 1."""
        W = self.W
        out: dict[Mono, int] = {}
        for k, c in self.terms.items():
            kk = k[:W] + (0,) * (2 * W)
            out[kk] = out.get(kk, 0) + c
        return MultiSeries(W, out)

    # -- coefficient access -----------------------------------------------

    def key(self, x: Mapping[int, int] = {}, u: Mapping[int, int] = {},
            v: Mapping[int, int] = {}) -> Mono:
        k = [0] * (3 * self.W)
        for block, d in enumerate((x, u, v)):
            for j, e in d.items():
                if j - 1 > self.W:
                    if e:
                        raise KeyError(f"variable index {j} beyond truncation {self.W}")
                    continue
                k[block * self.W + j - 2] = e
        return tuple(k)

    def coefficient(self, x: Mapping[int, int] = {}, u: Mapping[int, int] = {},
                    v: Mapping[int, int] = {}) -> int:
        return self.terms.get(self.key(x, u, v), 0)

    def split(self, k: Mono) -> tuple[dict[int, int], dict[int, int], dict[int, int]]:
        W = self.W
        return tuple({j + 2: e for j, e in enumerate(k[b * W:(b + 1) * W]) if e} for b in range(3))

    def x_part(self, alpha: TypeVector) -> dict[tuple[dict, dict], int]:
        """Terms whose x-exponents equal ``alpha``, as {(u-exps, v-exps): coeff}."""
        target = alpha.dense(self.W) if self.W else ()
        out = {}
        for k, c in self.terms.items():
            if k[:self.W] == target:
                _, u, v = self.split(k)
                out[(tuple(sorted(u.items())), tuple(sorted(v.items())))] = c
        return out

    def profiles_bounded(self) -> bool:
        """Every u_j and v_j exponent is at most the x_j exponent."""
        W = self.W
        return all(k[W + i] <= k[i] and k[2 * W + i] <= k[i]
                   for k in self.terms for i in range(W))

    # -- printing ---------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Mono, int]]:
        return sorted(self.terms.items(), key=lambda kc: (self._weight(kc[0]), kc[0]))

    def monomial_str(self, k: Mono) -> str:
        parts = []
        for name, d in zip("xuv", self.split(k)):
            for j, e in sorted(d.items()):
                parts.append(f"{name}{j}" + (f"^{e}" if e > 1 else ""))
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for k, c in self.sorted_terms():
            mono = self.monomial_str(k)
            mag = abs(c)
            body = mono if mag == 1 and mono else (f"{mag}*{mono}" if mono else str(mag))
            if not out:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)

    def __repr__(self) -> str:
        return f"MultiSeries(W={self.W}, {self})"

    def to_json(self) -> str:
        terms = []
        for k, c in self.sorted_terms():
            x, u, v = self.split(k)
            terms.append({"x": {str(j): e for j, e in x.items()},
                          "u": {str(j): e for j, e in u.items()},
                          "v": {str(j): e for j, e in v.items()},
                          "coefficient": c})
        return json.dumps({"truncation": self.W, "terms": terms}, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "MultiSeries":
        obj = json.loads(text)
        s = cls(obj["truncation"])
        out = {}
        for t in obj["terms"]:
            conv = {name: {int(j): e for j, e in t[name].items()} for name in "xuv"}
            out[s.key(**conv)] = t["coefficient"]
        return cls(s.W, out)


# ─────────────────────────────────────────────
# Recursions
# ─────────────────────────────────────────────

def _lengths(W: int) -> range:
    # x_j has weight j-1, so only j <= W+1 can contribute
    return range(2, W + 2)


@lru_cache(maxsize=16)
def xi_series(W: int) -> MultiSeries:
    """Fixed point of xi = 1 + sum_j x_j xi^(2j-1), exact to weight W.

    Results are cached and shared; treat them as read-only.
    """
    one = MultiSeries.const(W)
    xs = {j: MultiSeries.var(W, "x", j) for j in _lengths(W)}
    xi = one
    for _ in range(W + 1):
        sq = xi * xi
        power = xi * sq  # xi^3 for j = 2
        acc = one
        for j in _lengths(W):
            acc = acc + xs[j] * power
            power = power * sq
        xi = acc
    return xi


def f_series(W: int) -> tuple[MultiSeries, MultiSeries]:
    """Joint fixed point of f = 1 + sum_j x_j (f^j - 1 + v_j) fhat^(j-1), fhat = swap_uv(f).

    f counts trees by type, tail vector (v) and head vector excluding the
    top vertex (u).
    """
    one = MultiSeries.const(W)
    f = one
    for _ in range(W + 1):
        fh = f.swap_uv()
        acc = one
        fp = f        # f^j
        fhp = one     # fhat^(j-1)
        for j in _lengths(W):
            fp = fp * f
            if j > 2:
                fhp = fhp * fh
            else:
                fhp = fh
            term = fp - 1 + MultiSeries.var(W, "v", j)
            acc = acc + MultiSeries.var(W, "x", j) * term * fhp
        f = acc
    return f, f.swap_uv()


def g_from_f(f: MultiSeries) -> MultiSeries:
    """f - sum_j x_j (1 - u_j) f^j"""
    W = f.W
    g = f
    fp = f
    for j in _lengths(W):
        fp = fp * f
        g = g - MultiSeries.var(W, "x", j) * (1 - MultiSeries.var(W, "u", j)) * fp
    return g


def g_symmetric(f: MultiSeries, fhat: MultiSeries) -> MultiSeries:
    """f fhat - sum_j x_j (f fhat)^j"""
    W = f.W
    ff = f * fhat
    g = ff
    p = ff
    for j in _lengths(W):
        p = p * ff
        g = g - MultiSeries.var(W, "x", j) * p
    return g


def single_vertex_correction(W: int) -> MultiSeries:
    """sum_j x_j (1 - u_j)(1 - v_j)

    A one-vertex tree is at once a head and a tail.  Both closed forms above
    score it u_j + v_j - 1 instead of u_j v_j; this term makes up the
    difference and vanishes for every other tree.
    """
    out = MultiSeries(W)
    for j in _lengths(W):
        u, v = MultiSeries.var(W, "u", j), MultiSeries.var(W, "v", j)
        out = out + MultiSeries.var(W, "x", j) * (1 - u) * (1 - v)
    return out


def g_series(W: int) -> MultiSeries:
    """Generating function of trees by type (x), head vector (u) and tail vector (v)."""
    f, fhat = f_series(W)
    corr = single_vertex_correction(W)
    g1 = g_from_f(f) + corr
    g2 = g_symmetric(f, fhat) + corr
    if g1 != g2:  # pragma: no cover
        raise AssertionError("the two closed forms of g disagree")
    return g1


def profile_counts(g: MultiSeries, alpha: TypeVector) -> dict[HeadTailProfile, int]:
    """Read {profile: count} for type ``alpha`` out of g."""
    out = {HeadTailProfile(u, v): c for (u, v), c in g.x_part(alpha).items()}
    return dict(sorted(out.items(), key=lambda kv: kv[0].sort_key()))


def catalan_check(n: int, W: int | None = None) -> tuple[int, int]:
    """(sum over weight-n types of (-1)^(|alpha|+n) * count, n-th Catalan number)."""
    W = n if W is None else W
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > W:
        raise ValueError(f"n={n} exceeds truncation weight {W}")
    xi = xi_series(W)
    total = 0
    for k, c in xi.terms.items():
        if xi.weight(k) == n:
            size = sum(k[:W])
            total += (-1) ** (size + n) * c
    return total, comb(2 * n, n) // (n + 1)
