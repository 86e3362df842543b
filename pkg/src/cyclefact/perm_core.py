"""
Cycles, permutations and words of factors.

Products are read right to left: in ``(3 4)(1 2)(2 4)`` the factor
``(2 4)`` acts first.  Points are 1-based.

>>> f = Factorization.parse("(3 4)(1 2)(2 4)")
>>> str(evaluate(f))
'(1 2 3 4)'
>>> is_minimal_ncycle_factorization(f)
True
>>> str(canonical_form(f))
'(1 2)(3 4)(2 4)'
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import total_ordering
from typing import Iterable, Mapping

__all__ = [
    "ParseError", "Cycle", "Permutation", "TypeVector", "Factorization",
    "HeadTailProfile", "cycle_new", "evaluate", "type_of",
    "is_minimal_ncycle_factorization", "commute", "canonical_form",
    "equivalent", "heads_and_tails", "parse_cycles", "parse_multiset",
]


class ParseError(ValueError):
    """Malformed text input; ``pos`` is the 0-based offset of the problem."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


# ─────────────────────────────────────────────
# Cycles and permutations
# ─────────────────────────────────────────────

@total_ordering
@dataclass(frozen=True, eq=True)
class Cycle:
    """A cyclic permutation, stored with its smallest element first.

    Cycles are ordered by length, then by element list; this is the letter
    order used by :func:`canonical_form`.
    """
    elements: tuple[int, ...]

    def __post_init__(self):
        els = tuple(self.elements)
        if len(els) < 2:
            raise ValueError(f"a cycle needs at least 2 elements, got {els}")
        if any(e < 1 for e in els):
            raise ValueError(f"cycle elements must be positive, got {els}")
        if len(set(els)) != len(els):
            raise ValueError(f"duplicate element in cycle {els}")
        k = els.index(min(els))
        object.__setattr__(self, "elements", els[k:] + els[:k])

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __str__(self) -> str:
        return "(" + " ".join(map(str, self.elements)) + ")"

    def __repr__(self) -> str:
        return f"Cycle{self}"

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.elements), self.elements)

    def __lt__(self, other: "Cycle") -> bool:
        if not isinstance(other, Cycle):
            return NotImplemented
        return self.sort_key < other.sort_key

    def is_increasing(self) -> bool:
        els = self.elements
        return all(a < b for a, b in zip(els, els[1:]))

    def image(self, x: int) -> int:
        els = self.elements
        if x in els:
            return els[(els.index(x) + 1) % len(els)]
        return x

    def mapping(self) -> dict[int, int]:
        els = self.elements
        return {a: els[(i + 1) % len(els)] for i, a in enumerate(els)}

    @classmethod
    def parse(cls, text: str) -> "Cycle":
        cycles = parse_cycles(text)
        if len(cycles) != 1:
            raise ParseError(f"expected exactly one cycle, got {len(cycles)}", 0)
        return cycles[0]


def cycle_new(elements: Iterable[int]) -> Cycle:
    return Cycle(tuple(elements))


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[k-1]`` is the image of ``k``."""
    n: int
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != self.n or sorted(self.images) != list(range(1, self.n + 1)):
            raise ValueError(f"not a permutation of 1..{self.n}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def ncycle(cls, n: int) -> "Permutation":
        """The cycle (1 2 ... n)."""
        return cls(n, tuple(range(2, n + 1)) + (1,) if n else ())

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def cycles(self) -> list[Cycle]:
        """Disjoint cycle decomposition, fixed points omitted."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            orbit = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                orbit.append(x)
                seen.add(x)
                x = self(x)
            if len(orbit) > 1:
                out.append(Cycle(tuple(orbit)))
        return out

    def __str__(self) -> str:
        return "".join(map(str, self.cycles())) or "()"


# ─────────────────────────────────────────────
# Type vectors and profiles
# ─────────────────────────────────────────────

def _sparse(counts: Mapping[int, int] | Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    items = counts.items() if isinstance(counts, Mapping) else counts
    out: dict[int, int] = {}
    for j, c in items:
        if j < 2:
            raise ValueError(f"cycle lengths start at 2, got {j}")
        if c < 0:
            raise ValueError(f"negative count {c} for length {j}")
        if c:
            out[j] = out.get(j, 0) + c
    return tuple(sorted(out.items()))


@dataclass(frozen=True)
class TypeVector:
    """Counts ``alpha_j`` of j-cycles, stored sparsely as sorted (j, alpha_j) pairs."""
    counts: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "counts", _sparse(self.counts))

    @classmethod
    def of(cls, **kw: int) -> "TypeVector":
        """``TypeVector.of(a2=3, a3=1)``"""
        return cls(tuple((int(k[1:]), v) for k, v in kw.items()))

    @classmethod
    def from_dense(cls, dense: Iterable[int]) -> "TypeVector":
        # dense[0] is alpha_2
        return cls(tuple((j + 2, c) for j, c in enumerate(dense)))

    def __getitem__(self, j: int) -> int:
        return dict(self.counts).get(j, 0)

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def dense(self, length: int) -> tuple[int, ...]:
        d = self.as_dict()
        if d and max(d) - 1 > length:
            raise ValueError(f"{self} does not fit in {length} components")
        return tuple(d.get(j, 0) for j in range(2, length + 2))

    @property
    def size(self) -> int:
        """|alpha|, the number of factors."""
        return sum(c for _, c in self.counts)

    @property
    def weight(self) -> int:
        """<alpha>, which equals n - 1 for a minimal factorization of an n-cycle."""
        return sum((j - 1) * c for j, c in self.counts)

    @property
    def max_length(self) -> int:
        return max((j for j, _ in self.counts), default=1)

    def __str__(self) -> str:
        return ",".join(f"a{j}={c}" for j, c in self.counts) or "0"

    @classmethod
    def parse(cls, text: str) -> "TypeVector":
        text = text.strip()
        if text in ("", "0"):
            return cls()
        pairs = []
        pos = 0
        for part in text.split(","):
            m = re.fullmatch(r"\s*a(\d+)\s*=\s*(\d+)\s*", part)
            if not m:
                raise ParseError(f"bad type component {part.strip()!r}, expected like 'a2=3'", pos)
            j, c = int(m.group(1)), int(m.group(2))
            if j < 2:
                raise ParseError(f"cycle length must be >= 2, got a{j}", pos)
            pairs.append((j, c))
            pos += len(part) + 1
        return cls(tuple(pairs))


@dataclass(frozen=True)
class HeadTailProfile:
    """Head and tail counts by cycle length, each a sorted sparse (j, count) tuple."""
    h: tuple[tuple[int, int], ...] = ()
    t: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "h", _sparse(self.h))
        object.__setattr__(self, "t", _sparse(self.t))

    @property
    def heads(self) -> int:
        return sum(c for _, c in self.h)

    @property
    def tails(self) -> int:
        return sum(c for _, c in self.t)

    def swapped(self) -> "HeadTailProfile":
        return HeadTailProfile(self.t, self.h)

    def __str__(self) -> str:
        hs = ",".join(f"h{j}={c}" for j, c in self.h)
        ts = ",".join(f"t{j}={c}" for j, c in self.t)
        return f"{hs};{ts}"

    def sort_key(self):
        return (self.h, self.t)


# ─────────────────────────────────────────────
# Factorizations
# ─────────────────────────────────────────────

@dataclass(frozen=True)
class Factorization:
    """A word of cycles sigma_m ... sigma_1 on {1..n}, stored as written (leftmost first)."""
    n: int
    factors: tuple[Cycle, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        for c in self.factors:
            if max(c.elements) > self.n:
                raise ValueError(f"factor {c} has elements outside 1..{self.n}")

    def __str__(self) -> str:
        return "".join(map(str, self.factors))

    def __len__(self) -> int:
        return len(self.factors)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Factorization":
        factors = parse_cycles(text)
        top = max((max(c.elements) for c in factors), default=0)
        if n is None:
            n = top
        elif top > n:
            raise ValueError(f"element {top} exceeds n={n}")
        return cls(n, tuple(factors))


_TOKEN = re.compile(r"\s*(?:(\()|(\))|(\d+)|(,)|(\S))")


def parse_cycles(text: str) -> list[Cycle]:
    """Parse a concatenation of cycles such as ``(4 5)(2 3 5)``.

    Commas between cycles are tolerated so that multiset bodies parse too.
    """
    cycles: list[Cycle] = []
    current: list[int] | None = None
    start = 0
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        tok_pos = m.start(m.lastindex)
        if m.group(1):
            if current is not None:
                raise ParseError("nested '('", tok_pos)
            current, start = [], tok_pos
        elif m.group(2):
            if current is None:
                raise ParseError("unmatched ')'", tok_pos)
            try:
                cycles.append(Cycle(tuple(current)))
            except ValueError as exc:
                raise ParseError(str(exc), start) from None
            current = None
        elif m.group(3):
            if current is None:
                raise ParseError("number outside a cycle", tok_pos)
            current.append(int(m.group(3)))
        elif m.group(4):
            if current is not None:
                raise ParseError("',' inside a cycle", tok_pos)
        else:
            raise ParseError(f"unexpected character {m.group(5)!r}", tok_pos)
        pos = m.end()
    if current is not None:
        raise ParseError("unclosed '('", start)
    return cycles


def parse_multiset(text: str) -> list[Cycle]:
    """Parse ``{(1 4 5),(1 3),(2 4)}``; braces are required."""
    s = text.strip()
    offset = len(text) - len(text.lstrip())
    if not s.startswith("{"):
        raise ParseError("a multiset must start with '{'", offset)
    if not s.endswith("}"):
        raise ParseError("a multiset must end with '}'", offset + len(s) - 1)
    try:
        return parse_cycles(s[1:-1])
    except ParseError as exc:
        raise ParseError(str(exc).rsplit(" (at", 1)[0], exc.pos + offset + 1) from None


# ─────────────────────────────────────────────
# Operations
# ─────────────────────────────────────────────

def _compose_images(n: int, factors: Iterable[Cycle]) -> list[int]:
    img = list(range(n + 1))
    for c in reversed(tuple(factors)):
        step = c.mapping()
        img = [step.get(x, x) for x in img]
    return img


def evaluate(f: Factorization) -> Permutation:
    img = _compose_images(f.n, f.factors)
    return Permutation(f.n, tuple(img[1:]))


def type_of(f: Factorization) -> TypeVector:
    counts: dict[int, int] = {}
    for c in f.factors:
        counts[len(c)] = counts.get(len(c), 0) + 1
    return TypeVector(tuple(counts.items()))


def is_minimal_ncycle_factorization(f: Factorization) -> bool:
    if type_of(f).weight != f.n - 1:
        return False
    return evaluate(f) == Permutation.ncycle(f.n)


def commute(a: Cycle, b: Cycle) -> bool:
    """Whether ab = ba as permutations."""
    if a == b:
        return True
    ma, mb = a.mapping(), b.mapping()
    for x in set(ma) | set(mb):
        ab = ma.get(mb.get(x, x), mb.get(x, x))
        ba = mb.get(ma.get(x, x), ma.get(x, x))
        if ab != ba:
            return False
    return True


def canonical_form(f: Factorization) -> Factorization:
    """Lexicographically least word in the commutation class of ``f``.

    Greedy: at each step emit the least remaining factor that commutes with
    every remaining factor written to its left.
    """
    remaining = list(f.factors)
    out = []
    while remaining:
        best = None
        for i, c in enumerate(remaining):
            if best is not None and not c < remaining[best]:
                continue
            if all(commute(c, d) for d in remaining[:i]):
                best = i
        out.append(remaining.pop(best))
    return Factorization(f.n, tuple(out))


def equivalent(f1: Factorization, f2: Factorization) -> bool:
    if f1.n != f2.n:
        raise ValueError(f"factorizations on different point sets: {f1.n} vs {f2.n}")
    return canonical_form(f1) == canonical_form(f2)


def heads_and_tails(f: Factorization) -> tuple[frozenset[Cycle], frozenset[Cycle], HeadTailProfile]:
    """Factors that can be moved to the leftmost (head) or rightmost (tail) position."""
    if not is_minimal_ncycle_factorization(f):
        raise ValueError(f"{f} is not a minimal factorization of the {f.n}-cycle")
    fs = f.factors
    heads = frozenset(c for i, c in enumerate(fs) if all(commute(c, d) for d in fs[:i]))
    tails = frozenset(c for i, c in enumerate(fs) if all(commute(c, d) for d in fs[i + 1:]))

    def census(cs):
        out: dict[int, int] = {}
        for c in cs:
            out[len(c)] = out.get(len(c), 0) + 1
        return tuple(out.items())

    return heads, tails, HeadTailProfile(census(heads), census(tails))
