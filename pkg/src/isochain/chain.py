"""Partial injective transformations of the chain {1, ..., n}.

Elements are written on the right, so ``compose(a, b)`` applies ``a`` first:
``x(ab) = (xa)b``.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import (
    ChainMismatch,
    NotFunctional,
    NotInjective,
    OutOfRange,
    ParseError,
)

Pair = tuple[int, int]


class PartialInjection:
    """An injective partial map of {1..n} into itself, stored as sorted pairs.

    With ``check=False`` the pairs are trusted to be canonical already; the
    enumerators use this to skip validation in their inner loops.
    """

    __slots__ = ("n", "pairs")

    def __init__(self, n: int, pairs: Iterable[Pair] = (), check: bool = True):
        if check:
            pairs = _canonical_pairs(n, pairs)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "pairs", tuple(pairs))

    def __setattr__(self, name, value):
        raise AttributeError("PartialInjection is immutable")

    def __eq__(self, other):
        if not isinstance(other, PartialInjection):
            return NotImplemented
        return self.n == other.n and self.pairs == other.pairs

    def __hash__(self):
        return hash((self.n, self.pairs))

    def __lt__(self, other):
        if not isinstance(other, PartialInjection):
            return NotImplemented
        return (self.n, self.sort_key()) < (other.n, other.sort_key())

    def __repr__(self):
        return f"PartialInjection({self.n}, {list(self.pairs)})"

    def __str__(self):
        return to_text(self)

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __getitem__(self, x: int) -> int:
        for a, b in self.pairs:
            if a == x:
                return b
        raise KeyError(x)

    def __mul__(self, other):
        if not isinstance(other, PartialInjection):
            return NotImplemented
        return compose(self, other)

    @property
    def domain(self) -> tuple[int, ...]:
        return tuple(x for x, _ in self.pairs)

    @property
    def image(self) -> tuple[int, ...]:
        """Image points listed in domain order (not sorted)."""
        return tuple(y for _, y in self.pairs)

    @property
    def height(self) -> int:
        return len(self.pairs)

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def sort_key(self):
        """Canonical order: height, then domain, then image (both lexicographic)."""
        return (len(self.pairs), self.domain, self.image)


def _canonical_pairs(n: int, pairs: Iterable[Pair]) -> tuple[Pair, ...]:
    if not isinstance(n, int) or n < 0:
        raise OutOfRange(f"chain size must be a nonnegative integer, got {n!r}")
    seen_x: dict[int, Pair] = {}
    seen_y: dict[int, Pair] = {}
    for pair in pairs:
        x, y = pair
        if not (1 <= x <= n and 1 <= y <= n):
            raise OutOfRange(f"pair ({x}, {y}) leaves the chain 1..{n}")
        if x in seen_x:
            raise NotFunctional(f"pair ({x}, {y}) repeats domain point {x} of {seen_x[x]}")
        if y in seen_y:
            raise NotInjective(f"pair ({x}, {y}) repeats image point {y} of {seen_y[y]}")
        seen_x[x] = (x, y)
        seen_y[y] = (x, y)
    return tuple(sorted(seen_x.values()))


def make(n: int, pairs: Iterable[Pair] = ()) -> PartialInjection:
    return PartialInjection(n, pairs)


def empty(n: int) -> PartialInjection:
    return PartialInjection(n, ())


def compose(a: PartialInjection, b: PartialInjection) -> PartialInjection:
    """Apply ``a`` then ``b``; domain is {x in Dom a : xa in Dom b}."""
    if a.n != b.n:
        raise ChainMismatch(f"cannot compose elements on chains of size {a.n} and {b.n}")
    bmap = dict(b.pairs)
    return PartialInjection(
        a.n, tuple((x, bmap[y]) for x, y in a.pairs if y in bmap), check=False
    )


def inverse(a: PartialInjection) -> PartialInjection:
    return PartialInjection(a.n, tuple(sorted((y, x) for x, y in a.pairs)), check=False)


def partial_identity(n: int, points: Iterable[int]) -> PartialInjection:
    return PartialInjection(n, ((x, x) for x in set(points)))


def identity(n: int) -> PartialInjection:
    return PartialInjection(n, tuple((x, x) for x in range(1, n + 1)), check=False)


def power(a: PartialInjection, k: int) -> PartialInjection:
    if k < 1:
        raise ValueError("power exponent must be at least 1")
    result = a
    for _ in range(k - 1):
        result = compose(result, a)
    return result


@dataclass(frozen=True)
class ElementStats:
    height: int
    fix: int
    left_waist: Optional[int]
    right_waist: Optional[int]
    left_shoulder: Optional[int]
    right_shoulder: Optional[int]


def fixed_points(a: PartialInjection) -> tuple[int, ...]:
    return tuple(x for x, y in a.pairs if x == y)


def stats(a: PartialInjection) -> ElementStats:
    if not a.pairs:
        return ElementStats(0, 0, None, None, None, None)
    image = a.image
    return ElementStats(
        height=len(a.pairs),
        fix=len(fixed_points(a)),
        left_waist=min(image),
        right_waist=max(image),
        left_shoulder=a.pairs[0][0],
        right_shoulder=a.pairs[-1][0],
    )


# Predicates. Pairs are sorted by domain point, so monotonicity only needs
# neighbouring pairs; the isometry test compares every pair of points.

def is_isometry(a: PartialInjection) -> bool:
    p = a.pairs
    for i in range(len(p)):
        xi, yi = p[i]
        for j in range(i + 1, len(p)):
            xj, yj = p[j]
            if xj - xi != abs(yj - yi):
                return False
    return True


def is_order_preserving(a: PartialInjection) -> bool:
    ys = a.image
    return all(ys[i] <= ys[i + 1] for i in range(len(ys) - 1))


def is_order_reversing(a: PartialInjection) -> bool:
    ys = a.image
    return all(ys[i] >= ys[i + 1] for i in range(len(ys) - 1))


def is_order_decreasing(a: PartialInjection) -> bool:
    return all(y <= x for x, y in a.pairs)


def is_idempotent(a: PartialInjection) -> bool:
    return compose(a, a) == a


def is_partial_identity(a: PartialInjection) -> bool:
    return all(x == y for x, y in a.pairs)


def is_nilpotent(a: PartialInjection) -> bool:
    """True when some power of ``a`` is the empty map."""
    current = a
    while current.pairs:
        nxt = compose(current, a)
        if len(nxt) == len(current):
            return False
        current = nxt
    return True


# Text and record forms: ``[n=3] 2->2 3->1`` / ``{"n": 3, "pairs": [[2, 2], [3, 1]]}``.

_HEADER = re.compile(r"^\[n=(\d+)\]$")
_PAIR = re.compile(r"^(\d+)->(\d+)$")


def to_text(a: PartialInjection) -> str:
    body = " ".join(f"{x}->{y}" for x, y in a.pairs) if a.pairs else "0"
    return f"[n={a.n}] {body}"


def parse_text(text: str) -> PartialInjection:
    tokens = text.split()
    if not tokens:
        raise ParseError("empty element text")
    m = _HEADER.match(tokens[0])
    if m is None:
        raise ParseError(f"expected '[n=<size>]', got {tokens[0]!r}")
    n = int(m.group(1))
    body = tokens[1:]
    if body == ["0"]:
        return empty(n)
    if not body:
        raise ParseError("missing pairs (write '0' for the empty element)")
    pairs = []
    for tok in body:
        pm = _PAIR.match(tok)
        if pm is None:
            raise ParseError(f"malformed pair {tok!r}")
        pairs.append((int(pm.group(1)), int(pm.group(2))))
    return make(n, pairs)


def to_record(a: PartialInjection) -> dict:
    return {"n": a.n, "pairs": [[x, y] for x, y in a.pairs]}


def from_record(record: dict) -> PartialInjection:
    try:
        n = record["n"]
        pairs = [tuple(p) for p in record["pairs"]]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad element record {record!r}") from exc
    if any(len(p) != 2 for p in pairs):
        raise ParseError(f"bad pair in record {record!r}")
    return make(n, pairs)


def to_json(a: PartialInjection) -> str:
    return json.dumps(to_record(a))
