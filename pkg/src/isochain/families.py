"""The six transformation families and their enumerators.

``enumerate_oracle`` is the slow reference: every partial injection of the
chain, filtered by membership. ``enumerate_fast`` builds DDP/ODDP directly
from their normal forms (down-translations ``x -> x - k`` and decreasing
reflections ``x -> c - x``) and must agree with the oracle.
"""
from __future__ import annotations

import enum
import os
from functools import lru_cache
from itertools import combinations, permutations

from . import chain
from .chain import PartialInjection
from .errors import CeilingExceeded, UnsupportedFamily

DEFAULT_CEILING = 8
CEILING_ENV = "ISOCHAIN_CEILING"


class Family(enum.Enum):
    I = "i"
    I_MINUS = "iminus"
    DP = "dp"
    ODP = "odp"
    DDP = "ddp"
    ODDP = "oddp"

    @classmethod
    def parse(cls, text):
        if isinstance(text, cls):
            return text
        try:
            return cls(text.lower())
        except ValueError:
            raise UnsupportedFamily(
                f"unknown family {text!r}; expected one of {', '.join(f.value for f in cls)}"
            ) from None

    @property
    def label(self) -> str:
        return _LABELS[self]


_LABELS = {
    Family.I: "I_n",
    Family.I_MINUS: "I_n^-",
    Family.DP: "DP_n",
    Family.ODP: "ODP_n",
    Family.DDP: "DDP_n",
    Family.ODDP: "ODDP_n",
}


def default_ceiling() -> int:
    value = os.environ.get(CEILING_ENV)
    if value is None or value == "":
        return DEFAULT_CEILING
    return int(value)


def check_ceiling(n: int, ceiling: int | None = None) -> None:
    limit = default_ceiling() if ceiling is None else ceiling
    if n > limit:
        raise CeilingExceeded(f"n={n} exceeds the enumeration ceiling {limit}")
    if n < 0:
        raise ValueError(f"chain size must be nonnegative, got {n}")


def member(family: Family, a: PartialInjection) -> bool:
    family = Family.parse(family)
    if family is Family.I:
        return True
    if family is Family.I_MINUS:
        return chain.is_order_decreasing(a)
    if family is Family.DP:
        return chain.is_isometry(a)
    if family is Family.ODP:
        return chain.is_isometry(a) and chain.is_order_preserving(a)
    if family is Family.DDP:
        return chain.is_order_decreasing(a) and chain.is_isometry(a)
    return (
        chain.is_order_decreasing(a)
        and chain.is_isometry(a)
        and chain.is_order_preserving(a)
    )


def all_partial_injections(n: int):
    """Yield every element of I_n.

    Domains by ascending size then lexicographically, images likewise, and
    bijections between them in lexicographic order of the image sequence.
    """
    points = range(1, n + 1)
    for size in range(n + 1):
        for dom in combinations(points, size):
            for img in combinations(points, size):
                for perm in permutations(img):
                    yield PartialInjection(n, tuple(zip(dom, perm)), check=False)


def canonical(elements) -> tuple[PartialInjection, ...]:
    return tuple(sorted(elements, key=PartialInjection.sort_key))


def enumerate_oracle(family, n: int, ceiling: int | None = None) -> tuple[PartialInjection, ...]:
    family = Family.parse(family)
    check_ceiling(n, ceiling)
    return _oracle(family, n)


@lru_cache(maxsize=None)
def _oracle(family: Family, n: int) -> tuple[PartialInjection, ...]:
    return canonical(a for a in all_partial_injections(n) if member(family, a))


def translations(n: int):
    """Down-translations x -> x - k on every domain inside {k+1..n}; empty map once."""
    yield chain.empty(n)
    for k in range(n):
        window = range(k + 1, n + 1)
        for size in range(1, len(window) + 1):
            for dom in combinations(window, size):
                yield PartialInjection(n, tuple((x, x - k) for x in dom), check=False)


def reflections(n: int):
    """Decreasing reflections x -> c - x with at least two domain points.

    Smaller reflections coincide with translations and are skipped.
    """
    for c in range(2, 2 * n + 1):
        window = range(max((c + 1) // 2, 1), min(c - 1, n) + 1)
        for size in range(2, len(window) + 1):
            for dom in combinations(window, size):
                yield PartialInjection(n, tuple((x, c - x) for x in dom), check=False)


def enumerate_fast(family, n: int, ceiling: int | None = None) -> tuple[PartialInjection, ...]:
    family = Family.parse(family)
    if family not in (Family.DDP, Family.ODDP):
        raise UnsupportedFamily(f"no structural generator for {family.label}; use the oracle")
    check_ceiling(n, ceiling)
    if family is Family.ODDP:
        return canonical(translations(n))
    return canonical([*translations(n), *reflections(n)])


def enumerate_family(family, n: int, fast: bool = False, ceiling: int | None = None):
    if fast:
        return enumerate_fast(family, n, ceiling)
    return enumerate_oracle(family, n, ceiling)
