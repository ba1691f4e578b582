"""Height and fix distributions, their closed forms, and count triangles."""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import lru_cache

from . import chain
from .errors import IndexOutOfRange, UnsupportedFamily
from .families import Family, enumerate_oracle


class Stat(enum.Enum):
    HEIGHT = "height"
    FIX = "fix"

    @classmethod
    def parse(cls, text):
        if isinstance(text, cls):
            return text
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(f"unknown statistic {text!r}; expected height or fix") from None

    @property
    def column(self) -> str:
        return "p" if self is Stat.HEIGHT else "m"


def _histogram(family, n, value, ceiling=None) -> list[int]:
    counts = [0] * (n + 1)
    for a in enumerate_oracle(family, n, ceiling):
        counts[value(a)] += 1
    return counts


def count_by_height(family, n: int, ceiling: int | None = None) -> list[int]:
    return _histogram(family, n, lambda a: a.height, ceiling)


def count_by_fix(family, n: int, ceiling: int | None = None) -> list[int]:
    return _histogram(family, n, lambda a: len(chain.fixed_points(a)), ceiling)


def order(family, n: int, ceiling: int | None = None) -> int:
    return len(enumerate_oracle(family, n, ceiling))


@lru_cache(maxsize=None)
def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient by Pascal's rule."""
    if k < 0 or k > n:
        return 0
    if k == 0 or k == n:
        return 1
    return binomial(n - 1, k - 1) + binomial(n - 1, k)


def _check_index(n: int, i: int, name: str) -> None:
    if n < 0 or not 0 <= i <= n:
        raise IndexOutOfRange(f"need 0 <= {name} <= n, got n={n}, {name}={i}")


def closed_height_oddp(n: int, p: int) -> int:
    """Number of height-p elements of ODDP_n."""
    _check_index(n, p, "p")
    if p == 0:
        return 1
    return binomial(n + 1, p + 1)


def closed_order_oddp(n: int) -> int:
    if n < 0:
        raise IndexOutOfRange(f"n must be nonnegative, got {n}")
    return 2 ** (n + 1) - (n + 1)


def closed_order_ddp(n: int) -> int:
    """|DDP_n| via a_n = 3a_{n-1} - 2a_{n-2} - 2^(n//2) + n + 1, a_0 = 1, a_1 = 2."""
    if n < 0:
        raise IndexOutOfRange(f"n must be nonnegative, got {n}")
    return _ddp_orders(n)[n]


@lru_cache(maxsize=None)
def _ddp_orders(n: int) -> tuple[int, ...]:
    seq = [1, 2]
    for k in range(2, n + 1):
        seq.append(3 * seq[k - 1] - 2 * seq[k - 2] - 2 ** (k // 2) + k + 1)
    return tuple(seq[: n + 1])


def ddp_single_fix(n: int) -> int:
    """Elements of DDP_n with exactly one fixed point (n >= 1)."""
    if n < 1:
        raise IndexOutOfRange(f"need n >= 1, got {n}")
    if n % 2 == 0:
        half = n // 2
        return 2 ** (half + 1) - 2
    half = (n + 1) // 2
    return 3 * 2 ** (half - 1) - 2


def closed_fix(family, n: int, m: int) -> int:
    """Closed form for the number of elements with exactly m fixed points.

    The m = 0 column is the order of the family one size down, taken from
    the closed order formulas so this never touches an enumeration.
    """
    family = Family.parse(family)
    if family not in (Family.DDP, Family.ODDP):
        raise UnsupportedFamily(f"no closed fix formula for {family.label}")
    _check_index(n, m, "m")
    if m == 0:
        if n == 0:
            return 1
        if family is Family.ODDP:
            return closed_order_oddp(n - 1)
        return closed_order_ddp(n - 1)
    if family is Family.ODDP or m >= 2:
        return binomial(n, m)
    return ddp_single_fix(n)


@dataclass(frozen=True)
class CountTriangle:
    family: Family
    stat: Stat
    rows: tuple[tuple[int, ...], ...]
    row_sums: tuple[int, ...]

    @property
    def max_n(self) -> int:
        return len(self.rows) - 1

    def header(self) -> list[str]:
        return [f"n\\{self.stat.column}", *map(str, range(self.max_n + 1)), "sum"]

    def cells(self) -> list[list[str]]:
        width = self.max_n + 1
        out = []
        for n, row in enumerate(self.rows):
            values = [str(v) for v in row] + [""] * (width - len(row))
            out.append([str(n), *values, str(self.row_sums[n])])
        return out

    def to_csv(self) -> str:
        lines = [",".join(self.header())]
        lines += [",".join(r) for r in self.cells()]
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        table = [self.header(), *self.cells()]
        widths = [max(len(r[i]) for r in table) for i in range(len(table[0]))]
        lines = [" ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in table]
        return "\n".join(lines) + "\n"

    def to_records(self) -> list[dict]:
        return [
            {
                "family": self.family.value,
                "stat": self.stat.value,
                "n": n,
                "values": list(row),
                "sum": self.row_sums[n],
            }
            for n, row in enumerate(self.rows)
        ]

    def to_jsonl(self) -> str:
        return "".join(json.dumps(r) + "\n" for r in self.to_records())


def triangle(family, stat, max_n: int, ceiling: int | None = None) -> CountTriangle:
    family = Family.parse(family)
    stat = Stat.parse(stat)
    counter = count_by_height if stat is Stat.HEIGHT else count_by_fix
    rows = tuple(tuple(counter(family, n, ceiling)) for n in range(max_n + 1))
    return CountTriangle(family, stat, rows, tuple(sum(r) for r in rows))
