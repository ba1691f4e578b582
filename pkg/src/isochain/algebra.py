"""Finite-semigroup view of the families: Green's relations, starred
relations, and the structural properties (J-trivial, regular, abundant,
adequate, ample, 0-E-unitary, categorical) plus Rees quotients Q(n, p).

Everything below ``build_semigroup``/``rees_quotient`` works on the Cayley
table, so the same code serves both kinds of semigroup.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

from . import chain
from .chain import PartialInjection
from .errors import CeilingExceeded, ChainMismatch, ClosureViolation, IndexOutOfRange
from .families import Family, enumerate_oracle, member

GREENS_CEILING = 6
ABUNDANCE_CEILING = 5
CATEGORICAL_MAX_SIZE = 300


class _Zero:
    """The zero adjoined to a Rees quotient; distinct from the empty map."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"

    def __str__(self):
        return "0"

    def __reduce__(self):
        return (_Zero, ())


ZERO = _Zero()


class _Table:
    """Shared Cayley-table machinery. Subclasses provide ``elements`` and ``_product``."""

    elements: tuple

    @cached_property
    def index(self) -> dict:
        return {a: i for i, a in enumerate(self.elements)}

    @cached_property
    def table(self) -> list[list[int]]:
        idx = self.index
        els = self.elements
        rows = []
        for a in els:
            row = []
            for b in els:
                c = self._product(a, b)
                if c not in idx:
                    raise ClosureViolation(f"{a} * {b} = {c} is not an element")
                row.append(idx[c])
            rows.append(row)
        return rows

    @property
    def zero_index(self) -> Optional[int]:
        return None if self.zero is None else self.index[self.zero]

    @property
    def identity_index(self) -> Optional[int]:
        return None if self.identity is None else self.index[self.identity]

    @cached_property
    def idempotent_indices(self) -> tuple[int, ...]:
        t = self.table
        return tuple(i for i in range(len(t)) if t[i][i] == i)

    def multiply(self, a, b):
        return self.elements[self.table[self.index[a]][self.index[b]]]

    def __len__(self):
        return len(self.elements)


@dataclass(frozen=True, eq=False)
class FiniteSemigroup(_Table):
    n: int
    family: Optional[Family]
    elements: tuple[PartialInjection, ...]
    zero: Optional[PartialInjection]
    identity: Optional[PartialInjection]

    def _product(self, a, b):
        return chain.compose(a, b)


@dataclass(frozen=True, eq=False)
class ReesQuotient(_Table):
    n: int
    p: int
    nonzero_elements: tuple[PartialInjection, ...]
    zero: _Zero = field(default=ZERO)
    identity: None = None

    @property
    def elements(self) -> tuple:
        return (ZERO, *self.nonzero_elements)

    def _product(self, a, b):
        return quotient_product(self.p, a, b)


def build_semigroup(family, n: int, ceiling: int | None = None) -> FiniteSemigroup:
    family = Family.parse(family)
    elements = enumerate_oracle(family, n, ceiling)
    return semigroup_from_elements(n, elements, family)


def semigroup_from_elements(n: int, elements: Sequence[PartialInjection], family=None) -> FiniteSemigroup:
    elements = tuple(elements)
    members = set(elements)
    zero = chain.empty(n)
    full = chain.identity(n)
    S = FiniteSemigroup(
        n=n,
        family=family,
        elements=elements,
        zero=zero if zero in members else None,
        identity=full if full in members else None,
    )
    S.table  # noqa: B018 - builds the table, raising on any non-closed product
    if family is not None:
        for a in elements:
            if not member(family, a):
                raise ClosureViolation(f"{a} is not a member of {family.label}")
    return S


def _require(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise CeilingExceeded(f"{what} is limited to n <= {limit}, got n={n}")


# -- Green's relations -------------------------------------------------------

def _partition_by(keys: Sequence) -> list[list[int]]:
    groups: dict = {}
    for i, k in enumerate(keys):
        groups.setdefault(k, []).append(i)
    return list(groups.values())


def _join(parts_a: list[list[int]], parts_b: list[list[int]], size: int) -> list[list[int]]:
    """Join of two equivalences: breadth-first closure alternating between them."""
    cls_a = [0] * size
    cls_b = [0] * size
    for c, part in enumerate(parts_a):
        for i in part:
            cls_a[i] = c
    for c, part in enumerate(parts_b):
        for i in part:
            cls_b[i] = c
    seen = [False] * size
    out = []
    for start in range(size):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        block = []
        while queue:
            i = queue.popleft()
            block.append(i)
            for j in (*parts_a[cls_a[i]], *parts_b[cls_b[i]]):
                if not seen[j]:
                    seen[j] = True
                    queue.append(j)
        out.append(sorted(block))
    return out


def _meet(parts_a: list[list[int]], parts_b: list[list[int]], size: int) -> list[list[int]]:
    label_a = [0] * size
    label_b = [0] * size
    for c, part in enumerate(parts_a):
        for i in part:
            label_a[i] = c
    for c, part in enumerate(parts_b):
        for i in part:
            label_b[i] = c
    return _partition_by(list(zip(label_a, label_b)))


def _ideal_keys(S, side: str) -> list[frozenset]:
    t = S.table
    r = range(len(t))
    keys = []
    for a in r:
        if side == "left":
            ideal = {t[x][a] for x in r}
        elif side == "right":
            ideal = {t[a][x] for x in r}
        else:
            ideal = {t[t[x][a]][y] for x in r for y in r}
            ideal |= {t[x][a] for x in r} | {t[a][x] for x in r}
        ideal.add(a)
        keys.append(frozenset(ideal))
    return keys


def _greens_index_partition(S, rel: str) -> list[list[int]]:
    size = len(S.elements)
    if rel == "L":
        return _partition_by(_ideal_keys(S, "left"))
    if rel == "R":
        return _partition_by(_ideal_keys(S, "right"))
    if rel == "J":
        return _partition_by(_ideal_keys(S, "two"))
    left = _greens_index_partition(S, "L")
    right = _greens_index_partition(S, "R")
    if rel == "H":
        return _meet(left, right, size)
    if rel == "D":
        return _join(left, right, size)
    raise ValueError(f"unknown Green's relation {rel!r}")


def greens_classes(S, rel: str) -> list[list]:
    """Classes of L, R, H, D or J, each listed in element order."""
    _require(S.n, GREENS_CEILING, "Green's relation computation")
    rel = rel.upper()
    parts = _greens_index_partition(S, rel)
    return [[S.elements[i] for i in sorted(p)] for p in sorted(parts, key=min)]


def is_j_trivial(S) -> bool:
    return all(len(c) == 1 for c in greens_classes(S, "J"))


def nonregular_witness(S):
    """First element with no x such that axa = a, or None."""
    t = S.table
    r = range(len(t))
    for a in r:
        if not any(t[t[a][x]][a] == a for x in r):
            return S.elements[a]
    return None


def is_regular(S) -> bool:
    return nonregular_witness(S) is None


# -- starred relations -------------------------------------------------------

def leq_rstar(a: PartialInjection, b: PartialInjection) -> bool:
    _same_chain(a, b)
    return set(a.domain) <= set(b.domain)


def leq_lstar(a: PartialInjection, b: PartialInjection) -> bool:
    _same_chain(a, b)
    return set(a.image) <= set(b.image)


def leq_hstar(a: PartialInjection, b: PartialInjection) -> bool:
    return leq_rstar(a, b) and leq_lstar(a, b)


def _same_chain(a, b) -> None:
    if a.n != b.n:
        raise ChainMismatch(f"elements live on chains of size {a.n} and {b.n}")


def _with_one(S) -> list[Optional[int]]:
    """Indices of S^1; ``None`` stands for an adjoined identity when S has none."""
    r = list(range(len(S.elements)))
    return r if S.identity is not None else r + [None]


def _mul(t, a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return t[a][b]


def lstar_related_equational(S, a, b) -> bool:
    """a L* b iff for all x, y in S^1: ax = ay <=> bx = by."""
    t = S.table
    i, j = S.index[a], S.index[b]
    ones = _with_one(S)
    for x in ones:
        for y in ones:
            if (_mul(t, i, x) == _mul(t, i, y)) != (_mul(t, j, x) == _mul(t, j, y)):
                return False
    return True


def rstar_related_equational(S, a, b) -> bool:
    """a R* b iff for all x, y in S^1: xa = ya <=> xb = yb."""
    t = S.table
    i, j = S.index[a], S.index[b]
    ones = _with_one(S)
    for x in ones:
        for y in ones:
            if (_mul(t, x, i) == _mul(t, y, i)) != (_mul(t, x, j) == _mul(t, y, j)):
                return False
    return True


def _kernel_signature(values: list) -> tuple:
    first: dict = {}
    return tuple(first.setdefault(v, len(first)) for v in values)


def _starred_index_partition(S, rel: str) -> list[list[int]]:
    # Two elements are L*-related iff x -> ax and x -> bx have the same kernel
    # on S^1; this is the equational definition evaluated class-wise.
    t = S.table
    ones = _with_one(S)
    size = len(t)
    if rel == "L*":
        return _partition_by([_kernel_signature([_mul(t, a, x) for x in ones]) for a in range(size)])
    if rel == "R*":
        return _partition_by([_kernel_signature([_mul(t, x, a) for x in ones]) for a in range(size)])
    left = _starred_index_partition(S, "L*")
    right = _starred_index_partition(S, "R*")
    if rel == "H*":
        return _meet(left, right, size)
    if rel == "D*":
        return _join(left, right, size)
    raise ValueError(f"unknown starred relation {rel!r}")


def starred_classes(S, rel: str) -> list[list]:
    _require(S.n, GREENS_CEILING, "starred relation computation")
    rel = rel.upper()
    if not rel.endswith("*"):
        rel += "*"
    parts = _starred_index_partition(S, rel)
    return [[S.elements[i] for i in sorted(p)] for p in sorted(parts, key=min)]


def plus_idem(a: PartialInjection) -> PartialInjection:
    """The idempotent R*-related to ``a``: identity on its domain."""
    return chain.partial_identity(a.n, a.domain)


def star_idem(a: PartialInjection) -> PartialInjection:
    """The idempotent L*-related to ``a``: identity on its image."""
    return chain.partial_identity(a.n, a.image)


def exists_op_isometry(A, B) -> bool:
    """True when some order-preserving isometry maps A onto B (B is a translate of A)."""
    A, B = sorted(A), sorted(B)
    if len(A) != len(B):
        return False
    if not A:
        return True
    shift = B[0] - A[0]
    return all(b - a == shift for a, b in zip(A, B))


def leq_dstar(a: PartialInjection, b: PartialInjection) -> bool:
    _same_chain(a, b)
    return exists_op_isometry(a.domain, b.image)


def dstar_related(a: PartialInjection, b: PartialInjection) -> bool:
    return leq_dstar(a, b) and leq_dstar(b, a)


# -- abundance, adequacy, ampleness -----------------------------------------

def _starred_idempotent_map(S, rel: str) -> dict[int, Optional[int]]:
    """Map each element index to an idempotent in its starred class (None if absent)."""
    idem = set(S.idempotent_indices)
    out = {}
    for part in _starred_index_partition(S, rel):
        e = next((i for i in sorted(part) if i in idem), None)
        for i in part:
            out[i] = e
    return out


def is_abundant(S) -> bool:
    _require(S.n, ABUNDANCE_CEILING, "abundance checking")
    return all(e is not None for rel in ("L*", "R*") for e in _starred_idempotent_map(S, rel).values())


def idempotents_commute(S) -> bool:
    t = S.table
    E = S.idempotent_indices
    return all(t[e][f] == t[f][e] for e in E for f in E)


def is_adequate(S) -> bool:
    return is_abundant(S) and idempotents_commute(S)


def ample_witness(S):
    """First (a, e) breaking ea = a(ea)* or ae = (ae)+a, or None.

    Assumes S is adequate, so a* and a+ are the unique idempotents in the
    L*- and R*-classes of a.
    """
    t = S.table
    star = _starred_idempotent_map(S, "L*")
    plus = _starred_idempotent_map(S, "R*")
    for a in range(len(t)):
        for e in S.idempotent_indices:
            ea = t[e][a]
            ae = t[a][e]
            if ea != t[a][star[ea]] or ae != t[plus[ae]][a]:
                return S.elements[a], S.elements[e]
    return None


def is_ample(S) -> bool:
    return is_adequate(S) and ample_witness(S) is None


# -- 0-E-unitary and categorical --------------------------------------------
#
# A failing sweep reports the first witness, in element order, that is
# maximal for the natural partial order: no factor can be replaced by a
# strictly larger element of S (a <= b iff a = eb for an idempotent e) and
# still violate the property. For partial injections this means no factor
# extends to a larger map in S. Non-maximal witnesses are restrictions of a
# maximal one and carry no extra information.

def natural_leq(S, a: int, b: int) -> bool:
    t = S.table
    return any(t[e][b] == a for e in S.idempotent_indices)


def _strictly_above(S) -> list[list[int]]:
    r = range(len(S.elements))
    return [[b for b in r if b != a and natural_leq(S, a, b)] for a in r]


def _first_maximal(S, candidates, is_witness):
    above = None
    for w in candidates:
        if not is_witness(w):
            continue
        if above is None:
            above = _strictly_above(S)
        if not any(
            is_witness(w[:k] + (bigger,) + w[k + 1:])
            for k in range(len(w))
            for bigger in above[w[k]]
        ):
            return w
    return None


def is_zero_e_unitary(S):
    """Decide (for e in E', s in S) es in E' => s in E'.

    Returns ``(holds, witness)``; the witness is a pair ``(e, s)``.
    """
    t = S.table
    z = S.zero_index
    idem = set(S.idempotent_indices)
    nonzero_idem = [e for e in S.idempotent_indices if e != z]

    def violates(w):
        e, s = w
        if e not in idem or e == z:
            return False
        es = t[e][s]
        return es in idem and es != z and (s not in idem or s == z)

    found = _first_maximal(
        S, ((e, s) for e in nonzero_idem for s in range(len(t))), violates
    )
    if found is None:
        return True, None
    return False, tuple(S.elements[i] for i in found)


def is_categorical(S):
    """Decide abc = 0 => ab = 0 or bc = 0; returns ``(holds, (a, b, c))``."""
    if S.zero is None:
        raise ValueError("categorical check needs a semigroup with zero")
    if len(S.elements) > CATEGORICAL_MAX_SIZE:
        raise CeilingExceeded(
            f"categorical check is limited to {CATEGORICAL_MAX_SIZE} elements, got {len(S.elements)}"
        )
    t = S.table
    z = S.zero_index
    r = range(len(t))

    def violates(w):
        a, b, c = w
        ab = t[a][b]
        return ab != z and t[b][c] != z and t[ab][c] == z

    def candidates():
        for a in r:
            for b in r:
                ab = t[a][b]
                if ab == z:
                    continue
                row = t[ab]
                for c in r:
                    if row[c] == z and t[b][c] != z:
                        yield a, b, c

    found = _first_maximal(S, candidates(), violates)
    if found is None:
        return True, None
    return False, tuple(S.elements[i] for i in found)


# -- Rees quotients ----------------------------------------------------------

def quotient_product(p: int, a, b):
    if a is ZERO or b is ZERO:
        return ZERO
    c = chain.compose(a, b)
    return c if c.height == p else ZERO


def rees_quotient(n: int, p: int, ceiling: int | None = None) -> ReesQuotient:
    if not 1 <= p <= n:
        raise IndexOutOfRange(f"need 1 <= p <= n, got n={n}, p={p}")
    carrier = tuple(a for a in enumerate_oracle(Family.ODDP, n, ceiling) if a.height == p)
    Q = ReesQuotient(n=n, p=p, nonzero_elements=carrier)
    Q.table  # noqa: B018
    return Q


def quotient_compose(Q: ReesQuotient, a, b):
    for x in (a, b):
        if x is not ZERO and x not in Q.index:
            raise ValueError(f"{x} is not an element of Q({Q.n},{Q.p})")
    return quotient_product(Q.p, a, b)


def is_associative(S) -> bool:
    t = S.table
    r = range(len(t))
    return all(t[t[a][b]][c] == t[a][t[b][c]] for a in r for b in r for c in r)
