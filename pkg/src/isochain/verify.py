"""Named invariant checks grouped into suites for ``isochain verify``.

Every check sweeps exhaustively up to ``min(max_n, cap)`` and returns a
``CheckResult``; a failing result carries the first counterexample found.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import algebra, chain, counting
from .families import Family, enumerate_fast, enumerate_oracle, member

SUITES = ("lemmas", "formulas", "greens", "structure")

# Per-suite ceilings; `--max-n` never pushes a suite beyond these.
CAPS = {"lemmas": 7, "formulas": 7, "greens": 4, "j_trivial": 5, "structure": 4, "quotients": 6}


@dataclass(frozen=True)
class CheckResult:
    name: str
    suite: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f" {self.detail}" if self.detail else ""
        return f"{status} {self.suite}/{self.name}{tail}"


_REGISTRY: list[tuple[str, str, Callable[[int], tuple[bool, str]]]] = []


def check(suite: str, name: str):
    def register(fn):
        _REGISTRY.append((suite, name, fn))
        return fn

    return register


def _first(iterable):
    return next(iter(iterable), None)


def _elements_fail(family, top: int, predicate) -> tuple[bool, str]:
    for n in range(top + 1):
        bad = _first(a for a in enumerate_oracle(family, n) if not predicate(a))
        if bad is not None:
            return False, f"counterexample {chain.to_text(bad)}"
    return True, f"n<={top}"


# -- lemmas -----------------------------------------------------------------

@check("lemmas", "fix_is_0_1_or_height")
def _fix_values(max_n):
    top = min(max_n, CAPS["lemmas"])

    def ok(a):
        return len(chain.fixed_points(a)) in (0, 1, a.height)

    return _elements_fail(Family.DDP, top, ok)


@check("lemmas", "fixed_point_fixes_everything_below")
def _below_fixed(max_n):
    top = min(max_n, CAPS["lemmas"])

    def ok(a):
        fixed = chain.fixed_points(a)
        return all(x == y for x, y in a.pairs for i in fixed if x < i)

    return _elements_fail(Family.DDP, top, ok)


@check("lemmas", "single_fix_domain_above_fixed_point")
def _single_fix_domain(max_n):
    top = min(max_n, CAPS["lemmas"])

    def ok(a):
        fixed = chain.fixed_points(a)
        return len(fixed) != 1 or min(a.domain) >= fixed[0]

    return _elements_fail(Family.DDP, top, ok)


@check("lemmas", "boundary_fix_gives_partial_identity")
def _boundary_fix(max_n):
    top = min(max_n, CAPS["lemmas"])

    def ok(a):
        fixed = chain.fixed_points(a)
        if 1 in fixed or a.n in fixed:
            return chain.is_partial_identity(a)
        return True

    return _elements_fail(Family.DP, top, ok)


@check("lemmas", "top_point_fixed_when_in_domain_and_image")
def _top_fixed(max_n):
    top = min(max_n, CAPS["lemmas"])

    def ok(a):
        if a.n in a.domain and a.n in a.image:
            return a[a.n] == a.n
        return True

    return _elements_fail(Family.ODP, top, ok)


@check("lemmas", "order_preserving_with_fix_is_idempotent")
def _op_fix_idempotent(max_n):
    top = min(max_n, CAPS["lemmas"])

    def ok(a):
        return not chain.fixed_points(a) or chain.is_idempotent(a)

    return _elements_fail(Family.ODP, top, ok)


@check("lemmas", "constant_shift")
def _constant_shift(max_n):
    top = min(max_n, CAPS["lemmas"])

    def ok(a):
        return len({x - y for x, y in a.pairs}) <= 1

    return _elements_fail(Family.ODDP, top, ok)


@check("lemmas", "single_interior_fix_reflects")
def _reflection(max_n):
    top = min(max_n, CAPS["lemmas"])

    def ok(a):
        fixed = chain.fixed_points(a)
        if len(fixed) == 1 and 1 < fixed[0] < a.n:
            return all(x + y == 2 * fixed[0] for x, y in a.pairs)
        return True

    return _elements_fail(Family.DDP, top, ok)


@check("lemmas", "isometry_is_monotone")
def _monotone(max_n):
    top = min(max_n, CAPS["lemmas"])

    def ok(a):
        return chain.is_order_preserving(a) or chain.is_order_reversing(a)

    return _elements_fail(Family.DP, top, ok)


@check("lemmas", "family_intersections")
def _intersections(max_n):
    top = min(max_n, CAPS["lemmas"])
    for n in range(top + 1):
        universe = enumerate_oracle(Family.I, n)
        for a in universe:
            dec = member(Family.I_MINUS, a)
            if member(Family.DDP, a) != (member(Family.DP, a) and dec):
                return False, f"DDP != DP & I^- at {chain.to_text(a)}"
            if member(Family.ODDP, a) != (member(Family.ODP, a) and dec):
                return False, f"ODDP != ODP & I^- at {chain.to_text(a)}"
    return True, f"n<={top}"


@check("lemmas", "fast_equals_oracle")
def _fast_oracle(max_n):
    top = min(max_n, CAPS["lemmas"])
    for fam in (Family.DDP, Family.ODDP):
        for n in range(top + 1):
            if enumerate_fast(fam, n) != enumerate_oracle(fam, n):
                return False, f"{fam.value} differs at n={n}"
    return True, f"n<={top}"


# -- formulas ---------------------------------------------------------------

@check("formulas", "oddp_order")
def _oddp_order(max_n):
    top = min(max_n, CAPS["formulas"])
    for n in range(top + 1):
        got = counting.order(Family.ODDP, n)
        if got != counting.closed_order_oddp(n):
            return False, f"n={n}: brute {got} vs closed {counting.closed_order_oddp(n)}"
    return True, f"n<={top}"


@check("formulas", "ddp_order_recurrence")
def _ddp_order(max_n):
    top = min(max_n, CAPS["formulas"])
    for n in range(top + 1):
        got = counting.order(Family.DDP, n)
        if got != counting.closed_order_ddp(n):
            return False, f"n={n}: brute {got} vs recurrence {counting.closed_order_ddp(n)}"
    return True, f"n<={top}"


@check("formulas", "oddp_height_binomial")
def _height_binomial(max_n):
    top = min(max_n, CAPS["formulas"])
    for n in range(top + 1):
        row = counting.count_by_height(Family.ODDP, n)
        for p in range(n + 1):
            if row[p] != counting.closed_height_oddp(n, p):
                return False, f"F({n};{p}) = {row[p]}"
    return True, f"n<={top}"


@check("formulas", "oddp_height_pascal")
def _pascal(max_n):
    top = min(max_n, CAPS["formulas"])
    for n in range(2, top + 1):
        row = counting.count_by_height(Family.ODDP, n)
        prev = counting.count_by_height(Family.ODDP, n - 1)
        for p in range(2, n + 1):
            below = prev[p] if p <= n - 1 else 0
            if row[p] != prev[p - 1] + below:
                return False, f"F({n};{p})"
    return True, f"n<={top}"


@check("formulas", "fix_closed_forms")
def _fix_closed(max_n):
    top = min(max_n, CAPS["formulas"])
    for fam in (Family.DDP, Family.ODDP):
        for n in range(top + 1):
            row = counting.count_by_fix(fam, n)
            for m in range(n + 1):
                if row[m] != counting.closed_fix(fam, n, m):
                    return False, f"{fam.value} F({n};{m}) = {row[m]}"
    return True, f"n<={top}"


@check("formulas", "zero_fix_column_is_previous_order")
def _zero_fix(max_n):
    top = min(max_n, CAPS["formulas"])
    for fam in (Family.DDP, Family.ODDP, Family.I_MINUS):
        for n in range(1, top + 1):
            if counting.count_by_fix(fam, n)[0] != counting.order(fam, n - 1):
                return False, f"{fam.value} n={n}"
    return True, f"n<={top}"


@check("formulas", "row_sums")
def _row_sums(max_n):
    top = min(max_n, CAPS["formulas"])
    for fam in Family:
        for n in range(min(top, 6) + 1):
            total = counting.order(fam, n)
            if sum(counting.count_by_height(fam, n)) != total or sum(counting.count_by_fix(fam, n)) != total:
                return False, f"{fam.value} n={n}"
    return True, f"n<={top}"


# -- greens -----------------------------------------------------------------

@check("greens", "j_trivial")
def _j_trivial(max_n):
    top = min(max_n, CAPS["j_trivial"])
    for fam in (Family.DDP, Family.ODDP):
        for n in range(top + 1):
            S = algebra.build_semigroup(fam, n)
            for rel in "LRHDJ":
                if any(len(c) > 1 for c in algebra.greens_classes(S, rel)):
                    return False, f"{fam.value} n={n} relation {rel}"
    return True, f"n<={top}"


@check("greens", "starred_by_domain_and_image")
def _starred(max_n):
    top = min(max_n, CAPS["greens"])
    for fam in (Family.DDP, Family.ODDP):
        for n in range(top + 1):
            S = algebra.build_semigroup(fam, n)
            for a in S.elements:
                for b in S.elements:
                    lstar = algebra.lstar_related_equational(S, a, b)
                    rstar = algebra.rstar_related_equational(S, a, b)
                    if lstar != (set(a.image) == set(b.image)):
                        return False, f"L* at {chain.to_text(a)} / {chain.to_text(b)}"
                    if rstar != (set(a.domain) == set(b.domain)):
                        return False, f"R* at {chain.to_text(a)} / {chain.to_text(b)}"
    return True, f"n<={top}"


@check("greens", "dstar_join_matches_translates")
def _dstar(max_n):
    top = min(max_n, CAPS["j_trivial"])
    for n in range(top + 1):
        S = algebra.build_semigroup(Family.ODDP, n)
        label = {}
        for k, cls in enumerate(algebra.starred_classes(S, "D*")):
            for a in cls:
                label[a] = k
        for a in S.elements:
            for b in S.elements:
                if (label[a] == label[b]) != algebra.dstar_related(a, b):
                    return False, f"n={n} at {chain.to_text(a)} / {chain.to_text(b)}"
    return True, f"n<={top}"


@check("greens", "idempotents_are_partial_identities")
def _idempotents(max_n):
    top = min(max_n, CAPS["greens"])
    for fam in (Family.DDP, Family.ODDP):
        for n in range(top + 1):
            S = algebra.build_semigroup(fam, n)
            E = {S.elements[i] for i in S.idempotent_indices}
            expected = {a for a in enumerate_oracle(Family.I, n) if chain.is_partial_identity(a)}
            if E != expected:
                return False, f"{fam.value} n={n}"
    return True, f"n<={top}"


# -- structure --------------------------------------------------------------

@check("structure", "ample_and_not_regular")
def _ample(max_n):
    top = min(max_n, CAPS["structure"])
    for fam in (Family.DDP, Family.ODDP):
        for n in range(top + 1):
            S = algebra.build_semigroup(fam, n)
            if not algebra.is_ample(S):
                return False, f"{fam.value} n={n} not ample"
            if algebra.is_regular(S) != (n <= 1):
                return False, f"{fam.value} n={n} regularity"
    return True, f"n<={top}"


@check("structure", "oddp_zero_e_unitary")
def _oddp_0eu(max_n):
    top = min(max_n, CAPS["quotients"])
    for n in range(top + 1):
        ok, w = algebra.is_zero_e_unitary(algebra.build_semigroup(Family.ODDP, n))
        if not ok:
            return False, f"n={n} witness {_fmt(w)}"
    return True, f"n<={top}"


@check("structure", "ddp_not_zero_e_unitary")
def _ddp_0eu(max_n):
    top = min(max_n, CAPS["quotients"])
    for n in range(3, top + 1):
        ok, _ = algebra.is_zero_e_unitary(algebra.build_semigroup(Family.DDP, n))
        if ok:
            return False, f"n={n} unexpectedly 0-E-unitary"
    return True, f"3<=n<={top}"


@check("structure", "oddp_not_categorical")
def _oddp_cat(max_n):
    top = min(max_n, CAPS["quotients"])
    for n in range(3, top + 1):
        ok, _ = algebra.is_categorical(algebra.build_semigroup(Family.ODDP, n))
        if ok:
            return False, f"n={n} unexpectedly categorical"
    return True, f"3<=n<={top}"


@check("structure", "rees_quotients")
def _quotients(max_n):
    top = min(max_n, CAPS["quotients"])
    for n in range(1, top + 1):
        for p in range(1, n + 1):
            Q = algebra.rees_quotient(n, p)
            if len(Q.nonzero_elements) != counting.closed_height_oddp(n, p):
                return False, f"|Q({n},{p})|"
            cat, w = algebra.is_categorical(Q)
            if not cat:
                return False, f"Q({n},{p}) not categorical: {_fmt(w)}"
            zeu, w = algebra.is_zero_e_unitary(Q)
            if not zeu:
                return False, f"Q({n},{p}) not 0-E-unitary: {_fmt(w)}"
    return True, f"1<=p<=n<={top}"


def _fmt(witness) -> str:
    return " / ".join(str(x) for x in witness) if witness else ""


def run_suite(suite: str, max_n: int) -> list[CheckResult]:
    wanted = SUITES if suite == "all" else (suite,)
    if any(s not in SUITES for s in wanted):
        raise ValueError(f"unknown suite {suite!r}")
    results = []
    for s, name, fn in _REGISTRY:
        if s in wanted:
            ok, detail = fn(max_n)
            results.append(CheckResult(name, s, ok, detail))
    return results
