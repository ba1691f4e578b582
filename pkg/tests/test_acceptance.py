"""Exit criteria. Each test carries a ``criterion`` marker; the conftest prints
one PASS/FAIL line per criterion at the end of the run."""
import math
import time
from pathlib import Path

import pytest

from isochain import algebra, chain, counting
from isochain.chain import make, partial_identity
from isochain.cli import main
from isochain.families import Family, _oracle, enumerate_fast, enumerate_oracle
from isochain.verify import run_suite

FIXTURES = Path(__file__).parent / "fixtures"
criterion = pytest.mark.criterion


def cold():
    _oracle.cache_clear()


def pid(n, *points):
    return partial_identity(n, points)


# 1 ---------------------------------------------------------------------------

@criterion(1, "ODDP orders")
def test_c1_oddp_orders():
    cold()
    start = time.perf_counter()
    orders = [counting.order(Family.ODDP, n) for n in range(8)]
    elapsed = time.perf_counter() - start
    assert orders == [1, 2, 5, 12, 27, 58, 121, 248]
    assert orders == [2 ** (n + 1) - (n + 1) for n in range(8)]
    assert orders == [counting.closed_order_oddp(n) for n in range(8)]
    assert elapsed < 5.0, f"took {elapsed:.2f}s"


# 2 ---------------------------------------------------------------------------

@criterion(2, "DDP orders")
def test_c2_ddp_orders():
    cold()
    start = time.perf_counter()
    orders = [counting.order(Family.DDP, n) for n in range(8)]
    elapsed = time.perf_counter() - start
    assert orders == [1, 2, 5, 13, 30, 66, 137, 279]
    assert orders == [counting.closed_order_ddp(n) for n in range(8)]
    assert elapsed < 5.0, f"took {elapsed:.2f}s"


# 3 ---------------------------------------------------------------------------

@criterion(3, "triangles byte-exact")
@pytest.mark.parametrize(
    "family, stat, fixture",
    [("oddp", "height", "oddp_height.csv"), ("oddp", "fix", "oddp_fix.csv"), ("ddp", "fix", "ddp_fix.csv")],
)
def test_c3_tables(family, stat, fixture, capsysbinary):
    code = main(["table", "--family", family, "--stat", stat, "--max-n", "7", "--format", "csv"])
    out = capsysbinary.readouterr().out
    assert code == 0
    assert out == (FIXTURES / fixture).read_bytes()


# 4 ---------------------------------------------------------------------------

@criterion(4, "closed forms")
def test_c4_height_binomials():
    for n in range(1, 8):
        row = counting.count_by_height(Family.ODDP, n)
        for p in range(1, n + 1):
            assert row[p] == counting.closed_height_oddp(n, p) == math.comb(n + 1, p + 1)


@criterion(4, "closed forms")
def test_c4_fix_binomials():
    for n in range(1, 8):
        oddp = counting.count_by_fix(Family.ODDP, n)
        ddp = counting.count_by_fix(Family.DDP, n)
        for m in range(1, n + 1):
            assert oddp[m] == math.comb(n, m)
        for m in range(2, n + 1):
            assert ddp[m] == math.comb(n, m)


@criterion(4, "closed forms")
def test_c4_single_fix_parity():
    for k in range(1, 4):
        assert counting.count_by_fix(Family.DDP, 2 * k)[1] == 2 ** (k + 1) - 2
    for k in range(1, 5):
        assert counting.count_by_fix(Family.DDP, 2 * k - 1)[1] == 3 * 2 ** (k - 1) - 2


@criterion(4, "closed forms")
def test_c4_pascal():
    for n in range(2, 8):
        row = counting.count_by_height(Family.ODDP, n)
        prev = counting.count_by_height(Family.ODDP, n - 1) + [0]
        for p in range(2, n + 1):
            assert row[p] == prev[p - 1] + prev[p]


# 5 ---------------------------------------------------------------------------

@criterion(5, "zero-fix column")
def test_c5_zero_fix_column():
    for fam in (Family.DDP, Family.ODDP, Family.I_MINUS):
        for n in range(1, 8):
            assert counting.count_by_fix(fam, n)[0] == counting.order(fam, n - 1), (fam, n)


# 6 ---------------------------------------------------------------------------

def _counterexamples(family, predicate):
    return [a for n in range(8) for a in enumerate_oracle(family, n) if not predicate(a)]


@criterion(6, "lemma suite")
def test_c6_verify_suite():
    results = run_suite("lemmas", 7)
    assert results and all(r.ok for r in results), [r.line() for r in results if not r.ok]


@criterion(6, "lemma suite")
def test_c6_fix_values():
    assert _counterexamples(Family.DDP, lambda a: len(chain.fixed_points(a)) in (0, 1, a.height)) == []


@criterion(6, "lemma suite")
def test_c6_constant_shift():
    assert _counterexamples(Family.ODDP, lambda a: len({x - y for x, y in a.pairs}) <= 1) == []


@criterion(6, "lemma suite")
def test_c6_reflection():
    def ok(a):
        f = chain.fixed_points(a)
        if len(f) == 1 and 1 < f[0] < a.n:
            return all(x + y == 2 * f[0] for x, y in a.pairs)
        return True

    assert _counterexamples(Family.DDP, ok) == []


@criterion(6, "lemma suite")
def test_c6_boundary_fix():
    def ok(a):
        f = chain.fixed_points(a)
        return not (1 in f or a.n in f) or chain.is_partial_identity(a)

    assert _counterexamples(Family.DP, ok) == []


@criterion(6, "lemma suite")
def test_c6_monotone():
    assert _counterexamples(
        Family.DP, lambda a: chain.is_order_preserving(a) or chain.is_order_reversing(a)
    ) == []


# 7 ---------------------------------------------------------------------------

@criterion(7, "structure: J-trivial n<=5")
def test_c7_j_trivial():
    def body():
        for fam in (Family.DDP, Family.ODDP):
            for n in range(6):
                assert algebra.is_j_trivial(algebra.build_semigroup(fam, n)), (fam, n)

    body()


@criterion(7, "structure: ample, non-regular n<=4")
def test_c7_ample_nonregular():
    def body():
        for fam in (Family.DDP, Family.ODDP):
            for n in range(5):
                S = algebra.build_semigroup(fam, n)
                assert algebra.is_ample(S), (fam, n)
                if n >= 2:
                    assert not algebra.is_regular(S), (fam, n)

    body()


@criterion(7, "structure: ODDP 0-E-unitary n<=4")
def test_c7_oddp_zero_e_unitary():
    def body():
        for n in range(5):
            assert algebra.is_zero_e_unitary(algebra.build_semigroup(Family.ODDP, n)) == (True, None)

    body()


@criterion(7, "structure: DDP_3 0-E-unitary witness")
def test_c7_ddp3_witness():
    ok, witness = algebra.is_zero_e_unitary(algebra.build_semigroup(Family.DDP, 3))
    assert not ok
    assert witness == (pid(3, 1, 2), make(3, [(2, 2), (3, 1)]))


@criterion(7, "structure: ODDP_3 categorical witness")
def test_c7_oddp3_categorical_witness():
    ok, witness = algebra.is_categorical(algebra.build_semigroup(Family.ODDP, 3))
    assert not ok
    assert witness == (pid(3, 1, 2), pid(3, 2, 3), pid(3, 1, 3))


@criterion(7, "structure: Q(n,p) n<=6")
def test_c7_quotients():
    def body():
        for n in range(1, 7):
            for p in range(1, n + 1):
                Q = algebra.rees_quotient(n, p)
                assert algebra.is_categorical(Q) == (True, None), (n, p)
                assert algebra.is_zero_e_unitary(Q) == (True, None), (n, p)

    body()


@criterion(7, "structure: runtime < 60 s")
def test_c7_runtime():
    cold()
    start = time.perf_counter()
    for fam in (Family.DDP, Family.ODDP):
        for n in range(6):
            S = algebra.build_semigroup(fam, n)
            algebra.is_j_trivial(S)
            if n <= 4:
                algebra.is_ample(S)
                algebra.is_regular(S)
                algebra.is_zero_e_unitary(S)
    algebra.is_categorical(algebra.build_semigroup(Family.ODDP, 3))
    for n in range(1, 7):
        for p in range(1, n + 1):
            Q = algebra.rees_quotient(n, p)
            algebra.is_categorical(Q)
            algebra.is_zero_e_unitary(Q)
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0, f"took {elapsed:.2f}s"


# 8 ---------------------------------------------------------------------------

@criterion(8, "oracle equivalence")
def test_c8_fast_equals_oracle():
    for fam in (Family.DDP, Family.ODDP):
        for n in range(8):
            assert enumerate_fast(fam, n) == enumerate_oracle(fam, n), (fam, n)


@criterion(8, "oracle equivalence")
def test_c8_starred_characterization():
    for fam in (Family.DDP, Family.ODDP):
        for n in range(5):
            S = algebra.build_semigroup(fam, n)
            for a in S.elements:
                for b in S.elements:
                    assert algebra.lstar_related_equational(S, a, b) == (set(a.image) == set(b.image))
                    assert algebra.rstar_related_equational(S, a, b) == (set(a.domain) == set(b.domain))


@criterion(8, "oracle equivalence")
def test_c8_dstar_join():
    for n in range(6):
        S = algebra.build_semigroup(Family.ODDP, n)
        label = {a: k for k, cls in enumerate(algebra.starred_classes(S, "D*")) for a in cls}
        for a in S.elements:
            for b in S.elements:
                assert (label[a] == label[b]) == algebra.dstar_related(a, b)
