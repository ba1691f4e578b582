from itertools import product

import pytest
from hypothesis import strategies as st

from isochain.chain import PartialInjection


def all_maps(n):
    """Every partial injection of {1..n} as a dict, via product over {None, 1..n}^n.

    Deliberately independent of the library's subset/permutation enumerator.
    """
    points = range(1, n + 1)
    for choice in product([None, *points], repeat=n):
        m = {x: y for x, y in zip(points, choice) if y is not None}
        if len(set(m.values())) == len(m):
            yield m


def ref_isometry(m):
    return all(abs(x - y) == abs(m[x] - m[y]) for x in m for y in m)


def ref_order_preserving(m):
    return all(m[x] <= m[y] for x in m for y in m if x <= y)


def ref_order_reversing(m):
    return all(m[x] >= m[y] for x in m for y in m if x <= y)


def ref_decreasing(m):
    return all(m[x] <= x for x in m)


REF_MEMBER = {
    "i": lambda m: True,
    "iminus": ref_decreasing,
    "dp": ref_isometry,
    "odp": lambda m: ref_isometry(m) and ref_order_preserving(m),
    "ddp": lambda m: ref_isometry(m) and ref_decreasing(m),
    "oddp": lambda m: ref_isometry(m) and ref_decreasing(m) and ref_order_preserving(m),
}


def ref_family(family, n):
    return [m for m in all_maps(n) if REF_MEMBER[family](m)]


def to_element(n, m):
    return PartialInjection(n, m.items())


@st.composite
def partial_injections(draw, min_n=0, max_n=6, n=None):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    points = list(range(1, n + 1))
    dom = draw(st.lists(st.sampled_from(points), unique=True)) if points else []
    img = draw(st.permutations(points))[: len(dom)] if points else []
    return PartialInjection(n, zip(dom, img))


# -- acceptance summary -------------------------------------------------------

_ACCEPTANCE: dict[str, list[tuple[str, str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, title = marker.args
    _ACCEPTANCE.setdefault(number, []).append((title, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        parts = _ACCEPTANCE[number]
        ok = all(outcome == "passed" for _, outcome in parts)
        failed = [t for t, o in parts if o != "passed"]
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({len(parts) - len(failed)}/{len(parts)} checks)"
        if failed:
            line += " failing: " + "; ".join(failed)
        terminalreporter.write_line(line)
