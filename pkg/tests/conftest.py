from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from hexpansive.matrix import Matrix
from hexpansive.scalars import GaussianRational

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def scalars(draw, complex_entries=None):
    cx = draw(st.booleans()) if complex_entries is None else complex_entries
    im = draw(rationals) if cx else 0
    return GaussianRational(draw(rationals), im)


@st.composite
def matrices(draw, rows=st.integers(0, 5), cols=st.integers(0, 5), complex_entries=None):
    r, c = draw(rows), draw(cols)
    cx = draw(st.booleans()) if complex_entries is None else complex_entries
    ent = [[draw(scalars(cx)) for _ in range(c)] for _ in range(r)]
    return Matrix(ent, rows=r, cols=c)


@st.composite
def low_rank_matrices(draw, max_dim=6):
    """Products B C with a random inner rank, so rank deficiency is common."""
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    k = draw(st.integers(0, min(r, c)))
    cx = draw(st.booleans())
    b = draw(matrices(st.just(r), st.just(k), cx))
    d = draw(matrices(st.just(k), st.just(c), cx))
    return b @ d


@st.composite
def hermitian_matrices(draw, n=st.integers(1, 6)):
    size = draw(n)
    cx = draw(st.booleans())
    rows = [[GaussianRational(0)] * size for _ in range(size)]
    # sparse-ish so zero diagonals and singular cases show up
    for i in range(size):
        rows[i][i] = GaussianRational(draw(st.sampled_from([0, 0, 1, -1, 2, Fraction(-1, 2)])))
        for j in range(i + 1, size):
            z = draw(st.one_of(st.just(GaussianRational(0)), scalars(cx)))
            rows[i][j] = z
            rows[j][i] = z.conjugate()
    return Matrix(rows, rows=size, cols=size)


# ---------------------------------------------------------------------------
# acceptance reporting: one line per criterion in the terminal summary

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = _criteria_meta.get(report.nodeid)
    if marker is None:
        return
    num, title = marker
    prev = _criteria.get(num, (title, True))
    _criteria[num] = (title, prev[1] and report.passed)


_criteria_meta = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _criteria_meta[item.nodeid] = (m.args[0], m.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        title, ok = _criteria[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {title}")
