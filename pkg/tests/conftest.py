import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from sympow.arith import QQ, Field, PolyRing, xyz_ring

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=300, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_CRITERIA: list[tuple[int, str, str, float]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion checked by this test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[rep.outcome]
        _CRITERIA.append((mark.args[0], mark.args[1], status, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n, text, status, secs in sorted(_CRITERIA):
        terminalreporter.write_line(f"criterion {n}: {status}  {text}  ({secs:.2f} s)")


# -- strategies ------------------------------------------------------------------

FIELDS = [Field(), Field(7), QQ]


def coefficients(field: Field):
    if field.characteristic:
        return st.integers(-field.characteristic + 1, field.characteristic - 1)
    return st.fractions(min_value=-20, max_value=20, max_denominator=6)


@st.composite
def polynomials(draw, ring: PolyRing, max_terms: int = 5, max_exp: int = 3, homogeneous_weights=None):
    exps = st.tuples(*[st.integers(0, max_exp)] * ring.nvars)
    terms = draw(st.lists(st.tuples(exps, coefficients(ring.field)), max_size=max_terms))
    f = ring.zero()
    for e, c in terms:
        f = f + ring.monomial(e, c)
    return f


@st.composite
def monomials(draw, ring: PolyRing, max_exp: int = 3):
    return tuple(draw(st.integers(0, max_exp)) for _ in range(ring.nvars))


@st.composite
def binomials(draw, ring: PolyRing, max_exp: int = 3):
    """Homogeneous (standard grading) binomials, so their ideals are graded."""
    d = draw(st.integers(1, max_exp))
    def mono():
        a = draw(st.integers(0, d))
        b = draw(st.integers(0, d - a))
        return (a, b, d - a - b)
    u, v = mono(), mono()
    return ring.monomial(u) - ring.monomial(v)


@pytest.fixture
def R():
    return xyz_ring()


@pytest.fixture
def Rq():
    return xyz_ring(QQ)
