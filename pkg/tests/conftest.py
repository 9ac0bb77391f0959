import pytest

from curvelab.census import Census
from curvelab.surface import SurfaceKind, standard_triangulation


def census_for(g, n, bound):
    key = (g, n, bound)
    if key not in _CACHE:
        _CACHE[key] = Census(standard_triangulation(SurfaceKind(g, n)), bound)
    return _CACHE[key]


_CACHE = {}


@pytest.fixture(scope="session")
def s11():
    return census_for(1, 1, 8)


@pytest.fixture(scope="session")
def s12():
    return census_for(1, 2, 12)


@pytest.fixture(scope="session")
def s13():
    return census_for(1, 3, 12)


@pytest.fixture(scope="session")
def s05():
    return census_for(0, 5, 12)


# acceptance criteria record their outcome here; printed after the run
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def record(criterion: str, ok: bool, detail: str) -> None:
    ACCEPTANCE[criterion] = (ok, detail)
    print(f"{criterion} {'PASS' if ok else 'FAIL'}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"{name} {'PASS' if ok else 'FAIL'}: {detail}")
