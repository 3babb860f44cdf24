import functools

import pytest
from hypothesis import HealthCheck, settings

from orbitgraph import constructors as C
from orbitgraph.catalog import catalog_entry, order12_group

settings.register_profile(
    "repo",
    derandomize=True,
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
settings.load_profile("repo")

SMALL_BUILDERS = {
    "Z1": lambda: C.cyclic(1),
    "Z2": lambda: C.cyclic(2),
    "Z6": lambda: C.cyclic(6),
    "Z12": lambda: C.cyclic(12),
    "Z2^3": lambda: C.elementary_abelian(2, 3),
    "Z3^2": lambda: C.elementary_abelian(3, 2),
    "D8": lambda: C.dihedral(8),
    "D10": lambda: C.dihedral(10),
    "D12": lambda: C.dihedral(12),
    "Q8": C.quaternion8,
    "S3": lambda: C.sym(3),
    "S4": lambda: C.sym(4),
    "A4": lambda: C.alt(4),
    "A5": lambda: C.alt(5),
    "SL(2,3)": lambda: C.sl2(3),
    "Z3:Z4": order12_group,
    "3^(1+2)": lambda: C.extraspecial_p3_exp_p(3),
}


@functools.lru_cache(maxsize=None)
def small_group(name):
    return SMALL_BUILDERS[name]()


@pytest.fixture(scope="session")
def entry():
    return catalog_entry


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
