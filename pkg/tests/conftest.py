import random

import pytest

from cubepath.symmetry import parse_config

# The four configurations of Q(4) with no covering path, in normal form.
A = parse_config("0000 1111 1122 2211")
B = parse_config("0000 1111 0022 2200")
C = parse_config("0000 0001 1110 2221")
D = parse_config("0000 0011 1100 1111")
ABCD = (A, B, C, D)


def random_vertex(rng, d):
    return tuple(rng.randrange(3) for _ in range(d))


def random_config(rng, d, k=4):
    while True:
        c = tuple(random_vertex(rng, d) for _ in range(k))
        if len(set(c)) == k:
            return c


@pytest.fixture
def rng():
    return random.Random(20240611)


_CRITERIA = {}


@pytest.fixture
def criterion():
    """Record the outcome of an acceptance criterion for the summary."""

    def record(n, ok, detail=""):
        _CRITERIA[n] = (ok, detail)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        ok, detail = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
