import os
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from copocert import random_instance, solve_box_qp_lcp, face_enumerate_min  # noqa: E402

ACCEPTANCE_LINES = []


def corpus_instances(count=200, bound=9):
    """The seeded random corpus shared by the acceptance criteria: n cycles 1..4."""
    return [random_instance("symmetric", 1 + i % 4, bound, i) for i in range(count)]


class Corpus(list):
    solve_seconds = 0.0


@pytest.fixture(scope="session")
def corpus():
    """(M, lcp result, oracle result) triples; ``solve_seconds`` times both solvers."""
    out = Corpus()
    started = time.perf_counter()
    for M in corpus_instances():
        out.append((M, solve_box_qp_lcp(M), face_enumerate_min(M)))
    out.solve_seconds = time.perf_counter() - started
    return out


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
