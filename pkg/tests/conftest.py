import itertools

import numpy as np
import pytest

from lcdhull.code import code_make, random_generator
from lcdhull.gf import field_of_order


def random_code(q, n, k, rng):
    F = field_of_order(q)
    return code_make(F, random_generator(F, n, k, rng))


def random_codes(q, count, rng, n_max, n_min=1, k_max=None):
    """``count`` random codes with n in [n_min, n_max] and 1 <= k <= n."""
    out = []
    for _ in range(count):
        n = int(rng.integers(n_min, n_max + 1))
        k = int(rng.integers(1, min(n, k_max or n) + 1))
        out.append(random_code(q, n, k, rng))
    return out


def dot(F, a, b):
    acc = 0
    for x, y in zip(a, b):
        acc = int(F.add(acc, F.mul(int(x), int(y))))
    return acc


def brute_codewords(C):
    """All codewords by scalar arithmetic, one message at a time."""
    F = C.field
    rows = C.G.tolist()
    for msg in itertools.product(range(F.q), repeat=C.k):
        cw = [0] * C.n
        for c, row in zip(msg, rows):
            for j, g in enumerate(row):
                cw[j] = int(F.add(cw[j], F.mul(c, g)))
        yield tuple(cw)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


ACCEPTANCE_RESULTS = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.split("::")[-1]
    if "test_acceptance.py" in report.nodeid and report.when == "call" and name.startswith("test_criterion_"):
        ACCEPTANCE_RESULTS[name] = (report.passed, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, (passed, secs) in sorted(ACCEPTANCE_RESULTS.items(), key=lambda kv: int(kv[0].split("_")[2])):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  ({secs:.2f} s)")
