import itertools
import random

import pytest

from kdet.number_field import Signature

GRID = [complex(a, b) for a, b in itertools.product((0.3, 1.0, 1.7, 2.0, 3.5), (0.0, 0.5, -0.5, 2.0, -2.0))]

SIGNATURES = [Signature.of(r1, r2) for r1, r2 in ((1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 1))]


def random_x_points(n=50, seed=20221):
    rng = random.Random(seed)
    return [complex(rng.uniform(0.1, 10.0), rng.uniform(-5.0, 5.0)) for _ in range(n)]


def random_s_away_from_poles(n=200, seed=7):
    """|s| <= 10, at distance > 0.1 from the poles of gamma_C and gamma_R(s+1)."""
    rng = random.Random(seed)
    poles = [complex(-k, 0) for k in range(0, 12)]
    out = []
    while len(out) < n:
        s = complex(rng.uniform(-10, 10), rng.uniform(-10, 10))
        if abs(s) <= 10 and min(abs(s - p) for p in poles) > 0.1:
            out.append(s)
    return out


@pytest.fixture
def x_points():
    return random_x_points()


@pytest.fixture(params=SIGNATURES, ids=lambda s: f"r1={s.r1},r2={s.r2}")
def sig(request):
    return request.param


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
