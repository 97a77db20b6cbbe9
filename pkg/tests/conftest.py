import random

import pytest

from toricpvf.fan import Fan
from toricpvf.generators import hirzebruch, product_projective, projective_space


def del_pezzo_6():
    # P^2 blown up at the three torus-fixed points: hexagonal fan
    rays = ((1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1))
    cones = tuple((t, (t + 1) % 6) for t in range(6))
    return Fan(2, rays, cones)


TEST_FANS = {
    "P1": lambda: projective_space(1),
    "P2": lambda: projective_space(2),
    "P3": lambda: projective_space(3),
    "F0": lambda: hirzebruch(0),
    "F1": lambda: hirzebruch(1),
    "F2": lambda: hirzebruch(2),
    "F3": lambda: hirzebruch(3),
    "P1xP1": lambda: product_projective([1, 1]),
    "P2xP1": lambda: product_projective([2, 1]),
    "P1xP1xP1": lambda: product_projective([1, 1, 1]),
    "dP6": del_pezzo_6,
}


def random_unimodular(n, rng, steps=12):
    """Random element of GL(n, Z) as a product of elementary moves."""
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        move = rng.randrange(3) if n > 1 else 2
        if move == 0:
            i, j = rng.sample(range(n), 2)
            c = rng.choice([-2, -1, 1, 2])
            u[i] = [a + c * b for a, b in zip(u[i], u[j])]
        elif move == 1:
            i, j = rng.sample(range(n), 2)
            u[i], u[j] = u[j], u[i]
        else:
            i = rng.randrange(n)
            u[i] = [-a for a in u[i]]
    return u


@pytest.fixture(params=sorted(TEST_FANS))
def named_fan(request):
    return request.param, TEST_FANS[request.param]()


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.call_passed = rep.passed
