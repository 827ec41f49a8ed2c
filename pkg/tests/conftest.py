import random

import pytest

from segrecalc.polyring import Polynomial, Ring


@pytest.fixture
def p2():
    return Ring("P2", ("x", "y", "z"))


@pytest.fixture
def p3():
    return Ring("P3", ("x", "y", "z", "w"))


def variables(ring):
    return tuple(Polynomial.variable(ring, i) for i in range(ring.nvars))


def random_poly(rng: random.Random, ring: Ring, max_degree: int = 3, max_terms: int = 4) -> Polynomial:
    """Small random polynomial with single-digit coefficients."""
    terms = []
    for _ in range(rng.randint(0, max_terms)):
        exps = [0] * ring.nvars
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(ring.nvars)] += 1
        terms.append((tuple(exps), rng.randint(-9, 9)))
    return Polynomial(ring, terms)


def random_monomial(rng: random.Random, nvars: int, max_degree: int = 4) -> tuple:
    exps = [0] * nvars
    for _ in range(rng.randint(0, max_degree)):
        exps[rng.randrange(nvars)] += 1
    return tuple(exps)
