import random

import pytest

import stablebetti as sb


@pytest.fixture(scope="session")
def corpus_n3():
    """Every nonzero strongly stable ideal with n <= 3, generator degrees <= 4."""
    out = []
    for n in (1, 2, 3):
        out.extend(sb.enumerate_strongly_stable(n, 4))
    return out


@pytest.fixture(scope="session")
def corpus_random_n4():
    """200 seeded random strongly stable ideals in 4 variables, degrees <= 5."""
    rng = random.Random(20260810)
    return [sb.random_strongly_stable(4, 5, rng) for _ in range(200)]
