import numpy as np
import pytest

from sqtkit import random_state


def make_corpus(per_n: int, ns=(2, 3, 4), seed: int = 20260810):
    rng = np.random.default_rng(seed)
    return [random_state(n, rng) for n in ns for _ in range(per_n)]


@pytest.fixture(scope="session")
def small_corpus():
    """~120 Haar-random states over n = 2, 3, 4 for the module tests."""
    return make_corpus(40)


@pytest.fixture(scope="session")
def big_corpus():
    """1002 Haar-random states over n = 2, 3, 4 for the acceptance suite."""
    return make_corpus(334)
