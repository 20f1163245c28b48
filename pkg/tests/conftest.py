import random

import pytest

import uncluttered as U


@pytest.fixture(scope="session")
def census():
    """Census levels 0..7, shared so each test file pays the build once."""
    return {n: U.enumerate_graphs(n) for n in range(8)}


@pytest.fixture(scope="session")
def uncluttered_census(census):
    """Uncluttered census graphs keyed by vertex count, 0..7."""
    return {n: tuple(g for g in reps if U.is_uncluttered(g) is None)
            for n, reps in census.items()}


@pytest.fixture
def rng():
    return random.Random(0x5EED)
