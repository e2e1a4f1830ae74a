import pytest

from downcat.corpus import discrete, w3, w3_prime
from downcat.fincat import FinCategory
from downcat.reedy import truncated_simplex_category


@pytest.fixture(scope="session")
def rc_w3():
    return w3()


@pytest.fixture(scope="session")
def rc_w3_prime():
    return w3_prime()


@pytest.fixture(scope="session")
def ts1():
    return truncated_simplex_category(1)


@pytest.fixture(scope="session")
def ts2():
    return truncated_simplex_category(2)


@pytest.fixture(scope="session")
def rc_discrete2():
    return discrete(2)


@pytest.fixture(scope="session")
def parallel_pair():
    """The free parallel pair: two objects, two arrows a, b: 0 -> 1."""
    return FinCategory.build(
        ("0", "1"),
        [(0, 0, "id0"), (1, 1, "id1"), (0, 1, "a"), (0, 1, "b")],
        (0, 1),
        {
            (0, 0): 0,
            (1, 1): 1,
            (2, 0): 2,
            (1, 2): 2,
            (3, 0): 3,
            (1, 3): 3,
        },
        name="pair",
    )


@pytest.fixture(scope="session")
def poset01():
    """The walking arrow as a poset {0 <= 1}."""
    return FinCategory.build(
        ("0", "1"),
        [(0, 0, "id0"), (1, 1, "id1"), (0, 1, "le")],
        (0, 1),
        {(0, 0): 0, (1, 1): 1, (2, 0): 2, (1, 2): 2},
        name="0<=1",
    )
