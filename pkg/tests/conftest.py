import random

import pytest

from nonion.bases import nonion_basis, tu3_basis
from nonion.field import FieldElem
from nonion.matrix import Mat3


def random_field_elem(rng: random.Random, density: float = 0.5, bound: int = 99) -> FieldElem:
    nums = [
        rng.randint(-bound, bound) if rng.random() < density else 0 for _ in range(8)
    ]
    return FieldElem(nums, rng.randint(1, bound))


def random_mat3(rng: random.Random, density: float = 0.4, bound: int = 9) -> Mat3:
    return Mat3(
        [random_field_elem(rng, density=density, bound=bound) for _ in range(9)]
    )


@pytest.fixture(scope="session")
def nonions():
    return nonion_basis()


@pytest.fixture(scope="session")
def tu3():
    return tu3_basis()


@pytest.fixture()
def rng():
    return random.Random(0x5EED)
