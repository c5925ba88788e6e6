import random

import pytest

from darcais import ArithmeticFunction, IntPoly


@pytest.fixture
def sigma_g():
    return ArithmeticFunction.sigma()


@pytest.fixture
def identity_g():
    return ArithmeticFunction.identity()


def random_table(seed: int, length: int, low: int = -9, high: int = 9) -> ArithmeticFunction:
    """A reproducible table-backed g with g(1) = 1."""
    rng = random.Random(seed)
    values = [1] + [rng.randint(low, high) for _ in range(length - 1)]
    return ArithmeticFunction.from_table(values, name=f"table{seed}")


def expand_product(factors) -> IntPoly:
    """Multiply out a list of coefficient tuples (constant term first)."""
    out = IntPoly.one()
    for coeffs in factors:
        out = out * IntPoly(coeffs)
    return out


# The factored forms of the first seven integer polynomials for g = sigma,
# used as golden values; each inner tuple is one factor, constant term first.
SIGMA_FACTORED = {
    0: [(1,)],
    1: [(0, 1)],
    2: [(0, 1), (3, 1)],
    3: [(0, 1), (8, 1), (1, 1)],
    4: [(0, 1), (14, 1), (3, 1), (1, 1)],
    5: [(0, 1), (6, 1), (3, 1), (8, 21, 1)],
    6: [(0, 1), (10, 1), (1, 1), (144, 181, 34, 1)],
}
