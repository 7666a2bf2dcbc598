import typing
from fractions import Fraction

import numpy as np
import pytest

from icosaquintic import CycQ, QuinticSolver, SolveOptions


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20231018)


@pytest.fixture
def solver() -> QuinticSolver:
    return QuinticSolver(SolveOptions())


@pytest.fixture
def unit_disc(rng) -> typing.Callable[[int], np.ndarray]:
    """Sampler of uniform points in the closed unit disc."""

    def sample(size: int) -> np.ndarray:
        r = np.sqrt(rng.uniform(0, 1, size))
        return r * np.exp(2j * np.pi * rng.uniform(0, 1, size))

    return sample


@pytest.fixture
def random_cycq(rng) -> typing.Callable[[], CycQ]:
    """Sampler of elements of Q(ε) with small rational coordinates."""

    def sample() -> CycQ:
        coords = (Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 6))) for _ in range(4))
        return CycQ(*coords)

    return sample
